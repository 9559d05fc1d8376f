#include "spextree/covering.hpp"

#include <algorithm>
#include <cstdint>

#include "spextree/error.hpp"
#include "spextree/tree.hpp"

namespace spextree {

namespace {

long long subsets_up_to(int l, int q) {
    long long total = 0, binom = 1;
    for (int k = 0; k <= q; ++k) {
        total += binom;
        if (total > kCoveringSubsetCap)
            return total;
        binom = binom * (l - k) / (k + 1);
    }
    return total;
}

}  // namespace

bool isomorphic_small(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence())
        return false;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = a.has_edge(u, v) == b.has_edge(image[static_cast<std::size_t>(u)], w);
            if (!ok)
                continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, v + 1))
                return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

CoveringFamily covering_family(const Graph& tree) {
    const TreeProfile prof = profile(tree);
    if (prof.q < 1)
        throw DomainError("covering family is undefined for stars (q = 0)");
    CoveringFamily fam;
    fam.q = prof.q;
    if (prof.beta == prof.q + 1) {
        fam.clique = true;
        fam.patterns.push_back({complete_graph(prof.q + 1), {}});
        return fam;
    }
    const int l = prof.l;
    if (l > 63)
        throw BudgetError("covering family tree order", 63, l);
    const long long subsets = subsets_up_to(l, prof.q);
    if (subsets > kCoveringSubsetCap)
        throw BudgetError("covering subset count", kCoveringSubsetCap, subsets);

    std::vector<std::uint64_t> edge_masks;
    for (auto [u, v] : tree.edges())
        edge_masks.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    auto covers = [&](std::uint64_t s) {
        return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint64_t e) { return (e & s) != 0; });
    };

    const std::uint64_t limit = std::uint64_t{1} << l;
    for (int k = prof.beta; k <= prof.q; ++k) {
        // Gosper's hack walks the k-subsets in colex order.
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
            if (covers(s)) {
                std::vector<int> cover;
                for (int v = 0; v < l; ++v)
                    if (s >> v & 1)
                        cover.push_back(v);
                Graph pattern = tree.induced(cover);
                bool seen = std::any_of(fam.patterns.begin(), fam.patterns.end(),
                                        [&](const CoveringPattern& p) { return isomorphic_small(p.graph, pattern); });
                if (!seen)
                    fam.patterns.push_back({std::move(pattern), std::move(cover)});
            }
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            if (r == 0)
                break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return fam;
}

}  // namespace spextree
