#include "spextree/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "spextree/canonical.hpp"
#include "spextree/constructions.hpp"
#include "spextree/error.hpp"
#include "spextree/tree.hpp"

namespace spextree {

namespace {

// Subgraph test for hosts and patterns on at most 8 vertices using adjacency masks.
class TinyEmbedder {
public:
    explicit TinyEmbedder(const Graph& pattern) : k_(pattern.order()) {
        for (int v = 0; v < k_; ++v) {
            std::uint32_t mask = 0;
            for (int w : pattern.neighbors(v))
                mask |= 1u << w;
            adj_[static_cast<std::size_t>(v)] = mask;
        }
    }

    bool embeds(const std::uint32_t* host, int n) const {
        if (k_ > n)
            return false;
        int image[8];
        return extend(host, n, 0, 0, image);
    }

private:
    bool extend(const std::uint32_t* host, int n, int v, std::uint32_t used, int* image) const {
        if (v == k_)
            return true;
        for (int h = 0; h < n; ++h) {
            if (used >> h & 1)
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj_[static_cast<std::size_t>(v)] >> u & 1)
                    ok = (host[h] >> image[u]) & 1;
            if (!ok)
                continue;
            image[v] = h;
            if (extend(host, n, v + 1, used | (1u << h), image))
                return true;
        }
        return false;
    }

    int k_;
    std::uint32_t adj_[8] = {};
};

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

void attach_bounds(Prediction& pred, const TreeProfile& prof, int n) {
    if (prof.q < 1 || prof.delta < 2 || n - prof.q < 2)
        return;
    pred.lower = quotient_spectral_radius(quotient_S(n, prof.q, 1));
    pred.lower_printed = closed_form_rho_S0(n, prof.q).printed;
    pred.upper = join_degree_bound(prof.q - 1, prof.delta - 1, prof.q, n);
    pred.anchor = std::sqrt(static_cast<double>(prof.q) * n);
}

void set_exact(Prediction& pred, GraphDescriptor g, const char* theorem, const char* case_tag) {
    pred.kind = PredictionKind::exact_unique;
    pred.theorem = theorem;
    pred.case_tag = case_tag;
    pred.graph_rho.push_back(g.spectral_radius());
    pred.graphs.push_back(std::move(g));
}

}  // namespace

std::string_view to_string(PredictionKind kind) {
    switch (kind) {
    case PredictionKind::exact_unique:
        return "exact-unique";
    case PredictionKind::exact_set:
        return "exact-set";
    case PredictionKind::family_containment:
        return "family-containment";
    case PredictionKind::bounds_only:
        return "bounds-only";
    case PredictionKind::out_of_domain:
        return "out-of-domain";
    }
    return "unknown";
}

GraphDescriptor GraphDescriptor::S(int n, int k, int p) {
    GraphDescriptor d;
    d.family = Family::S;
    d.n = n;
    d.k = k;
    d.p = p;
    return d;
}

GraphDescriptor GraphDescriptor::K(int a, int b) {
    GraphDescriptor d;
    d.family = Family::K;
    d.n = a + b;
    d.k = a;
    return d;
}

GraphDescriptor GraphDescriptor::Join(Graph core, int n) {
    GraphDescriptor d;
    d.family = Family::join;
    d.n = n;
    d.k = core.order();
    d.core = std::move(core);
    return d;
}

Graph GraphDescriptor::instantiate() const {
    switch (family) {
    case Family::S:
        return construct_S(n, k, p);
    case Family::K:
        return complete_bipartite(k, n - k);
    case Family::join:
        return join(core, empty_graph(n - k));
    }
    return Graph();
}

SpectralValue GraphDescriptor::spectral_radius(double tolerance) const {
    switch (family) {
    case Family::S:
        return quotient_spectral_radius(quotient_S(n, k, p));
    case Family::K:
        return quotient_spectral_radius(QuotientMatrix({{0, double(n - k)}, {double(k), 0}}, {k, n - k}));
    case Family::join:
        break;
    }
    return spextree::spectral_radius(instantiate(), tolerance);
}

std::string GraphDescriptor::label() const {
    switch (family) {
    case Family::S:
        return "S(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(p) + ")";
    case Family::K:
        return "K(" + std::to_string(k) + "," + std::to_string(n - k) + ")";
    case Family::join:
        return "join(" + to_graph6(core) + "," + std::to_string(n) + ")";
    }
    return "?";
}

Graph GraphDescriptor::join_core() const {
    switch (family) {
    case Family::S:
        return complete_graph(k);
    case Family::K:
        return empty_graph(k);
    case Family::join:
        return core;
    }
    return Graph();
}

int GraphDescriptor::matched_pairs() const { return family == Family::S ? p : 0; }

ExtremalSet ex_brute(int q, const CoveringFamily& family) {
    if (q < 1)
        throw RangeError("ex_brute needs q >= 1, got " + std::to_string(q));
    if (q > kExBruteMaxOrder)
        throw BudgetError("ex_brute order", kExBruteMaxOrder, q);
    for (const auto& p : family.patterns)
        if (p.graph.order() > 8)
            throw BudgetError("ex_brute pattern order", 8, p.graph.order());

    ExtremalSet out;
    out.q = q;
    out.patterns = family;
    std::vector<TinyEmbedder> embedders;
    for (const auto& p : family.patterns)
        embedders.emplace_back(p.graph);

    std::vector<Edge> slots;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            slots.emplace_back(u, v);
    const int m = static_cast<int>(slots.size());

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::pair<std::vector<std::uint64_t>, Graph>> found;
    for (int e = m; e >= 0 && found.empty(); --e) {
        // Gosper's hack over the e-subsets of vertex pairs.
        std::uint32_t s = e == 0 ? 0 : (e == 32 ? ~0u : ((1u << e) - 1));
        const std::uint64_t limit = std::uint64_t{1} << m;
        while (s < limit) {
            std::uint32_t host[8] = {};
            for (int i = 0; i < m; ++i)
                if (s >> i & 1) {
                    host[slots[static_cast<std::size_t>(i)].first] |= 1u << slots[static_cast<std::size_t>(i)].second;
                    host[slots[static_cast<std::size_t>(i)].second] |= 1u << slots[static_cast<std::size_t>(i)].first;
                }
            bool free = std::none_of(embedders.begin(), embedders.end(),
                                     [&](const TinyEmbedder& t) { return t.embeds(host, q); });
            if (free) {
                Graph g(q);
                for (int i = 0; i < m; ++i)
                    if (s >> i & 1)
                        g.add_edge(slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second);
                auto form = canonical_form(g);
                if (seen.insert(form.code).second)
                    found.emplace_back(form.code, canonical_graph(g));
            }
            if (s == 0)
                break;
            const std::uint32_t c = s & (~s + 1);
            const std::uint64_t r = std::uint64_t{s} + c;
            if (r >= limit)
                break;
            s = static_cast<std::uint32_t>((((r ^ s) >> 2) / c) | r);
        }
        if (!found.empty())
            out.max_edges = e;
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [code, g] : found)
        out.witnesses.push_back(std::move(g));
    return out;
}

int confidence_threshold(int l) { return std::max(l * l, 20); }

Prediction classify(const Graph& tree, int n, const ClassifyOptions& options) {
    if (!is_tree(tree))
        throw RangeError("classify requires a tree");
    const int l = tree.order();
    if (n < l)
        throw RangeError("classify needs n >= l, got n=" + std::to_string(n) + ", l=" + std::to_string(l));

    Prediction pred;
    pred.n = n;
    pred.threshold = confidence_threshold(l);
    pred.below_threshold = n < pred.threshold;

    if (l < 2) {
        pred.theorem = "trivial-star";
        pred.case_tag = "single-vertex";
        pred.warnings.push_back("a single vertex is contained in every nonempty graph");
        return pred;
    }
    const TreeProfile prof = profile(tree);
    if (prof.q == 0) {
        pred.theorem = "trivial-star";
        pred.case_tag = "star";
        pred.warnings.push_back("stars are outside the classification: the extremal problem is trivial");
        return pred;
    }
    if (pred.below_threshold)
        pred.warnings.push_back("n=" + std::to_string(n) + " is below the confidence threshold " +
                                std::to_string(pred.threshold) + "; exactness is unconfirmed");
    attach_bounds(pred, prof, n);

    std::optional<SpiderProfile> spider = prof.spider;
    if (spider && options.spider_center)
        spider = spider_profile(tree, options.spider_center);

    if (spider) {
        const auto& sp = *spider;
        const int k_r = (l - sp.r - 1) / 2;
        if (sp.s >= 1 && sp.r >= 1)
            set_exact(pred, GraphDescriptor::S(n, k_r, 0), "spider-classification", "even-and-odd-legs");
        else if (sp.s >= 1)
            set_exact(pred, GraphDescriptor::S(n, (l - 3) / 2, 1), "spider-classification", "even-legs-only");
        else if (sp.r1 >= 1)
            set_exact(pred, GraphDescriptor::S(n, k_r, 1), "spider-classification", "odd-leg-at-least-5");
        else if (sp.r2 >= 1 && sp.r3 <= 1)
            set_exact(pred, GraphDescriptor::S(n, k_r, sp.r - 1), "spider-classification",
                      "length-3-legs-at-most-one-unit-leg");
        else if (sp.r2 >= 1)
            set_exact(pred, GraphDescriptor::S(n, k_r, (2 * n - l + sp.r + 1) / 4), "spider-classification",
                      "length-3-legs-several-unit-legs");
        else
            throw Error("spider with legs (" + join_ints(sp.legs) + ") fits no spider case");
        return pred;
    }

    if (l % 2 == 0 && prof.beta == l / 2) {
        set_exact(pred, GraphDescriptor::S(n, (l - 2) / 2, 0), "cover-number-characterization",
                  "even-order-maximum-cover");
        return pred;
    }
    if (l % 2 == 1 && prof.beta == (l - 1) / 2 && prof.delta >= 2) {
        set_exact(pred, GraphDescriptor::S(n, (l - 3) / 2, 1), "cover-number-characterization",
                  "odd-order-maximum-cover");
        return pred;
    }

    if (prof.delta == 1) {
        pred.theorem = "leaf-in-small-side";
        if (prof.beta == prof.q + 1) {
            set_exact(pred, GraphDescriptor::S(n, prof.q, 0), "leaf-in-small-side", "clique-cover");
            return pred;
        }
        if (prof.q > options.max_family_order) {
            pred.kind = PredictionKind::family_containment;
            pred.case_tag = "symbolic-family";
            pred.symbolic = true;
            pred.warnings.push_back("q=" + std::to_string(prof.q) + " exceeds " +
                                    std::to_string(options.max_family_order) +
                                    "; the containing family is reported symbolically");
            return pred;
        }
        const ExtremalSet ex = ex_brute(prof.q, covering_family(tree));
        if (ex.witnesses.size() == 1 && ex.max_edges == 0) {
            set_exact(pred, GraphDescriptor::K(prof.q, n - prof.q), "leaf-in-small-side", "edgeless-extremal");
            return pred;
        }
        if (ex.witnesses.size() == 1) {
            set_exact(pred, GraphDescriptor::Join(ex.witnesses.front(), n), "leaf-in-small-side",
                      "unique-extremal-core");
            return pred;
        }
        pred.kind = PredictionKind::family_containment;
        pred.case_tag = "several-extremal-cores";
        std::vector<std::pair<SpectralValue, GraphDescriptor>> members;
        for (const auto& w : ex.witnesses) {
            auto d = GraphDescriptor::Join(w, n);
            members.emplace_back(d.spectral_radius(), std::move(d));
        }
        std::stable_sort(members.begin(), members.end(),
                         [](const auto& a, const auto& b) { return a.first.value > b.first.value + 1e-12; });
        for (auto& [rho, d] : members) {
            pred.graph_rho.push_back(rho);
            pred.graphs.push_back(std::move(d));
        }
        pred.warnings.push_back("several members; which of them are extremal is not determined");
        return pred;
    }

    pred.kind = PredictionKind::bounds_only;
    pred.theorem = "spectral-sandwich";
    pred.case_tag = "minimum-degree-at-least-2";
    return pred;
}

SpectralBounds bounds(const Graph& tree, int n) {
    const TreeProfile prof = profile(tree);
    if (prof.q < 1)
        throw DomainError("bounds are undefined for stars (q = 0)");
    if (prof.delta < 2)
        throw DomainError("bounds need delta >= 2; with delta = 1 the containing family applies");
    if (n - prof.q < 2 || n < prof.l)
        throw RangeError("bounds need n >= l, got n=" + std::to_string(n));
    Prediction tmp;
    attach_bounds(tmp, prof, n);
    return {*tmp.lower, *tmp.lower_printed, *tmp.upper, *tmp.anchor};
}

}  // namespace spextree
