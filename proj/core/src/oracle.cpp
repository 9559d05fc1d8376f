#include "spextree/oracle.hpp"

#include <algorithm>
#include <map>

#include "spextree/canonical.hpp"
#include "spextree/error.hpp"
#include "spextree/tree.hpp"

namespace spextree {

namespace {

// Keeps every candidate within the tie tolerance of the best value seen.
class MaximizerPool {
public:
    explicit MaximizerPool(double tie) : tie_(tie) {}

    bool worth_checking(double rho) const { return pool_.empty() || rho >= best_ - tie_; }

    void offer(Maximizer m) {
        if (!pool_.empty() && m.rho.value < best_ - tie_)
            return;
        if (pool_.empty() || m.rho.value > best_) {
            best_ = m.rho.value;
            std::erase_if(pool_, [&](const Maximizer& x) { return x.rho.value < best_ - tie_; });
        }
        pool_.push_back(std::move(m));
    }

    std::vector<Maximizer> take(bool dedup) {
        if (dedup) {
            std::map<std::vector<std::uint64_t>, Maximizer> unique;
            for (auto& m : pool_)
                unique.try_emplace(canonical_form(m.graph).code, std::move(m));
            pool_.clear();
            for (auto& [code, m] : unique)
                pool_.push_back(std::move(m));
        }
        return std::move(pool_);
    }

private:
    double tie_;
    double best_ = 0.0;
    std::vector<Maximizer> pool_;
};

void finish(OracleResult& out, MaximizerPool& pool, bool dedup) {
    out.maximizers = pool.take(dedup);
    if (!out.maximizers.empty())
        out.optimum = std::max_element(out.maximizers.begin(), out.maximizers.end(), [](const auto& a, const auto& b) {
                          return a.rho.value < b.rho.value;
                      })->rho;
}

Graph truncated_join(const Graph& core, int pairs, int singles) {
    return join(core, matching_graph(2 * pairs + singles, pairs));
}

}  // namespace

std::string_view to_string(OracleLevel level) {
    switch (level) {
    case OracleLevel::exhaustive:
        return "exhaustive";
    case OracleLevel::joinform_all_r:
        return "joinform-all-r";
    case OracleLevel::joinform_matching_r:
        return "joinform-matching-r";
    }
    return "unknown";
}

std::string OracleResult::label() const {
    switch (level) {
    case OracleLevel::exhaustive:
        return "exhaustive";
    case OracleLevel::joinform_all_r:
        return "join-form optimum (all R)";
    case OracleLevel::joinform_matching_r:
        return "restricted-family optimum";
    }
    return "unknown";
}

OracleResult spex_exhaustive(int n, const Graph& tree, const OracleOptions& options) {
    if (n < 1)
        throw RangeError("exhaustive oracle needs n >= 1");
    if (n > kExhaustiveMaxOrder)
        throw BudgetError("exhaustive oracle order", kExhaustiveMaxOrder, n);
    OracleResult out;
    out.level = OracleLevel::exhaustive;
    out.n = n;
    MaximizerPool pool(options.tie_tolerance);
    for (const Graph& g : nonisomorphic_graphs(n)) {
        ++out.candidates;
        auto w = contains_tree(g, tree, options.budget);
        if (w.status == SearchStatus::inconclusive) {
            out.inconclusive = true;
            continue;
        }
        if (w.found())
            continue;
        ++out.free_candidates;
        Maximizer m;
        m.rho = spectral_radius(g, options.tolerance);
        if (!pool.worth_checking(m.rho.value))
            continue;
        m.graph = g;
        pool.offer(std::move(m));
    }
    // Representatives are already pairwise non-isomorphic.
    finish(out, pool, false);
    return out;
}

OracleResult spex_joinform(int n, const Graph& tree, bool all_r, const OracleOptions& options) {
    const TreeProfile prof = profile(tree);
    const int q = prof.q;
    if (q < 1)
        throw DomainError("join-form oracle is undefined for stars (q = 0)");
    if (q > kJoinformMaxQ)
        throw BudgetError("join-form q", kJoinformMaxQ, q);
    if (n <= q)
        throw RangeError("join-form oracle needs n > q");
    if (all_r && n - q > kJoinformAllRMaxOrder)
        throw BudgetError("join-form large side order (all R) at n=" + std::to_string(n), kJoinformAllRMaxOrder,
                          n - q);

    OracleResult out;
    out.n = n;
    out.level = all_r ? OracleLevel::joinform_all_r : OracleLevel::joinform_matching_r;
    out.restricted = !all_r;
    MaximizerPool pool(options.tie_tolerance);
    const int l = prof.l;
    const int m = n - q;

    if (all_r) {
        const auto& cores = nonisomorphic_graphs(q);
        std::vector<std::pair<SpectralValue, std::pair<int, int>>> ranked;
        const auto& sides = nonisomorphic_graphs(m);
        for (int qi = 0; qi < static_cast<int>(cores.size()); ++qi)
            for (int ri = 0; ri < static_cast<int>(sides.size()); ++ri) {
                ++out.candidates;
                Graph g = join(cores[static_cast<std::size_t>(qi)], sides[static_cast<std::size_t>(ri)]);
                ranked.push_back({spectral_radius(g, options.tolerance), {qi, ri}});
            }
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.first.value > b.first.value; });
        for (const auto& [rho, idx] : ranked) {
            if (!pool.worth_checking(rho.value))
                break;
            const Graph& core = cores[static_cast<std::size_t>(idx.first)];
            Graph g = join(core, sides[static_cast<std::size_t>(idx.second)]);
            auto w = contains_tree(g, tree, options.budget);
            if (w.status == SearchStatus::inconclusive) {
                out.inconclusive = true;
                continue;
            }
            if (w.found())
                continue;
            ++out.free_candidates;
            pool.offer({std::move(g), rho, core, 0});
        }
        finish(out, pool, true);
        return out;
    }

    // An embedding of F uses at most l vertices of the large side, so at most l pairs
    // and l unmatched vertices matter. Freeness is monotone in p and rho increases
    // with p, so each core contributes its largest free p.
    const int pmax = m / 2;
    for (const Graph& core : nonisomorphic_graphs(q)) {
        out.candidates += static_cast<std::uint64_t>(pmax + 1);
        auto is_free = [&](int p) {
            Graph host = truncated_join(core, std::min(p, l), std::min(m - 2 * p, l));
            auto w = contains_tree(host, tree, options.budget);
            if (w.status == SearchStatus::inconclusive)
                out.inconclusive = true;
            return w.status == SearchStatus::absent;
        };
        if (!is_free(0))
            continue;
        int lo = 0, hi = pmax;
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            if (is_free(mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        out.free_candidates += static_cast<std::uint64_t>(lo + 1);
        Graph g = join(core, matching_graph(m, lo));
        Maximizer cand;
        cand.rho = spectral_radius(g, options.tolerance);
        if (!pool.worth_checking(cand.rho.value))
            continue;
        cand.graph = std::move(g);
        cand.core = core;
        cand.matched_pairs = lo;
        pool.offer(std::move(cand));
    }
    // Beyond n = 2q+1 the core is recognisable by degree, so distinct (core, p) pairs
    // already give non-isomorphic graphs.
    finish(out, pool, n <= 2 * q + 1);
    return out;
}

}  // namespace spextree
