#pragma once

#include <vector>

#include "spextree/graph.hpp"

namespace spextree {

struct CoveringPattern {
    Graph graph;
    /// The first covering (by size, then colex) whose induced subgraph gave this pattern;
    /// empty for the clique pattern.
    std::vector<int> cover;
};

/// The patterns F[S] over coverings S of F with |S| <= q, up to isomorphism, or the
/// single clique K_{q+1} when the cover number is q + 1.
struct CoveringFamily {
    int q = 0;
    bool clique = false;
    std::vector<CoveringPattern> patterns;
};

/// Throws DomainError for stars (q = 0) and BudgetError when the number of candidate
/// subsets exceeds kCoveringSubsetCap.
CoveringFamily covering_family(const Graph& tree);

inline constexpr long long kCoveringSubsetCap = 50'000'000;

/// Isomorphism test by backtracking over degree-compatible bijections. Meant for
/// small patterns.
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace spextree
