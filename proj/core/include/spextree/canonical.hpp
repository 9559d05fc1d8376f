#pragma once

#include <cstdint>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree {

/// Canonical labeling by individualization-refinement.
///
/// The canonical form is the lexicographically least upper-triangle adjacency string
/// over all leaves of the search tree; equal codes mean isomorphic graphs.
struct CanonicalForm {
    /// labeling[i] is the original vertex placed at canonical position i.
    std::vector<int> labeling;
    /// Upper-triangle adjacency bits in canonical order, row-major, packed MSB first.
    std::vector<std::uint64_t> code;
    /// Orbit of labeling.back() under the automorphism group, sorted.
    std::vector<int> last_orbit;
    /// Generators of the automorphism group found during the search (as images).
    std::vector<std::vector<int>> generators;
    std::uint64_t leaves = 0;
};

CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Largest order accepted by nonisomorphic_graphs.
inline constexpr int kGraphEnumerationMaxOrder = 9;
/// Largest order accepted by nonisomorphic_trees.
inline constexpr int kTreeEnumerationMaxOrder = 18;

/// One representative per isomorphism class of graphs on n vertices, generated by
/// canonical augmentation (vertex addition, accepted when the new vertex lies in the
/// orbit of the canonically last vertex). Results are cached per order.
const std::vector<Graph>& nonisomorphic_graphs(int n);

/// One representative per isomorphism class of trees on n vertices, grown by leaf
/// addition with canonical-form deduplication.
const std::vector<Graph>& nonisomorphic_trees(int n);

}  // namespace spextree
