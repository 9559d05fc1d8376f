#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spextree/covering.hpp"
#include "spextree/graph.hpp"

namespace spextree {

enum class SearchStatus { found, absent, inconclusive };

std::string_view to_string(SearchStatus status);

/// Result of a subgraph search. `mapping[v]` is the host image of pattern vertex v
/// when status is found, empty otherwise.
struct EmbeddingWitness {
    SearchStatus status = SearchStatus::absent;
    std::vector<int> mapping;
    std::uint64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

struct SearchBudget {
    /// Backtracking nodes allowed before giving up as inconclusive; 0 means unlimited.
    std::uint64_t max_nodes = 0;
};

/// Decides whether the tree embeds in the host as a (not necessarily induced) subgraph.
///
/// Internal tree vertices are placed by backtracking from a maximum-degree root in BFS
/// order, candidates sorted by host degree; leaves are assigned last by bipartite
/// matching. Host twins (N(u)-v = N(v)-u) are interchangeable, so only one unused
/// twin is tried per choice.
EmbeddingWitness contains_tree(const Graph& host, const Graph& tree, const SearchBudget& budget = {});

/// Subgraph search for an arbitrary small pattern. Isolated pattern vertices go to
/// any spare host vertices.
EmbeddingWitness find_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget = {});

/// True iff no pattern of the family is a subgraph of the host.
bool is_family_free(const Graph& host, const CoveringFamily& family);

/// True iff mapping is injective and carries every pattern edge onto a host edge.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& mapping);

}  // namespace spextree
