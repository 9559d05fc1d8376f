#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spextree {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted so that edge enumeration and equality are
/// canonical for a given labeling. Loops, duplicate edges and out-of-range
/// endpoints are rejected with RangeError.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    /// Adds edge {u,v}. Returns false if it was already present.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept;
    int min_degree() const noexcept;

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const int> vertices) const;
    /// Relabels vertex v as perm[v].
    Graph relabeled(std::span<const int> perm) const;

    bool is_connected() const;
    /// Component id for every vertex, ids assigned in order of smallest member.
    std::vector<int> components() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

// Basic families and operations.
Graph empty_graph(int order);
Graph complete_graph(int order);
Graph complete_bipartite(int a, int b);
Graph path_graph(int order);
Graph cycle_graph(int order);
/// p disjoint edges on vertices (0,1),(2,3),... plus order-2p isolated vertices.
Graph matching_graph(int order, int p);
Graph disjoint_union(const Graph& first, const Graph& second);
/// Join product: disjoint union plus every edge between the two sides.
/// Vertices of `second` are re-indexed after those of `first`.
Graph join(const Graph& first, const Graph& second);

/// Eccentricity-based diameter; -1 for disconnected graphs.
int diameter(const Graph& g);

// Serialization.
/// Standard graph6 encoding without the optional ">>graph6<<" header.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "u v" per line, preceded by a "# order N" comment that preserves isolated vertices.
std::string to_edge_list(const Graph& g);
/// Parses "u v" lines; '#' starts a comment. A "# order N" comment fixes the vertex
/// count, otherwise it is one more than the largest endpoint seen.
Graph parse_edge_list(std::string_view text);

}  // namespace spextree
