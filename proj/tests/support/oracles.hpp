#pragma once

// Slow, obviously-correct reference computations used to check the library.
// Nothing here shares code with the algorithms under test.

#include <cstdint>
#include <random>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree::ref {

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
double dense_rho(const Graph& g);

/// Largest real eigenvalue of a small nonnegative matrix from a general eigensolver.
double dense_matrix_rho(const std::vector<std::vector<double>>& m);

/// Minimum vertex cover by trying subsets in order of size. Up to ~20 vertices.
int brute_min_cover(const Graph& g);

/// Maximum matching by exhaustive recursion over edges.
int brute_max_matching(const Graph& g);

/// Tries every injective map pattern -> host; edges are checked only on complete maps.
bool brute_contains(const Graph& host, const Graph& pattern);

/// Tries every permutation.
bool brute_isomorphic(const Graph& a, const Graph& b);

/// Class-to-class neighbour counts for a vertex partition; empty if the partition is
/// not equitable.
std::vector<std::vector<double>> count_quotient(const Graph& g, const std::vector<int>& class_of, int classes);

/// Number of isomorphism classes on n <= 6 vertices via the minimum adjacency string over
/// all permutations.
int brute_count_graphs(int n);

/// Maximum edge count of a graph on q vertices containing none of the patterns, and the
/// number of isomorphism classes attaining it. Brute force over labeled graphs.
struct BruteExtremal {
    int max_edges = -1;
    int classes = 0;
};
BruteExtremal brute_ex(int q, const std::vector<Graph>& patterns);

/// Maximum spectral radius over F-free graphs on n <= 6 vertices (all labeled graphs)
/// and the number of isomorphism classes within 1e-8 of it.
struct BruteSpex {
    double rho = 0.0;
    int classes = 0;
};
BruteSpex brute_spex(int n, const Graph& tree);

// Random instances.
Graph random_tree(int l, std::mt19937_64& rng);
Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace spextree::ref
