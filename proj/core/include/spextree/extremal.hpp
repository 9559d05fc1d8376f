#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spextree/covering.hpp"
#include "spextree/graph.hpp"
#include "spextree/spectral.hpp"

namespace spextree {

enum class PredictionKind { exact_unique, exact_set, family_containment, bounds_only, out_of_domain };

std::string_view to_string(PredictionKind kind);

/// A graph named by constructor parameters.
///
/// S: construct_S(n, k, p). K: complete bipartite K_{k, n-k}. Join: core joined with
/// n - core.order() independent vertices.
struct GraphDescriptor {
    enum class Family { S, K, join };

    Family family = Family::S;
    int n = 0;
    int k = 0;
    int p = 0;
    Graph core;

    static GraphDescriptor S(int n, int k, int p);
    static GraphDescriptor K(int a, int b);
    static GraphDescriptor Join(Graph core, int n);

    Graph instantiate() const;
    /// Exact spectral radius where a quotient exists (S, K), power iteration otherwise.
    SpectralValue spectral_radius(double tolerance = 1e-10) const;
    /// S(n,k,p), K(a,b) or join(<graph6>,n).
    std::string label() const;
    /// The side of size q joined to everything, and the matching size on the other side,
    /// when the graph is Q v (pK2 + rest).
    Graph join_core() const;
    int matched_pairs() const;
};

struct Prediction {
    PredictionKind kind = PredictionKind::out_of_domain;
    /// Which characterization produced the prediction, and the branch inside it.
    std::string theorem;
    std::string case_tag;
    int n = 0;
    /// Exact family, or the members of the containing family ranked by spectral radius.
    std::vector<GraphDescriptor> graphs;
    std::vector<SpectralValue> graph_rho;
    /// True when the containing family was too large to instantiate.
    bool symbolic = false;
    /// Spectral radius of S_{n,q}^1, with the alternate closed-form variant alongside.
    std::optional<SpectralValue> lower;
    std::optional<double> lower_printed;
    /// rho of [[q-1, n-q], [q, delta-1]].
    std::optional<SpectralValue> upper;
    /// sqrt(q n).
    std::optional<double> anchor;
    int threshold = 0;
    bool below_threshold = false;
    std::vector<std::string> warnings;
};

/// Maximum-edge graphs on q vertices avoiding every pattern, up to isomorphism.
struct ExtremalSet {
    int q = 0;
    CoveringFamily patterns;
    int max_edges = 0;
    std::vector<Graph> witnesses;
};

inline constexpr int kExBruteMaxOrder = 7;

/// Scans all labeled graphs on q vertices by decreasing edge count. q <= 7.
ExtremalSet ex_brute(int q, const CoveringFamily& family);

struct ClassifyOptions {
    /// Alternative degree-2 center when the tree is a path.
    std::optional<int> spider_center;
    /// Largest q for which the containing family is instantiated.
    int max_family_order = kExBruteMaxOrder;
};

/// n below max(l^2, 20) is reported as below the confidence threshold.
int confidence_threshold(int l);

/// Predicts SPEX(n, F) for a tree F. Requires n >= l.
Prediction classify(const Graph& tree, int n, const ClassifyOptions& options = {});

struct SpectralBounds {
    SpectralValue lower;
    double lower_printed = 0.0;
    SpectralValue upper;
    double anchor = 0.0;
};

/// The sandwich rho(S_{n,q}^1) < spex(n,F) <= rho(J) for trees with delta >= 2.
/// Throws DomainError when delta = 1 or q = 0.
SpectralBounds bounds(const Graph& tree, int n);

}  // namespace spextree
