#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spextree/embedding.hpp"
#include "spextree/graph.hpp"
#include "spextree/spectral.hpp"

namespace spextree {

/// Strongest first: all graphs on n vertices, joins with every graph on the large
/// side, joins with a matching on the large side.
enum class OracleLevel { exhaustive, joinform_all_r, joinform_matching_r };

std::string_view to_string(OracleLevel level);

struct Maximizer {
    Graph graph;
    SpectralValue rho;
    /// For join-form candidates: the q-vertex side and the number of matched pairs on
    /// the other side (only meaningful at the matching level).
    std::optional<Graph> core;
    int matched_pairs = 0;
};

struct OracleResult {
    OracleLevel level = OracleLevel::exhaustive;
    int n = 0;
    SpectralValue optimum;
    /// Pairwise non-isomorphic, in a deterministic order.
    std::vector<Maximizer> maximizers;
    std::uint64_t candidates = 0;
    std::uint64_t free_candidates = 0;
    /// True at the matching level, whose optimum is only over a restricted family.
    bool restricted = false;
    /// Set when some freeness check ran out of budget; the optimum is then unreliable.
    bool inconclusive = false;

    /// "exhaustive", "join-form optimum (all R)" or "restricted-family optimum".
    std::string label() const;
};

struct OracleOptions {
    double tolerance = 1e-10;
    /// Spectral radii closer than this are treated as tied.
    double tie_tolerance = 1e-8;
    SearchBudget budget;
};

inline constexpr int kExhaustiveMaxOrder = 8;
inline constexpr int kJoinformMaxQ = 6;
inline constexpr int kJoinformAllRMaxOrder = 8;

/// Maximum spectral radius over all F-free graphs on n <= 8 vertices.
OracleResult spex_exhaustive(int n, const Graph& tree, const OracleOptions& options = {});

/// Maximum over F-free joins Q v R with |Q| = q: R a matching plus isolated vertices,
/// or any graph on n - q <= 8 vertices when all_r is set. Requires q <= 6.
OracleResult spex_joinform(int n, const Graph& tree, bool all_r, const OracleOptions& options = {});

}  // namespace spextree
