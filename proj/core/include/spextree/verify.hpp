#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spextree/embedding.hpp"
#include "spextree/extremal.hpp"
#include "spextree/oracle.hpp"

namespace spextree {

enum class Outcome { agree, tie, disagree, within_bounds, out_of_bounds, inconclusive, out_of_domain };

std::string_view to_string(Outcome outcome);

enum class OracleChoice { automatic, exhaustive, joinform, joinform_all_r };

std::string_view to_string(OracleChoice choice);

struct VerifyOptions {
    OracleChoice oracle = OracleChoice::automatic;
    OracleOptions oracle_options;
    /// Largest gap between predicted and oracle values still counted as equal.
    double agreement_tolerance = 1e-8;
    ClassifyOptions classify_options;
    /// Wall-clock times are left out by default so reports are reproducible.
    bool record_runtimes = false;
};

struct FreenessCheck {
    std::string graph;
    SearchStatus status = SearchStatus::absent;
};

struct VerificationEntry {
    int n = 0;
    Prediction prediction;
    std::vector<FreenessCheck> freeness;
    std::optional<OracleResult> oracle;
    /// Largest predicted spectral radius (exact kinds and instantiated families).
    std::optional<double> predicted_rho;
    Outcome outcome = Outcome::inconclusive;
    bool below_threshold = false;
    std::vector<std::string> notes;
    std::optional<double> runtime_seconds;
};

struct VerificationReport {
    std::string tree;
    int order = 0;
    std::vector<VerificationEntry> entries;

    /// 0 on agreement (ties and below-threshold disagreements allowed), 2 on a
    /// disagreement at or above the confidence threshold, 3 when something was
    /// inconclusive.
    int exit_code() const;
};

/// Instantiates the prediction for each n, checks that every predicted graph is F-free,
/// runs the strongest affordable oracle and compares values and maximizer sets.
VerificationReport verify_prediction(const Graph& tree, const std::vector<int>& ns, const VerifyOptions& options = {});

/// The oracle `verify_prediction` would run for this n under the automatic choice.
OracleChoice automatic_oracle(int n, int q);

}  // namespace spextree
