#include "spextree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spextree/canonical.hpp"
#include "spextree/error.hpp"
#include "spextree/tree.hpp"

namespace spextree {

namespace {

bool same_graph(const GraphDescriptor& d, const Maximizer& m, int q) {
    if (m.core && d.n > 2 * q + 1 && d.k == q)
        return d.matched_pairs() == m.matched_pairs && are_isomorphic(d.join_core(), *m.core);
    return are_isomorphic(d.instantiate(), m.graph);
}

OracleResult run_oracle(OracleChoice choice, int n, const Graph& tree, const OracleOptions& options) {
    switch (choice) {
    case OracleChoice::exhaustive:
        return spex_exhaustive(n, tree, options);
    case OracleChoice::joinform_all_r:
        return spex_joinform(n, tree, true, options);
    case OracleChoice::joinform:
    case OracleChoice::automatic:
        break;
    }
    return spex_joinform(n, tree, false, options);
}

void compare(VerificationEntry& e, const VerifyOptions& options, int q) {
    const Prediction& pred = e.prediction;
    const OracleResult& oracle = *e.oracle;
    const double tol = options.agreement_tolerance;
    const double opt = oracle.optimum.value;

    if (pred.kind == PredictionKind::bounds_only) {
        const bool inside = pred.lower->value <= opt + tol && opt <= pred.upper->value + tol;
        e.outcome = inside ? Outcome::within_bounds : Outcome::out_of_bounds;
        if (!inside)
            e.notes.push_back("oracle optimum " + std::to_string(opt) + " lies outside the bounds");
        return;
    }
    if (pred.symbolic) {
        e.outcome = Outcome::inconclusive;
        e.notes.push_back("the containing family is symbolic and cannot be compared");
        return;
    }

    const double predicted = *e.predicted_rho;
    if (opt > predicted + tol) {
        e.outcome = Outcome::disagree;
        e.notes.push_back("oracle found a larger spectral radius than predicted");
        return;
    }
    if (opt < predicted - tol) {
        e.outcome = Outcome::disagree;
        e.notes.push_back("the predicted graph is F-free but lies outside the oracle's candidate family");
        return;
    }

    // Values agree; compare maximizer sets up to isomorphism.
    std::vector<const GraphDescriptor*> top;
    for (std::size_t i = 0; i < pred.graphs.size(); ++i)
        if (pred.graph_rho[i].value >= predicted - tol)
            top.push_back(&pred.graphs[i]);
    std::size_t matched = 0;
    bool foreign = false;
    for (const auto& m : oracle.maximizers) {
        bool in_prediction = std::any_of(top.begin(), top.end(), [&](const GraphDescriptor* d) { return same_graph(*d, m, q); });
        if (in_prediction)
            ++matched;
        else
            foreign = true;
    }
    if (matched == top.size() && !foreign) {
        e.outcome = Outcome::agree;
    } else if (pred.kind == PredictionKind::family_containment && foreign) {
        e.outcome = Outcome::disagree;
        e.notes.push_back("an oracle maximizer lies outside the containing family");
    } else {
        e.outcome = Outcome::tie;
        e.notes.push_back(std::to_string(oracle.maximizers.size()) + " maximizers share the optimum; " +
                          std::to_string(matched) + " of them predicted");
    }
}

}  // namespace

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::agree:
        return "agree";
    case Outcome::tie:
        return "tie";
    case Outcome::disagree:
        return "disagree";
    case Outcome::within_bounds:
        return "within-bounds";
    case Outcome::out_of_bounds:
        return "out-of-bounds";
    case Outcome::inconclusive:
        return "inconclusive";
    case Outcome::out_of_domain:
        return "out-of-domain";
    }
    return "unknown";
}

std::string_view to_string(OracleChoice choice) {
    switch (choice) {
    case OracleChoice::automatic:
        return "auto";
    case OracleChoice::exhaustive:
        return "exhaustive";
    case OracleChoice::joinform:
        return "joinform";
    case OracleChoice::joinform_all_r:
        return "joinform-all-r";
    }
    return "unknown";
}

OracleChoice automatic_oracle(int n, int q) {
    if (n <= kExhaustiveMaxOrder)
        return OracleChoice::exhaustive;
    if (q <= kJoinformMaxQ && n - q <= kJoinformAllRMaxOrder)
        return OracleChoice::joinform_all_r;
    return OracleChoice::joinform;
}

int VerificationReport::exit_code() const {
    bool inconclusive = false;
    for (const auto& e : entries) {
        if ((e.outcome == Outcome::disagree || e.outcome == Outcome::out_of_bounds) && !e.below_threshold)
            return 2;
        inconclusive = inconclusive || e.outcome == Outcome::inconclusive;
    }
    return inconclusive ? 3 : 0;
}

VerificationReport verify_prediction(const Graph& tree, const std::vector<int>& ns, const VerifyOptions& options) {
    if (!is_tree(tree))
        throw RangeError("verify_prediction requires a tree");
    VerificationReport report;
    report.tree = catalog_name(tree);
    report.order = tree.order();
    const int q = tree.order() >= 2 ? profile(tree).q : 0;

    for (int n : ns) {
        const auto start = std::chrono::steady_clock::now();
        VerificationEntry e;
        e.n = n;
        e.prediction = classify(tree, n, options.classify_options);
        e.below_threshold = e.prediction.below_threshold;
        if (e.prediction.kind == PredictionKind::out_of_domain) {
            e.outcome = Outcome::out_of_domain;
            report.entries.push_back(std::move(e));
            continue;
        }

        bool contains = false;
        bool unsure = false;
        for (const auto& d : e.prediction.graphs) {
            auto w = contains_tree(d.instantiate(), tree, options.oracle_options.budget);
            e.freeness.push_back({d.label(), w.status});
            contains = contains || w.found();
            unsure = unsure || w.status == SearchStatus::inconclusive;
        }
        if (!e.prediction.graph_rho.empty())
            e.predicted_rho = e.prediction.graph_rho.front().value;

        const OracleChoice choice =
            options.oracle == OracleChoice::automatic ? automatic_oracle(n, q) : options.oracle;
        try {
            e.oracle = run_oracle(choice, n, tree, options.oracle_options);
        } catch (const BudgetError& err) {
            e.notes.push_back(std::string("oracle refused: ") + err.what());
        } catch (const DomainError& err) {
            e.notes.push_back(std::string("oracle refused: ") + err.what());
        } catch (const RangeError& err) {
            e.notes.push_back(std::string("oracle refused: ") + err.what());
        }

        if (contains) {
            e.outcome = Outcome::disagree;
            e.notes.push_back("a predicted graph contains the tree");
        } else if (unsure || !e.oracle || e.oracle->inconclusive) {
            e.outcome = Outcome::inconclusive;
            if (unsure || (e.oracle && e.oracle->inconclusive))
                e.notes.push_back("an embedding search exceeded its node budget");
        } else {
            compare(e, options, q);
        }
        if (e.below_threshold && (e.outcome == Outcome::disagree || e.outcome == Outcome::out_of_bounds))
            e.notes.push_back("below the confidence threshold " + std::to_string(e.prediction.threshold) +
                              "; not counted as a failure");
        if (options.record_runtimes)
            e.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace spextree
