#include "spextree/serialize.hpp"

#include <cstdio>

namespace spextree {

using nlohmann::json;

namespace {

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

}  // namespace

json to_json(const SpectralValue& v) {
    return json{{"value", v.value},
                {"method", std::string(to_string(v.method))},
                {"tolerance", v.tolerance},
                {"lower", v.lower},
                {"upper", v.upper},
                {"iterations", v.iterations}};
}

json to_json(const TreeProfile& p) {
    json out{{"l", p.l},
             {"side_a", p.side_a},
             {"side_b", p.side_b},
             {"q", p.q},
             {"delta", p.delta},
             {"ambiguous_orientation", p.ambiguous_orientation},
             {"beta", p.beta},
             {"nu", p.nu},
             {"diameter", p.diameter},
             {"min_cover", p.min_cover}};
    if (p.spider) {
        const auto& s = *p.spider;
        out["spider"] = json{{"center", s.center}, {"legs", s.legs}, {"r1", s.r1}, {"r2", s.r2},
                             {"r3", s.r3},         {"s", s.s},       {"r", s.r}};
    } else {
        out["spider"] = nullptr;
    }
    return out;
}

json to_json(const CoveringFamily& f) {
    json patterns = json::array();
    for (const auto& p : f.patterns)
        patterns.push_back(json{{"graph6", to_graph6(p.graph)},
                                {"order", p.graph.order()},
                                {"edges", p.graph.size()},
                                {"cover", p.cover}});
    return json{{"q", f.q}, {"clique", f.clique}, {"patterns", patterns}};
}

json to_json(const GraphDescriptor& d) {
    switch (d.family) {
    case GraphDescriptor::Family::S:
        return json{{"family", "S"}, {"n", d.n}, {"k", d.k}, {"p", d.p}};
    case GraphDescriptor::Family::K:
        return json{{"family", "K"}, {"a", d.k}, {"b", d.n - d.k}};
    case GraphDescriptor::Family::join:
        return json{{"family", "join"}, {"n", d.n}, {"core", to_graph6(d.core)}, {"q", d.k}};
    }
    return json{};
}

json to_json(const Prediction& p) {
    json graphs = json::array();
    for (std::size_t i = 0; i < p.graphs.size(); ++i) {
        json g = to_json(p.graphs[i]);
        g["label"] = p.graphs[i].label();
        if (i < p.graph_rho.size())
            g["rho"] = p.graph_rho[i].value;
        graphs.push_back(std::move(g));
    }
    json out{{"kind", std::string(to_string(p.kind))},
             {"theorem", p.theorem},
             {"case", p.case_tag},
             {"n", p.n},
             {"graphs", graphs},
             {"symbolic", p.symbolic},
             {"threshold", p.threshold},
             {"below_threshold", p.below_threshold},
             {"warnings", p.warnings}};
    if (p.lower)
        out["lower"] = json{{"exact", p.lower->value}, {"variant", *p.lower_printed}};
    else
        out["lower"] = nullptr;
    out["upper"] = p.upper ? json(p.upper->value) : json(nullptr);
    out["anchor"] = p.anchor ? json(*p.anchor) : json(nullptr);
    return out;
}

json to_json(const OracleResult& r) {
    json maximizers = json::array();
    for (const auto& m : r.maximizers) {
        json item{{"graph6", to_graph6(m.graph)}, {"rho", m.rho.value}, {"edges", m.graph.size()}};
        if (m.core) {
            item["core"] = to_graph6(*m.core);
            item["matched_pairs"] = m.matched_pairs;
        }
        maximizers.push_back(std::move(item));
    }
    return json{{"level", std::string(to_string(r.level))},
                {"label", r.label()},
                {"n", r.n},
                {"optimum", to_json(r.optimum)},
                {"maximizers", maximizers},
                {"candidates", r.candidates},
                {"free_candidates", r.free_candidates},
                {"restricted", r.restricted},
                {"inconclusive", r.inconclusive}};
}

json to_json(const VerificationReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json freeness = json::array();
        for (const auto& f : e.freeness)
            freeness.push_back(json{{"graph", f.graph}, {"status", std::string(to_string(f.status))}});
        json item{{"n", e.n},
                  {"prediction", to_json(e.prediction)},
                  {"freeness", freeness},
                  {"oracle", e.oracle ? to_json(*e.oracle) : json(nullptr)},
                  {"predicted_rho", e.predicted_rho ? json(*e.predicted_rho) : json(nullptr)},
                  {"outcome", std::string(to_string(e.outcome))},
                  {"below_threshold", e.below_threshold},
                  {"notes", e.notes}};
        if (e.runtime_seconds)
            item["runtime_seconds"] = *e.runtime_seconds;
        entries.push_back(std::move(item));
    }
    return json{{"tree", report.tree}, {"order", report.order}, {"entries", entries},
                {"exit_code", report.exit_code()}};
}

json document(const std::string& kind, json payload) {
    return json{{"schema", kSchemaVersion}, {kind, std::move(payload)}};
}

std::string to_csv(const VerificationReport& report) {
    std::string out = "n,predicted_rho,oracle_rho,outcome\n";
    for (const auto& e : report.entries) {
        out += std::to_string(e.n) + ",";
        out += (e.predicted_rho ? fixed(*e.predicted_rho) : "") + ",";
        out += (e.oracle && !e.oracle->maximizers.empty() ? fixed(e.oracle->optimum.value) : "") + ",";
        out += std::string(to_string(e.outcome)) + "\n";
    }
    return out;
}

}  // namespace spextree
