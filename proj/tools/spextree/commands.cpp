#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "spextree/spextree.hpp"

namespace spextree::cli {

namespace {

using nlohmann::json;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string row(const std::string& key, const std::string& value) { return pad(key, 18) + value + "\n"; }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

std::string describe_pattern(const Graph& g) {
    return to_graph6(g) + " (" + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges)";
}

OracleChoice parse_oracle(const std::string& text) {
    if (text == "auto")
        return OracleChoice::automatic;
    if (text == "exhaustive")
        return OracleChoice::exhaustive;
    if (text == "joinform")
        return OracleChoice::joinform;
    if (text == "joinform-all-r")
        return OracleChoice::joinform_all_r;
    throw UsageError("unknown oracle '" + text + "' (auto, exhaustive, joinform, joinform-all-r)");
}

std::string prediction_text(const Prediction& p, const std::string& tree) {
    std::string out;
    out += row("tree", tree);
    out += row("n", std::to_string(p.n));
    out += row("kind", std::string(to_string(p.kind)));
    out += row("rule", p.theorem + " / " + p.case_tag);
    for (std::size_t i = 0; i < p.graphs.size(); ++i) {
        const auto& rho = p.graph_rho[i];
        out += row(i == 0 ? "graphs" : "", p.graphs[i].label() + "  rho " + num(rho.value) + " (" +
                                             std::string(to_string(rho.method)) + ")");
    }
    if (p.symbolic)
        out += row("graphs", "symbolic: Q v (n-q)K1 over extremal cores Q");
    if (p.lower) {
        out += row("lower (exact)", num(p.lower->value));
        out += row("lower (variant)", num(*p.lower_printed));
        out += row("upper", num(p.upper->value));
        out += row("sqrt(qn)", num(*p.anchor));
    }
    out += row("threshold", std::to_string(p.threshold) + (p.below_threshold ? " (n is below)" : ""));
    for (const auto& w : p.warnings)
        out += row("warning", w);
    return out;
}

}  // namespace

int cmd_analyze(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json});
    const LoadedTree t = load_tree(cfg);
    if (t.graph.order() < 2)
        throw UsageError("analyze needs a tree with at least two vertices");
    const TreeProfile prof = profile(t.graph);
    std::optional<CoveringFamily> family;
    if (prof.q >= 1)
        family = covering_family(t.graph);

    if (format == Format::json) {
        json payload = to_json(prof);
        payload["tree"] = t.name;
        payload["graph6"] = to_graph6(t.graph);
        payload["covering_family"] = family ? to_json(*family) : json(nullptr);
        payload["star"] = prof.q == 0;
        emit(dump(document("profile", payload)), cfg.output);
        return 0;
    }

    std::string out;
    out += row("tree", t.name);
    out += row("graph6", to_graph6(t.graph));
    out += row("order l", std::to_string(prof.l));
    out += row("|A|, |B|", std::to_string(prof.side_a.size()) + ", " + std::to_string(prof.side_b.size()));
    out += row("q", std::to_string(prof.q));
    out += row("delta", std::to_string(prof.delta) + (prof.ambiguous_orientation ? "  (|A| = |B|: minimum over both sides)" : ""));
    out += row("beta", std::to_string(prof.beta) + "  cover {" + join_ints(prof.min_cover) + "}");
    out += row("nu", std::to_string(prof.nu));
    out += row("diameter", std::to_string(prof.diameter));
    if (prof.spider) {
        const auto& s = *prof.spider;
        out += row("spider", "center " + std::to_string(s.center) + ", legs " + join_ints(s.legs) +
                                 ", r1=" + std::to_string(s.r1) + " r2=" + std::to_string(s.r2) +
                                 " r3=" + std::to_string(s.r3) + " s=" + std::to_string(s.s) +
                                 " r=" + std::to_string(s.r));
    } else {
        out += row("spider", "no (two or more vertices of degree >= 3)");
    }
    if (!family) {
        out += "notice: this is a star (q = 0); its spectral extremal problem is trivial\n";
    } else if (family->clique) {
        out += row("covering family", "{K_" + std::to_string(prof.q + 1) + "} (beta = q + 1)");
    } else {
        out += row("covering family", std::to_string(family->patterns.size()) + " pattern(s)");
        for (const auto& p : family->patterns)
            out += row("", describe_pattern(p.graph) + " from cover {" + join_ints(p.cover) + "}");
    }
    emit(out, cfg.output);
    return 0;
}

int cmd_predict(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json, Format::csv, Format::graph6});
    const LoadedTree t = load_tree(cfg);
    const auto ns = parse_n_range(cfg.n_range);
    ClassifyOptions options;
    options.spider_center = cfg.center;

    std::vector<Prediction> preds;
    for (int n : ns)
        preds.push_back(classify(t.graph, n, options));

    std::string out;
    switch (format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& p : preds)
            arr.push_back(to_json(p));
        json payload{{"tree", t.name}, {"graph6", to_graph6(t.graph)}, {"predictions", arr}};
        out = dump(document("prediction", payload));
        break;
    }
    case Format::csv:
        out = "n,kind,theorem,case,graph,rho,lower_exact,lower_variant,upper\n";
        for (const auto& p : preds) {
            std::string tail = p.lower ? num(p.lower->value) + "," + num(*p.lower_printed) + "," + num(p.upper->value)
                                       : std::string(",,");
            if (p.graphs.empty())
                out += std::to_string(p.n) + "," + std::string(to_string(p.kind)) + "," + p.theorem + "," +
                       p.case_tag + ",,," + tail + "\n";
            for (std::size_t i = 0; i < p.graphs.size(); ++i)
                out += std::to_string(p.n) + "," + std::string(to_string(p.kind)) + "," + p.theorem + "," +
                       p.case_tag + "," + p.graphs[i].label() + "," + num(p.graph_rho[i].value) + "," + tail + "\n";
        }
        break;
    case Format::graph6:
        for (const auto& p : preds)
            for (const auto& g : p.graphs)
                out += to_graph6(g.instantiate()) + "\n";
        break;
    case Format::text:
        for (std::size_t i = 0; i < preds.size(); ++i)
            out += (i ? "\n" : "") + prediction_text(preds[i], t.name);
        break;
    }
    for (const auto& p : preds)
        if (p.below_threshold && format != Format::text && p.kind != PredictionKind::out_of_domain)
            std::cerr << "warning: n=" << p.n << " is below the confidence threshold " << p.threshold << "\n";
    emit(out, cfg.output);
    return 0;
}

int cmd_verify(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json, Format::csv, Format::graph6});
    const LoadedTree t = load_tree(cfg);
    const auto ns = parse_n_range(cfg.n_range);
    if (!(cfg.tolerance > 0))
        throw UsageError("--tol must be positive");
    VerifyOptions options;
    options.oracle = parse_oracle(cfg.oracle);
    options.oracle_options.tolerance = cfg.tolerance;
    options.oracle_options.budget.max_nodes = cfg.node_budget;
    options.classify_options.spider_center = cfg.center;
    options.record_runtimes = cfg.runtimes;

    const VerificationReport report = verify_prediction(t.graph, ns, options);

    std::string out;
    switch (format) {
    case Format::json:
        out = dump(document("verification", to_json(report)));
        break;
    case Format::csv:
        out = to_csv(report);
        break;
    case Format::graph6:
        for (const auto& e : report.entries)
            if (e.oracle)
                for (const auto& m : e.oracle->maximizers)
                    out += to_graph6(m.graph) + "\n";
        break;
    case Format::text: {
        out += "tree " + t.name + "  (l=" + std::to_string(report.order) + ", confidence threshold " +
               std::to_string(confidence_threshold(report.order)) + ")\n";
        out += pad("n", 6) + pad("prediction", 22) + pad("predicted rho", 18) + pad("oracle rho", 18) +
               pad("oracle", 28) + "outcome\n";
        for (const auto& e : report.entries) {
            std::string pred = e.prediction.graphs.empty() ? std::string(to_string(e.prediction.kind))
                                                           : e.prediction.graphs.front().label();
            if (e.prediction.graphs.size() > 1)
                pred += " +" + std::to_string(e.prediction.graphs.size() - 1);
            std::string oracle_rho = e.oracle && !e.oracle->maximizers.empty() ? num(e.oracle->optimum.value) : "-";
            std::string oracle = e.oracle ? e.oracle->label() : "-";
            if (e.oracle)
                oracle += " (" + std::to_string(e.oracle->maximizers.size()) + ")";
            out += pad(std::to_string(e.n), 6) + pad(pred, 22) +
                   pad(e.predicted_rho ? num(*e.predicted_rho) : "-", 18) + pad(oracle_rho, 18) + pad(oracle, 28) +
                   std::string(to_string(e.outcome)) + (e.below_threshold ? " (below threshold)" : "") + "\n";
            if (e.prediction.lower)
                out += "      bounds [" + num(e.prediction.lower->value) + " exact, " +
                       num(*e.prediction.lower_printed) + " variant; " + num(e.prediction.upper->value) + "]\n";
            for (const auto& note : e.notes)
                out += "      note: " + note + "\n";
            if (e.runtime_seconds)
                out += "      runtime " + num(*e.runtime_seconds) + " s\n";
        }
        break;
    }
    }
    emit(out, cfg.output);

    for (const auto& e : report.entries) {
        if (e.outcome == Outcome::tie)
            std::cerr << "warning: n=" << e.n << ": tie among " << e.oracle->maximizers.size() << " maximizers\n";
        if (e.below_threshold && (e.outcome == Outcome::disagree || e.outcome == Outcome::out_of_bounds))
            std::cerr << "warning: n=" << e.n << ": " << to_string(e.outcome)
                      << " below the confidence threshold, not counted as a failure\n";
        if (e.outcome == Outcome::inconclusive)
            for (const auto& note : e.notes)
                std::cerr << "warning: n=" << e.n << ": " << note << "\n";
    }
    return report.exit_code();
}

int cmd_construct(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json, Format::graph6});
    Graph g;
    std::optional<QuotientMatrix> quotient;
    std::string label;
    if (cfg.family == "S") {
        g = construct_S(cfg.n, cfg.k, cfg.p);
        quotient = quotient_S(cfg.n, cfg.k, cfg.p);
        label = "S(" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) + "," + std::to_string(cfg.p) + ")";
    } else if (cfg.family == "K") {
        g = construct_K_ab_p(cfg.a, cfg.b, cfg.p);
        const double a = cfg.a, b = cfg.b, m = 2.0 * cfg.p;
        if (cfg.p == 0)
            quotient = QuotientMatrix({{0, b}, {a, 0}}, {cfg.a, cfg.b});
        else if (2 * cfg.p == cfg.b)
            quotient = QuotientMatrix({{0, b}, {a, 1}}, {cfg.a, cfg.b});
        else
            quotient = QuotientMatrix({{0, m, b - m}, {a, 1, 0}, {a, 0, 0}}, {cfg.a, 2 * cfg.p, cfg.b - 2 * cfg.p});
        label = "K(" + std::to_string(cfg.a) + "," + std::to_string(cfg.b) + "," + std::to_string(cfg.p) + ")";
    } else if (cfg.family == "Gnl") {
        g = construct_G_nl(cfg.n, cfg.l);
        auto sp = G_nl_parameters(cfg.n, cfg.l);
        quotient = quotient_S(sp.n, sp.k, sp.p);
        label = "S(" + std::to_string(sp.n) + "," + std::to_string(sp.k) + "," + std::to_string(sp.p) + ")";
    } else if (cfg.family == "diameter-spider") {
        g = diameter_spider(cfg.l, cfg.d);
        label = catalog_name(g);
    } else {
        throw UsageError("unknown family '" + cfg.family + "' (S, K, Gnl, diameter-spider)");
    }

    std::optional<SpectralValue> numeric, exact;
    if (cfg.rho) {
        numeric = spectral_radius(g, cfg.tolerance);
        if (quotient)
            exact = quotient_spectral_radius(*quotient);
    }

    std::string out;
    switch (format) {
    case Format::json: {
        json payload{{"label", label}, {"graph6", to_graph6(g)}, {"order", g.order()}, {"edges", g.size()}};
        if (numeric) {
            payload["rho"] = json{{"power_iteration", to_json(*numeric)},
                                  {"quotient_exact", exact ? to_json(*exact) : json(nullptr)}};
        }
        out = dump(document("graph", payload));
        break;
    }
    case Format::graph6:
        out = to_graph6(g) + "\n";
        if (numeric)
            out += "rho power-iteration " + num(numeric->value) + "\n";
        if (exact)
            out += "rho quotient-exact " + num(exact->value) + "\n";
        break;
    default:
        out = "# " + label + "\n" + to_edge_list(g);
        if (numeric)
            out += "# rho power-iteration " + num(numeric->value) + "\n";
        if (exact)
            out += "# rho quotient-exact " + num(exact->value) + "\n";
        break;
    }
    emit(out, cfg.output);
    return 0;
}

int cmd_bounds(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json, Format::csv});
    const LoadedTree t = load_tree(cfg);
    const auto ns = parse_n_range(cfg.n_range);
    const TreeProfile prof = profile(t.graph);
    const double limit = (prof.q + prof.delta - 2) / 2.0;

    std::vector<std::pair<int, SpectralBounds>> rows;
    for (int n : ns)
        rows.emplace_back(n, bounds(t.graph, n));

    std::string out;
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& [n, b] : rows)
            arr.push_back(json{{"n", n},
                               {"lower", json{{"exact", b.lower.value}, {"variant", b.lower_printed}}},
                               {"upper", b.upper.value},
                               {"anchor", b.anchor},
                               {"upper_minus_anchor", b.upper.value - b.anchor}});
        out = dump(document("bounds", json{{"tree", t.name}, {"q", prof.q}, {"delta", prof.delta},
                                           {"limit", limit}, {"rows", arr}}));
    } else if (format == Format::csv) {
        out = "n,lower_exact,lower_variant,upper,sqrt_qn,upper_minus_sqrt_qn\n";
        for (const auto& [n, b] : rows)
            out += std::to_string(n) + "," + num(b.lower.value) + "," + num(b.lower_printed) + "," +
                   num(b.upper.value) + "," + num(b.anchor) + "," + num(b.upper.value - b.anchor) + "\n";
    } else {
        out += "tree " + t.name + "  q=" + std::to_string(prof.q) + " delta=" + std::to_string(prof.delta) +
               "  upper - sqrt(qn) tends to " + num(limit) + "\n";
        out += pad("n", 8) + pad("lower (exact)", 18) + pad("lower (variant)", 18) + pad("upper", 18) +
               pad("sqrt(qn)", 18) + "upper - sqrt(qn)\n";
        for (const auto& [n, b] : rows)
            out += pad(std::to_string(n), 8) + pad(num(b.lower.value), 18) + pad(num(b.lower_printed), 18) +
                   pad(num(b.upper.value), 18) + pad(num(b.anchor), 18) + num(b.upper.value - b.anchor) + "\n";
    }
    emit(out, cfg.output);
    return 0;
}

int cmd_catalog(const CommandConfig& cfg) {
    const Format format = parse_format(cfg.format, {Format::text, Format::json});
    if (cfg.max_order < 2 || cfg.max_order > 12)
        throw UsageError("--max-order must lie in 2..12");
    const auto entries = builtin_catalog(cfg.max_order, cfg.stars);
    std::string out;
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& e : entries) {
            auto prof = profile(e.tree);
            arr.push_back(json{{"name", e.name}, {"graph6", to_graph6(e.tree)}, {"l", prof.l}, {"q", prof.q},
                               {"delta", prof.delta}, {"beta", prof.beta}, {"spider", prof.spider.has_value()}});
        }
        out = dump(document("catalog", arr));
    } else {
        out += pad("name", 22) + pad("l", 4) + pad("q", 4) + pad("delta", 7) + pad("beta", 6) + "graph6\n";
        for (const auto& e : entries) {
            auto prof = profile(e.tree);
            out += pad(e.name, 22) + pad(std::to_string(prof.l), 4) + pad(std::to_string(prof.q), 4) +
                   pad(std::to_string(prof.delta), 7) + pad(std::to_string(prof.beta), 6) + to_graph6(e.tree) + "\n";
        }
    }
    emit(out, cfg.output);
    return 0;
}

}  // namespace spextree::cli
