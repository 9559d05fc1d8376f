#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "spextree/error.hpp"

namespace {

using spextree::cli::CommandConfig;

void add_tree_options(CLI::App* cmd, CommandConfig& cfg) {
    cmd->add_option("--tree", cfg.tree, "catalog name such as spider(3,3,1), or an inline edge list \"0-1 1-2\"");
    cmd->add_option("--tree-file", cfg.tree_file, "file holding an edge list or a catalog name");
}

void add_output_options(CLI::App* cmd, CommandConfig& cfg, const std::string& formats) {
    cmd->add_option("--format", cfg.format, "output format: " + formats)->capture_default_str();
    cmd->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace spextree::cli;

    CLI::App app{"spextree: spectral extremal graphs for forbidden trees"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "spextree 1.0.0");
    CommandConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "bipartition, covers and covering family of a tree");
    add_tree_options(analyze, cfg);
    add_output_options(analyze, cfg, "text|json");

    auto* predict = app.add_subcommand("predict", "predicted spectral extremal graphs for a range of n");
    add_tree_options(predict, cfg);
    predict->add_option("--n", cfg.n_range, "orders, e.g. 20..30 or 20,50,100")->required();
    predict->add_option("--center", cfg.center, "spider center to use when the tree is a path");
    add_output_options(predict, cfg, "text|json|csv|graph6");

    auto* verify = app.add_subcommand("verify", "compare predictions with an independent oracle");
    add_tree_options(verify, cfg);
    verify->add_option("--n", cfg.n_range, "orders, e.g. 5..8")->required();
    verify->add_option("--oracle", cfg.oracle, "auto|exhaustive|joinform|joinform-all-r")->capture_default_str();
    verify->add_option("--tol", cfg.tolerance, "power iteration tolerance")->capture_default_str();
    verify->add_option("--node-budget", cfg.node_budget, "embedding search node limit (0 = unlimited)");
    verify->add_option("--center", cfg.center, "spider center to use when the tree is a path");
    verify->add_flag("--runtimes", cfg.runtimes, "record wall-clock time per n");
    add_output_options(verify, cfg, "text|json|csv|graph6");

    auto* construct = app.add_subcommand("construct", "build S, K, G(n,l) or diameter spider graphs");
    construct->add_option("family", cfg.family, "S|K|Gnl|diameter-spider")->required();
    construct->add_option("--n", cfg.n, "order");
    construct->add_option("--k", cfg.k, "clique size");
    construct->add_option("--p", cfg.p, "matched pairs");
    construct->add_option("--a", cfg.a, "independent side");
    construct->add_option("--b", cfg.b, "matched side");
    construct->add_option("--l", cfg.l, "tree order");
    construct->add_option("--d", cfg.d, "diameter");
    construct->add_option("--tol", cfg.tolerance, "power iteration tolerance")->capture_default_str();
    construct->add_flag("--rho", cfg.rho, "also print the spectral radius");
    add_output_options(construct, cfg, "text|json|graph6");

    auto* bounds = app.add_subcommand("bounds", "spectral radius bounds for trees with delta >= 2");
    add_tree_options(bounds, cfg);
    bounds->add_option("--n", cfg.n_range, "orders")->required();
    add_output_options(bounds, cfg, "text|json|csv");

    auto* catalog = app.add_subcommand("catalog", "list built-in trees");
    catalog->add_option("--max-order", cfg.max_order, "largest order enumerated")->capture_default_str();
    catalog->add_flag("--stars", cfg.stars, "include stars");
    add_output_options(catalog, cfg, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(cfg);
        if (predict->parsed())
            return cmd_predict(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (construct->parsed())
            return cmd_construct(cfg);
        if (bounds->parsed())
            return cmd_bounds(cfg);
        if (catalog->parsed())
            return cmd_catalog(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spextree::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spextree::RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spextree::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spextree::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
