#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree::cli {

enum class Format { text, json, csv, graph6 };

/// Everything a subcommand needs, filled in by the argument parser.
struct CommandConfig {
    std::string tree;
    std::string tree_file;
    std::string n_range;
    double tolerance = 1e-10;
    std::string oracle = "auto";
    std::uint64_t node_budget = 0;
    bool runtimes = false;
    std::string format = "text";
    std::string output;
    std::optional<int> center;

    // construct
    std::string family;
    int n = 0, k = 0, p = 0, a = 0, b = 0, l = 0, d = 0;
    bool rho = false;

    // catalog
    int max_order = 9;
    bool stars = false;
};

/// Thrown for bad flag values; mapped to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitUsage = 64;

Format parse_format(const std::string& text, std::initializer_list<Format> allowed);

/// "a..b" inclusive ranges and single values, comma separated.
std::vector<int> parse_n_range(const std::string& text);

struct LoadedTree {
    Graph graph;
    std::string name;
};

/// From --tree (catalog name or inline edge list) or --tree-file.
LoadedTree load_tree(const CommandConfig& cfg);

/// Writes to the output path, or stdout when it is empty.
void emit(const std::string& text, const std::string& path);

}  // namespace spextree::cli
