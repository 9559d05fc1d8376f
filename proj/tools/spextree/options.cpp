#include "options.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spextree/tree.hpp"

namespace spextree::cli {

namespace {

int parse_int(std::string_view s, const std::string& whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("bad n value '" + std::string(s) + "' in '" + whole + "'");
    return value;
}

}  // namespace

Format parse_format(const std::string& text, std::initializer_list<Format> allowed) {
    Format f;
    if (text == "text")
        f = Format::text;
    else if (text == "json")
        f = Format::json;
    else if (text == "csv")
        f = Format::csv;
    else if (text == "graph6")
        f = Format::graph6;
    else
        throw UsageError("unknown format '" + text + "'");
    for (Format a : allowed)
        if (a == f)
            return f;
    throw UsageError("format '" + text + "' is not available for this command");
}

std::vector<int> parse_n_range(const std::string& text) {
    if (text.empty())
        throw UsageError("--n is required");
    std::vector<int> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto dots = item.find("..");
        int lo, hi;
        if (dots == std::string_view::npos) {
            lo = hi = parse_int(item, text);
        } else {
            lo = parse_int(item.substr(0, dots), text);
            hi = parse_int(item.substr(dots + 2), text);
        }
        if (lo < 1 || hi < lo)
            throw UsageError("empty or invalid n range '" + std::string(item) + "'");
        for (int n = lo; n <= hi; ++n)
            out.push_back(n);
    }
    if (out.empty())
        throw UsageError("n range '" + text + "' is empty");
    return out;
}

LoadedTree load_tree(const CommandConfig& cfg) {
    if (cfg.tree.empty() == cfg.tree_file.empty())
        throw UsageError("give exactly one of --tree or --tree-file");
    std::string source = cfg.tree;
    if (!cfg.tree_file.empty()) {
        std::ifstream in(cfg.tree_file);
        if (!in)
            throw UsageError("cannot read tree file '" + cfg.tree_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        source = buf.str();
    }
    LoadedTree t;
    t.graph = parse_tree(source);
    t.name = catalog_name(t.graph);
    return t;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

}  // namespace spextree::cli
