#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>

#include "spextree/error.hpp"
#include "spextree/graph.hpp"

namespace spextree {

namespace {

constexpr int kGraph6Bias = 63;

void append_order(std::string& out, std::int64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Bias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Bias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Bias));
    }
}

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw ParseError("graph6 string truncated", 1, static_cast<int>(pos + 1));
    int c = static_cast<unsigned char>(text[pos]);
    if (c < kGraph6Bias || c > 126)
        throw ParseError("invalid graph6 character", 1, static_cast<int>(pos + 1));
    return c - kGraph6Bias;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_order(out, n);
    int bits = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Bias));
                bits = 0;
                acc = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + kGraph6Bias));
    return out;
}

Graph from_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    std::size_t pos = 0;
    std::int64_t n = sextet(text, pos++);
    if (n == 63) {
        int count = 3;
        if (sextet(text, pos) == 63) {
            ++pos;
            count = 6;
        }
        n = 0;
        for (int i = 0; i < count; ++i)
            n = (n << 6) | sextet(text, pos++);
    }
    if (n > 100000)
        throw ParseError("graph6 order too large", 1, 1);
    Graph g(static_cast<int>(n));
    int bit = 0;
    int current = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 0)
                current = sextet(text, pos++);
            if (current & (1 << (5 - bit)))
                g.add_edge(i, j);
            bit = (bit + 1) % 6;
        }
    if (pos != text.size())
        throw ParseError("trailing characters after graph6 data", 1, static_cast<int>(pos + 1));
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = "# order " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<int> declared_order;
    std::vector<std::pair<Edge, int>> edges;
    int max_vertex = -1;
    int line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            std::string_view comment = trim(line.substr(hash + 1));
            if (comment.starts_with("order")) {
                auto value = parse_int(trim(comment.substr(5)));
                if (!value || *value < 0)
                    throw ParseError("malformed order directive", line_no,
                                     static_cast<int>(hash + 1));
                declared_order = *value;
            }
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty())
            continue;

        auto split = line.find_first_of(" \t,");
        if (split == std::string_view::npos)
            throw ParseError("expected two vertex indices", line_no, 1);
        auto first = parse_int(trim(line.substr(0, split)));
        std::string_view rest = trim(line.substr(split + 1));
        if (!rest.empty() && rest.front() == ',')
            rest = trim(rest.substr(1));
        auto second = parse_int(rest);
        if (!first || !second)
            throw ParseError("expected two non-negative integers", line_no, 1);
        if (*first < 0 || *second < 0)
            throw ParseError("negative vertex index", line_no, 1);
        if (*first == *second)
            throw ParseError("loop at vertex " + std::to_string(*first), line_no, 1);
        edges.push_back({{*first, *second}, line_no});
        max_vertex = std::max({max_vertex, *first, *second});
    }
    int order = declared_order.value_or(max_vertex + 1);
    if (max_vertex >= order)
        throw ParseError("vertex " + std::to_string(max_vertex) + " exceeds declared order " +
                             std::to_string(order),
                         line_no, 0);
    Graph g(order);
    for (const auto& [edge, line] : edges)
        if (!g.add_edge(edge.first, edge.second))
            throw ParseError("duplicate edge " + std::to_string(edge.first) + " " +
                                 std::to_string(edge.second),
                             line, 1);
    return g;
}

}  // namespace spextree
