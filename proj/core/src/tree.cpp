#include "spextree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>

#include "spextree/canonical.hpp"
#include "spextree/error.hpp"

namespace spextree {

namespace {

std::vector<int> two_colouring(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0)
            continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == colour[static_cast<std::size_t>(v)]) {
                    throw RangeError("graph is not bipartite");
                }
            }
        }
    }
    return colour;
}

void require_tree(const Graph& g, const char* what) {
    if (!is_tree(g))
        throw RangeError(std::string(what) + " requires a tree");
}

// Vertices of a path in order, starting from its lower-numbered end.
std::vector<int> path_order(const Graph& path) {
    int start = 0;
    while (path.degree(start) > 1)
        ++start;
    std::vector<int> order{start};
    int prev = -1;
    int cur = start;
    while (true) {
        int next = -1;
        for (int w : path.neighbors(cur))
            if (w != prev)
                next = w;
        if (next < 0)
            break;
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

struct CatalogCall {
    std::string name;
    std::vector<int> args;
};

CatalogCall parse_catalog_call(std::string_view text) {
    std::size_t i = 0;
    auto column = [&] { return static_cast<int>(i) + 1; };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_space();
    CatalogCall call;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '-'))
        call.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i++]))));
    if (call.name.empty())
        throw ParseError("expected a catalog name", 1, column());
    skip_space();
    if (i >= text.size() || text[i] != '(')
        throw ParseError("expected '(' after " + call.name, 1, column());
    ++i;
    skip_space();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip_space();
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{} || value < 0)
                throw ParseError("expected a non-negative integer argument", 1, column());
            i = static_cast<std::size_t>(ptr - text.data());
            call.args.push_back(value);
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ')'", 1, column());
        }
    }
    skip_space();
    if (i != text.size())
        throw ParseError("unexpected trailing text", 1, column());
    return call;
}

Graph build_catalog_tree(const CatalogCall& call) {
    auto arity = [&](std::size_t want) {
        if (call.args.size() != want)
            throw ParseError(call.name + " takes " + std::to_string(want) + " argument(s), got " +
                                 std::to_string(call.args.size()),
                             1);
    };
    try {
        if (call.name == "path") {
            arity(1);
            return path_tree(call.args[0]);
        }
        if (call.name == "star") {
            arity(1);
            return star_tree(call.args[0]);
        }
        if (call.name == "spider") {
            if (call.args.empty())
                throw ParseError("spider needs at least one leg length", 1);
            return spider_tree(call.args);
        }
        if (call.name == "doublestar") {
            arity(2);
            return doublestar_tree(call.args[0], call.args[1]);
        }
        if (call.name == "broom") {
            arity(2);
            return broom_tree(call.args[0], call.args[1]);
        }
        if (call.name == "tree") {
            arity(2);
            return indexed_tree(call.args[0], call.args[1]);
        }
    } catch (const RangeError& e) {
        throw ParseError(e.what(), 1);
    } catch (const BudgetError& e) {
        throw ParseError(e.what(), 1);
    }
    throw ParseError("unknown catalog name '" + call.name +
                         "' (expected path, star, spider, doublestar, broom or tree)",
                     1);
}

bool looks_like_catalog(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos &&
           std::isalpha(static_cast<unsigned char>(text[first])) &&
           text.find('(') != std::string_view::npos;
}

}  // namespace

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && g.is_connected();
}

Graph parse_tree(std::string_view source, TreeFormat format) {
    if (format == TreeFormat::catalog)
        return build_catalog_tree(parse_catalog_call(source));

    Graph g = parse_edge_list(source);
    if (g.order() == 0)
        throw ParseError("empty tree", 0);
    // Union-find over the sorted edges names an edge closing a cycle.
    std::vector<int> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a == b)
            throw ParseError("cycle detected through edge " + std::to_string(u) + " " +
                                 std::to_string(v),
                             0);
        parent[static_cast<std::size_t>(a)] = b;
    }
    if (!g.is_connected())
        throw ParseError("edge list is disconnected (" + std::to_string(g.order()) +
                             " vertices, " + std::to_string(g.size()) + " edges)",
                         0);
    return g;
}

Graph parse_tree(std::string_view source) {
    return parse_tree(source, looks_like_catalog(source) ? TreeFormat::catalog : TreeFormat::edge_list);
}

Graph path_tree(int l) {
    if (l < 1)
        throw RangeError("path needs l >= 1, got " + std::to_string(l));
    return path_graph(l);
}

Graph star_tree(int l) {
    if (l < 1)
        throw RangeError("star needs l >= 1, got " + std::to_string(l));
    Graph g(l);
    for (int v = 1; v < l; ++v)
        g.add_edge(0, v);
    return g;
}

Graph spider_tree(const std::vector<int>& legs) {
    if (legs.empty())
        throw RangeError("spider needs at least one leg");
    int order = 1;
    for (int len : legs) {
        if (len < 1)
            throw RangeError("spider leg lengths must be >= 1, got " + std::to_string(len));
        order += len;
    }
    Graph g(order);
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i, ++next) {
            g.add_edge(prev, next);
            prev = next;
        }
    }
    return g;
}

Graph doublestar_tree(int a, int b) {
    if (a < 0 || b < 0)
        throw RangeError("doublestar needs a >= 0 and b >= 0");
    Graph g(a + b + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < a; ++i)
        g.add_edge(0, 2 + i);
    for (int i = 0; i < b; ++i)
        g.add_edge(1, 2 + a + i);
    return g;
}

Graph broom_tree(int l, int k) {
    if (k < 0 || l - k < 1)
        throw RangeError("broom needs 0 <= k <= l-1, got l=" + std::to_string(l) + ", k=" + std::to_string(k));
    Graph g = path_graph(l - k);
    Graph out(l, g.edges());
    for (int i = 0; i < k; ++i)
        out.add_edge(0, l - k + i);
    return out;
}

Graph indexed_tree(int l, int index) {
    const auto& trees = nonisomorphic_trees(l);
    if (index < 0 || static_cast<std::size_t>(index) >= trees.size())
        throw RangeError("tree(" + std::to_string(l) + ", i) needs 0 <= i < " + std::to_string(trees.size()));
    return trees[static_cast<std::size_t>(index)];
}

int tree_min_cover(const Graph& tree, std::vector<int>* witness) {
    require_tree(tree, "tree_min_cover");
    const int n = tree.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : tree.neighbors(v))
            if (w != parent[static_cast<std::size_t>(v)]) {
                parent[static_cast<std::size_t>(w)] = v;
                order.push_back(w);
            }
    }
    // out[v]: best cover of the subtree with v excluded; in[v]: with v included.
    std::vector<int> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int p = parent[static_cast<std::size_t>(v)];
        if (p < 0)
            continue;
        out[static_cast<std::size_t>(p)] += in[static_cast<std::size_t>(v)];
        in[static_cast<std::size_t>(p)] += std::min(in[static_cast<std::size_t>(v)], out[static_cast<std::size_t>(v)]);
    }
    if (witness) {
        std::vector<char> chosen(static_cast<std::size_t>(n), 0);
        for (int v : order) {
            int p = parent[static_cast<std::size_t>(v)];
            const auto sv = static_cast<std::size_t>(v);
            if (p >= 0 && !chosen[static_cast<std::size_t>(p)])
                chosen[sv] = 1;
            else
                chosen[sv] = in[sv] < out[sv] ? 1 : 0;
        }
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (chosen[static_cast<std::size_t>(v)])
                witness->push_back(v);
    }
    return std::min(in[0], out[0]);
}

int bipartite_max_matching(const Graph& g) {
    const auto colour = two_colouring(g);
    const int n = g.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    auto augment = [&](auto&& self, int v, int stamp) -> bool {
        for (int w : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)] == stamp)
                continue;
            seen[static_cast<std::size_t>(w)] = stamp;
            int m = mate[static_cast<std::size_t>(w)];
            if (m < 0 || self(self, m, stamp)) {
                mate[static_cast<std::size_t>(w)] = v;
                mate[static_cast<std::size_t>(v)] = w;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int v = 0; v < n; ++v)
        if (colour[static_cast<std::size_t>(v)] == 0 && mate[static_cast<std::size_t>(v)] < 0 && augment(augment, v, v))
            ++size;
    return size;
}

std::optional<SpiderProfile> spider_profile(const Graph& tree, std::optional<int> center) {
    require_tree(tree, "spider_profile");
    const int n = tree.order();
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) >= 3)
            branch.push_back(v);
    if (branch.size() > 1)
        return std::nullopt;

    SpiderProfile sp;
    if (n == 1)
        return sp;
    if (branch.size() == 1) {
        if (center && *center != branch[0])
            throw RangeError("spider center must be the vertex of degree >= 3 (vertex " +
                             std::to_string(branch[0]) + ")");
        sp.center = branch[0];
    } else if (center) {
        if (*center < 0 || *center >= n || (n > 2 && tree.degree(*center) != 2))
            throw RangeError("a path center must be a vertex of degree 2");
        sp.center = *center;
    } else {
        sp.center = path_order(tree)[static_cast<std::size_t>(n / 2)];
    }

    for (int first : tree.neighbors(sp.center)) {
        int len = 1, prev = sp.center, cur = first;
        while (tree.degree(cur) == 2) {
            int next = tree.neighbors(cur)[0] == prev ? tree.neighbors(cur)[1] : tree.neighbors(cur)[0];
            prev = cur;
            cur = next;
            ++len;
        }
        sp.legs.push_back(len);
    }
    std::sort(sp.legs.begin(), sp.legs.end(), std::greater<>());
    for (int len : sp.legs) {
        if (len % 2 == 0)
            ++sp.s;
        else if (len == 1)
            ++sp.r3;
        else if (len == 3)
            ++sp.r2;
        else
            ++sp.r1;
    }
    sp.r = sp.r1 + sp.r2 + sp.r3;
    return sp;
}

TreeProfile profile(const Graph& tree) {
    require_tree(tree, "profile");
    if (tree.order() < 2)
        throw RangeError("profile requires a tree with at least two vertices");
    TreeProfile p;
    p.l = tree.order();
    const auto colour = two_colouring(tree);
    std::vector<int> c0, c1;
    for (int v = 0; v < p.l; ++v)
        (colour[static_cast<std::size_t>(v)] == 0 ? c0 : c1).push_back(v);
    if (c1.size() < c0.size())
        std::swap(c0, c1);
    p.side_a = c0;
    p.side_b = c1;
    p.q = static_cast<int>(p.side_a.size()) - 1;
    auto min_degree_over = [&](const std::vector<int>& side) {
        int best = p.l;
        for (int v : side)
            best = std::min(best, tree.degree(v));
        return best;
    };
    p.delta = min_degree_over(p.side_a);
    if (p.side_a.size() == p.side_b.size()) {
        p.ambiguous_orientation = true;
        p.delta = std::min(p.delta, min_degree_over(p.side_b));
    }
    p.beta = tree_min_cover(tree, &p.min_cover);
    p.nu = bipartite_max_matching(tree);
    p.diameter = diameter(tree);
    p.spider = spider_profile(tree);
    return p;
}

Graph diameter_spider(int l, int d) {
    if (l < 6)
        throw RangeError("diameter_spider needs l >= 6, got " + std::to_string(l));
    if (d < 4 || d > l - 1)
        throw RangeError("diameter_spider needs 4 <= d <= l-1, got d=" + std::to_string(d));
    const int rest = l - d - 1;
    const int alpha = rest / 2;
    const int gamma = rest % 2;
    std::vector<int> legs;
    legs.push_back(d - 2);
    for (int i = 0; i < alpha + 1; ++i)
        legs.push_back(2);
    for (int i = 0; i < gamma; ++i)
        legs.push_back(1);
    std::sort(legs.begin(), legs.end(), std::greater<>());
    return spider_tree(legs);
}

std::string catalog_name(const Graph& tree) {
    require_tree(tree, "catalog_name");
    const int l = tree.order();
    auto join_args = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
    };
    if (l <= 2 || tree.max_degree() <= 2)
        return "path(" + std::to_string(l) + ")";
    if (tree.max_degree() == l - 1)
        return "star(" + std::to_string(l) + ")";
    if (auto sp = spider_profile(tree))
        return "spider(" + join_args(sp->legs) + ")";
    std::vector<int> internal;
    for (int v = 0; v < l; ++v)
        if (tree.degree(v) >= 2)
            internal.push_back(v);
    if (internal.size() == 2) {
        int a = tree.degree(internal[0]) - 1, b = tree.degree(internal[1]) - 1;
        return "doublestar(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
    }
    const auto& trees = nonisomorphic_trees(l);
    const auto code = canonical_form(tree).code;
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (canonical_form(trees[i]).code == code)
            return "tree(" + std::to_string(l) + "," + std::to_string(i) + ")";
    return "tree";
}

std::vector<CatalogEntry> builtin_catalog(int max_order, bool include_stars) {
    std::vector<CatalogEntry> out;
    for (int l = 2; l <= max_order; ++l)
        for (const auto& t : nonisomorphic_trees(l)) {
            if (!include_stars && t.max_degree() == l - 1)
                continue;
            out.push_back({catalog_name(t), t});
        }
    static const std::vector<std::vector<int>> named_spiders = {
        {3, 3, 3},    {5, 3, 1},    {7, 1, 1},       {4, 4, 1},    {3, 3, 1, 1, 1},
        {5, 5},       {4, 3, 3},    {3, 3, 3, 1},    {6, 2, 2},    {2, 2, 2, 2, 2},
        {5, 5, 1},    {3, 3, 3, 3}, {5, 1, 1, 1, 1}, {4, 4, 2, 1},
    };
    for (const auto& legs : named_spiders) {
        Graph t = spider_tree(legs);
        if (t.order() <= max_order)
            continue;
        out.push_back({catalog_name(t), std::move(t)});
    }
    return out;
}

}  // namespace spextree
