#include "spextree/graph.hpp"

#include <algorithm>
#include <queue>

#include "spextree/error.hpp"

namespace spextree {

Graph::Graph(int order) {
    if (order < 0)
        throw RangeError("graph order must be non-negative, got " + std::to_string(order));
    adj_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw RangeError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(order()));
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw RangeError("loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adj_)
        best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty())
        return 0;
    int best = order();
    for (const auto& nb : adj_)
        best = std::min(best, static_cast<int>(nb.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq;
    seq.reserve(adj_.size());
    for (const auto& nb : adj_)
        seq.push_back(static_cast<int>(nb.size()));
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> position(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (position[static_cast<std::size_t>(vertices[i])] != -1)
            throw RangeError("duplicate vertex " + std::to_string(vertices[i]) + " in induced set");
        position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : adj_[static_cast<std::size_t>(vertices[i])]) {
            int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), j);
        }
    return sub;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (perm.size() != adj_.size())
        throw RangeError("permutation size does not match graph order");
    Graph out(order());
    for (auto [u, v] : edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(adj_.size(), -1);
    int next = 0;
    for (int s = 0; s < order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        std::queue<int> frontier;
        frontier.push(s);
        comp[static_cast<std::size_t>(s)] = next;
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    frontier.push(w);
                }
        }
        ++next;
    }
    return comp;
}

bool Graph::is_connected() const {
    auto comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph empty_graph(int order) { return Graph(order); }

Graph complete_graph(int order) {
    Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph path_graph(int order) {
    Graph g(order);
    for (int v = 0; v + 1 < order; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int order) {
    if (order < 3)
        throw RangeError("cycle needs at least 3 vertices");
    Graph g = path_graph(order);
    g.add_edge(order - 1, 0);
    return g;
}

Graph matching_graph(int order, int p) {
    if (p < 0 || 2 * p > order)
        throw RangeError("matching of " + std::to_string(p) + " edges does not fit in " +
                         std::to_string(order) + " vertices");
    Graph g(order);
    for (int i = 0; i < p; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
    const int offset = first.order();
    Graph g(first.order() + second.order());
    for (auto [u, v] : first.edges())
        g.add_edge(u, v);
    for (auto [u, v] : second.edges())
        g.add_edge(u + offset, v + offset);
    return g;
}

Graph join(const Graph& first, const Graph& second) {
    Graph g = disjoint_union(first, second);
    const int offset = first.order();
    for (int u = 0; u < first.order(); ++u)
        for (int v = 0; v < second.order(); ++v)
            g.add_edge(u, v + offset);
    return g;
}

int diameter(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> frontier;
        frontier.push(s);
        dist[static_cast<std::size_t>(s)] = 0;
        int reached = 1;
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int w : g.neighbors(u))
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    best = std::max(best, dist[static_cast<std::size_t>(w)]);
                    ++reached;
                    frontier.push(w);
                }
        }
        if (reached != n)
            return -1;
    }
    return best;
}

}  // namespace spextree
