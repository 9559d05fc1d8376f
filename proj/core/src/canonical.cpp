#include "spextree/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "detail/bitset.hpp"
#include "spextree/error.hpp"

namespace spextree {

namespace {

using Cells = std::vector<std::vector<int>>;
using Code = std::vector<std::uint64_t>;

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            auto& p = parent[static_cast<std::size_t>(v)];
            p = parent[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> parent;
};

class Refiner {
public:
    explicit Refiner(const Graph& g) : g_(g), count_(static_cast<std::size_t>(g.order()), 0) {}

    // Splits cells by neighbour counts into each splitter until equitable.
    void refine(Cells& cells, std::deque<std::vector<int>> queue) {
        std::vector<int> touched;
        while (!queue.empty()) {
            if (cells.size() == static_cast<std::size_t>(g_.order()))
                return;
            std::vector<int> splitter = std::move(queue.front());
            queue.pop_front();
            touched.clear();
            for (int u : splitter)
                for (int w : g_.neighbors(u)) {
                    if (count_[static_cast<std::size_t>(w)]++ == 0)
                        touched.push_back(w);
                }
            if (!touched.empty()) {
                Cells next;
                next.reserve(cells.size() + 4);
                for (auto& cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(std::move(cell));
                        continue;
                    }
                    const int first = count_[static_cast<std::size_t>(cell.front())];
                    bool uniform = std::all_of(cell.begin(), cell.end(), [&](int v) {
                        return count_[static_cast<std::size_t>(v)] == first;
                    });
                    if (uniform) {
                        next.push_back(std::move(cell));
                        continue;
                    }
                    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
                        return count_[static_cast<std::size_t>(a)] <
                               count_[static_cast<std::size_t>(b)];
                    });
                    std::size_t start = 0;
                    for (std::size_t i = 1; i <= cell.size(); ++i) {
                        if (i == cell.size() ||
                            count_[static_cast<std::size_t>(cell[i])] !=
                                count_[static_cast<std::size_t>(cell[start])]) {
                            std::vector<int> part(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                                  cell.begin() + static_cast<std::ptrdiff_t>(i));
                            queue.push_back(part);
                            next.push_back(std::move(part));
                            start = i;
                        }
                    }
                }
                cells = std::move(next);
            }
            for (int w : touched)
                count_[static_cast<std::size_t>(w)] = 0;
        }
    }

private:
    const Graph& g_;
    std::vector<int> count_;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.order()), adj_(detail::adjacency_sets(g)), refiner_(g) {}

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0)
            return out;
        Cells cells{std::vector<int>(static_cast<std::size_t>(n_))};
        std::iota(cells[0].begin(), cells[0].end(), 0);
        refiner_.refine(cells, {cells[0]});
        std::vector<int> path;
        search(cells, path);

        out.labeling = best_lab_;
        out.code = best_code_;
        out.generators = automorphisms_;
        out.leaves = leaves_;
        UnionFind uf(n_);
        for (const auto& gamma : automorphisms_)
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gamma[static_cast<std::size_t>(v)]);
        const int root = uf.find(best_lab_.back());
        for (int v = 0; v < n_; ++v)
            if (uf.find(v) == root)
                out.last_orbit.push_back(v);
        return out;
    }

private:
    static constexpr int kNoJump = -1;

    Code make_code(const std::vector<int>& lab) const {
        const std::size_t bits = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
        Code code((bits + 63) / 64, 0);
        std::size_t t = 0;
        for (int i = 0; i < n_; ++i) {
            const auto& row = adj_[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < n_; ++j, ++t)
                if (row.test(lab[static_cast<std::size_t>(j)]))
                    code[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
        }
        return code;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < from.size(); ++i)
            gamma[static_cast<std::size_t>(from[i])] = to[i];
        bool identity = true;
        for (int v = 0; v < n_ && identity; ++v)
            identity = gamma[static_cast<std::size_t>(v)] == v;
        if (!identity)
            automorphisms_.push_back(std::move(gamma));
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        return static_cast<int>(i);
    }

    // Returns the depth to unwind to after finding a leaf equivalent to the first
    // leaf (the subtree being explored is then an automorphic image of one already
    // searched), or kNoJump.
    int search(const Cells& cells, std::vector<int>& path) {
        if (cells.size() == static_cast<std::size_t>(n_)) {
            ++leaves_;
            std::vector<int> lab;
            lab.reserve(static_cast<std::size_t>(n_));
            for (const auto& c : cells)
                lab.push_back(c.front());
            Code code = make_code(lab);
            if (!have_first_) {
                have_first_ = true;
                first_code_ = best_code_ = code;
                first_lab_ = best_lab_ = lab;
                first_path_ = path;
                return kNoJump;
            }
            if (code == first_code_) {
                record_automorphism(first_lab_, lab);
                return common_prefix(path, first_path_);
            }
            if (code == best_code_) {
                record_automorphism(best_lab_, lab);
                return kNoJump;
            }
            if (code < best_code_) {
                best_code_ = std::move(code);
                best_lab_ = std::move(lab);
            }
            return kNoJump;
        }

        std::size_t target = 0;
        while (cells[target].size() == 1)
            ++target;
        const int depth = static_cast<int>(path.size());
        std::vector<int> explored;
        for (int v : cells[target]) {
            if (!explored.empty() && same_orbit_as_explored(v, explored, path))
                continue;
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    next.push_back(cells[c]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v)
                        rest.push_back(w);
                next.push_back(std::move(rest));
            }
            refiner_.refine(next, {{v}});
            path.push_back(v);
            int jump = search(next, path);
            path.pop_back();
            explored.push_back(v);
            if (jump != kNoJump && jump < depth)
                return jump;
        }
        return kNoJump;
    }

    // Orbits of the group generated by found automorphisms that fix `path` pointwise.
    bool same_orbit_as_explored(int v, const std::vector<int>& explored,
                                const std::vector<int>& path) const {
        UnionFind uf(n_);
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int p) {
                return gamma[static_cast<std::size_t>(p)] == p;
            });
            if (!fixes)
                continue;
            any = true;
            for (int w = 0; w < n_; ++w)
                uf.unite(w, gamma[static_cast<std::size_t>(w)]);
        }
        if (!any)
            return false;
        const int root = uf.find(v);
        return std::any_of(explored.begin(), explored.end(),
                           [&](int u) { return uf.find(u) == root; });
    }

    const Graph& g_;
    int n_;
    std::vector<detail::VertexSet> adj_;
    Refiner refiner_;

    bool have_first_ = false;
    Code first_code_;
    std::vector<int> first_lab_;
    std::vector<int> first_path_;
    Code best_code_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> automorphisms_;
    std::uint64_t leaves_ = 0;
};

std::vector<Graph> enumerate_graphs(int n) {
    std::vector<Graph> out;
    if (n == 0) {
        out.emplace_back(0);
        return out;
    }
    // Depth-first canonical augmentation from K1.
    auto grow = [&](auto&& self, const Graph& parent) -> void {
        const int k = parent.order();
        if (k == n) {
            out.push_back(parent);
            return;
        }
        std::set<Code> siblings;
        const std::uint32_t subsets = std::uint32_t{1} << k;
        const auto parent_edges = parent.edges();
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            Graph child(k + 1, parent_edges);
            for (int v = 0; v < k; ++v)
                if (mask & (std::uint32_t{1} << v))
                    child.add_edge(v, k);
            CanonicalForm form = canonical_form(child);
            if (!std::binary_search(form.last_orbit.begin(), form.last_orbit.end(), k))
                continue;
            if (!siblings.insert(form.code).second)
                continue;
            self(self, child);
        }
    };
    grow(grow, Graph(1));
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n <= 0)
        return {Graph(0)};
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::map<Code, Graph> next;
        for (const auto& tree : level) {
            const auto edges = tree.edges();
            for (int v = 0; v < k; ++v) {
                Graph child(k + 1, edges);
                child.add_edge(v, k);
                CanonicalForm form = canonical_form(child);
                next.try_emplace(form.code, child);
            }
        }
        level.clear();
        for (auto& [code, tree] : next)
            level.push_back(std::move(tree));
    }
    return level;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_graph(const Graph& g) {
    const auto form = canonical_form(g);
    std::vector<int> position(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < form.labeling.size(); ++i)
        position[static_cast<std::size_t>(form.labeling[i])] = static_cast<int>(i);
    return g.relabeled(position);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    if (a.degree_sequence() != b.degree_sequence())
        return false;
    return canonical_form(a).code == canonical_form(b).code;
}

const std::vector<Graph>& nonisomorphic_graphs(int n) {
    if (n < 0 || n > kGraphEnumerationMaxOrder)
        throw BudgetError("graph enumeration order", kGraphEnumerationMaxOrder, n);
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_graphs(n)).first;
    return it->second;
}

const std::vector<Graph>& nonisomorphic_trees(int n) {
    if (n < 1 || n > kTreeEnumerationMaxOrder)
        throw BudgetError("tree enumeration order", kTreeEnumerationMaxOrder, n);
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_trees(n)).first;
    return it->second;
}

}  // namespace spextree
