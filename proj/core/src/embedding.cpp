#include "spextree/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detail/bitset.hpp"

namespace spextree {

namespace {

using detail::VertexSet;

// Host data shared by both searches.
struct HostIndex {
    explicit HostIndex(const Graph& g) : graph(g), adj(detail::adjacency_sets(g)) {
        const auto n = static_cast<std::size_t>(g.order());
        open_class.resize(n);
        closed_class.resize(n);
        std::map<std::vector<int>, int> open_ids, closed_ids;
        for (int v = 0; v < g.order(); ++v) {
            const auto& nb = g.neighbors(v);
            open_class[static_cast<std::size_t>(v)] =
                open_ids.emplace(nb, static_cast<int>(open_ids.size())).first->second;
            std::vector<int> closed = nb;
            closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
            closed_class[static_cast<std::size_t>(v)] =
                closed_ids.emplace(std::move(closed), static_cast<int>(closed_ids.size())).first->second;
        }
        const auto comp = g.components();
        std::vector<int> sizes(n, 0);
        for (int c : comp)
            ++sizes[static_cast<std::size_t>(c)];
        component_size.resize(n);
        for (std::size_t v = 0; v < n; ++v)
            component_size[v] = sizes[static_cast<std::size_t>(comp[v])];
        by_degree.resize(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool twins(int u, int v) const {
        return open_class[static_cast<std::size_t>(u)] == open_class[static_cast<std::size_t>(v)] ||
               closed_class[static_cast<std::size_t>(u)] == closed_class[static_cast<std::size_t>(v)];
    }

    // Neighbours of v in degree-descending order.
    std::vector<int> neighbors_by_degree(int v) const {
        std::vector<int> out = graph.neighbors(v);
        std::stable_sort(out.begin(), out.end(),
                         [&](int a, int b) { return graph.degree(a) > graph.degree(b); });
        return out;
    }

    const Graph& graph;
    std::vector<VertexSet> adj;
    std::vector<int> open_class;
    std::vector<int> closed_class;
    std::vector<int> component_size;
    std::vector<int> by_degree;
};

// Tracks the twin classes already tried at one choice point.
class TwinFilter {
public:
    explicit TwinFilter(const HostIndex& host) : host_(host) {}
    bool redundant(int v) const {
        return std::any_of(tried_.begin(), tried_.end(), [&](int u) { return host_.twins(u, v); });
    }
    void tried(int v) { tried_.push_back(v); }

private:
    const HostIndex& host_;
    std::vector<int> tried_;
};

class TreeSearch {
public:
    TreeSearch(const Graph& host, const Graph& tree, const SearchBudget& budget)
        : host_(host), tree_(tree), budget_(budget), used_(host.order()) {
        const int l = tree.order();
        root_ = 0;
        for (int v = 1; v < l; ++v)
            if (tree.degree(v) > tree.degree(root_))
                root_ = v;
        parent_.assign(static_cast<std::size_t>(l), -1);
        std::vector<int> order{root_};
        std::vector<char> seen(static_cast<std::size_t>(l), 0);
        seen[static_cast<std::size_t>(root_)] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : tree.neighbors(order[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    parent_[static_cast<std::size_t>(w)] = order[i];
                    order.push_back(w);
                }
        for (int v : order) {
            if (v == root_ || tree.degree(v) >= 2)
                internal_.push_back(v);
            else
                leaves_.push_back(v);
        }
        pending_.assign(static_cast<std::size_t>(l), 0);
        for (int v = 0; v < l; ++v)
            pending_[static_cast<std::size_t>(v)] = tree.degree(v) - (v == root_ ? 0 : 1);
        image_.assign(static_cast<std::size_t>(l), -1);
    }

    EmbeddingWitness run() {
        EmbeddingWitness out;
        if (extend(0)) {
            out.status = SearchStatus::found;
            out.mapping = image_;
        } else {
            out.status = exhausted_ ? SearchStatus::inconclusive : SearchStatus::absent;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    int unused_neighbors(int h) const {
        return host_.adj[static_cast<std::size_t>(h)].count_and_not(used_);
    }

    // Every placed vertex must still have room for its unplaced children.
    bool capacities_ok(std::size_t placed) const {
        for (std::size_t i = 0; i < placed; ++i) {
            int t = internal_[i];
            int need = pending_[static_cast<std::size_t>(t)];
            if (need > 0 && unused_neighbors(image_[static_cast<std::size_t>(t)]) < need)
                return false;
        }
        return true;
    }

    bool extend(std::size_t idx) {
        if (idx == internal_.size())
            return match_leaves();
        const int t = internal_[idx];
        const int need_degree = tree_.degree(t);
        const int children = pending_[static_cast<std::size_t>(t)];
        const int p = parent_[static_cast<std::size_t>(t)];

        const std::vector<int> candidates =
            p < 0 ? host_.by_degree : host_.neighbors_by_degree(image_[static_cast<std::size_t>(p)]);
        TwinFilter filter(host_);
        for (int h : candidates) {
            if (used_.test(h) || host_.graph.degree(h) < need_degree)
                continue;
            if (p < 0 && host_.component_size[static_cast<std::size_t>(h)] < tree_.order())
                continue;
            if (filter.redundant(h))
                continue;
            filter.tried(h);
            if (budget_.max_nodes && nodes_ >= budget_.max_nodes) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            used_.set(h);
            image_[static_cast<std::size_t>(t)] = h;
            if (p >= 0)
                --pending_[static_cast<std::size_t>(p)];
            if (unused_neighbors(h) >= children && capacities_ok(idx + 1) && extend(idx + 1))
                return true;
            if (p >= 0)
                ++pending_[static_cast<std::size_t>(p)];
            image_[static_cast<std::size_t>(t)] = -1;
            used_.reset(h);
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool match_leaves() {
        std::vector<int> owner(static_cast<std::size_t>(host_.graph.order()), -1);
        std::vector<int> stamp(static_cast<std::size_t>(host_.graph.order()), -1);
        std::vector<int> assigned(leaves_.size(), -1);
        auto augment = [&](auto&& self, std::size_t i, int round) -> bool {
            int base = image_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(leaves_[i])])];
            for (int h : host_.graph.neighbors(base)) {
                if (used_.test(h) || stamp[static_cast<std::size_t>(h)] == round)
                    continue;
                stamp[static_cast<std::size_t>(h)] = round;
                int other = owner[static_cast<std::size_t>(h)];
                if (other < 0 || self(self, static_cast<std::size_t>(other), round)) {
                    owner[static_cast<std::size_t>(h)] = static_cast<int>(i);
                    assigned[i] = h;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < leaves_.size(); ++i)
            if (!augment(augment, i, static_cast<int>(i)))
                return false;
        for (std::size_t i = 0; i < leaves_.size(); ++i)
            image_[static_cast<std::size_t>(leaves_[i])] = assigned[i];
        return true;
    }

    HostIndex host_;
    const Graph& tree_;
    SearchBudget budget_;
    VertexSet used_;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<int> internal_;
    std::vector<int> leaves_;
    std::vector<int> pending_;
    std::vector<int> image_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

class PatternSearch {
public:
    PatternSearch(const Graph& host, const Graph& pattern, const SearchBudget& budget)
        : host_(host), pattern_(pattern), budget_(budget), used_(host.order()) {
        const int k = pattern.order();
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        std::vector<int> placed_neighbors(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < k; ++v)
            if (pattern.degree(v) == 0)
                isolated_.push_back(v);
        const std::size_t active = static_cast<std::size_t>(k) - isolated_.size();
        while (order_.size() < active) {
            int best = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)] || pattern.degree(v) == 0)
                    continue;
                if (best < 0 ||
                    placed_neighbors[static_cast<std::size_t>(v)] > placed_neighbors[static_cast<std::size_t>(best)] ||
                    (placed_neighbors[static_cast<std::size_t>(v)] == placed_neighbors[static_cast<std::size_t>(best)] &&
                     pattern.degree(v) > pattern.degree(best)))
                    best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order_.push_back(best);
            for (int w : pattern.neighbors(best))
                ++placed_neighbors[static_cast<std::size_t>(w)];
        }
        image_.assign(static_cast<std::size_t>(k), -1);
    }

    EmbeddingWitness run() {
        EmbeddingWitness out;
        if (pattern_.order() <= host_.graph.order() && extend(0)) {
            out.status = SearchStatus::found;
            int next = 0;
            for (int v : isolated_) {
                while (used_.test(next))
                    ++next;
                used_.set(next);
                image_[static_cast<std::size_t>(v)] = next;
            }
            out.mapping = image_;
        } else {
            out.status = exhausted_ ? SearchStatus::inconclusive : SearchStatus::absent;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    bool extend(std::size_t idx) {
        if (idx == order_.size())
            return true;
        const int t = order_[idx];
        int anchor = -1;
        for (int w : pattern_.neighbors(t))
            if (image_[static_cast<std::size_t>(w)] >= 0) {
                anchor = image_[static_cast<std::size_t>(w)];
                break;
            }
        const std::vector<int> candidates = anchor < 0 ? host_.by_degree : host_.neighbors_by_degree(anchor);
        TwinFilter filter(host_);
        for (int h : candidates) {
            if (used_.test(h) || host_.graph.degree(h) < pattern_.degree(t))
                continue;
            bool ok = true;
            for (int w : pattern_.neighbors(t)) {
                int hw = image_[static_cast<std::size_t>(w)];
                if (hw >= 0 && !host_.adj[static_cast<std::size_t>(h)].test(hw)) {
                    ok = false;
                    break;
                }
            }
            if (!ok || filter.redundant(h))
                continue;
            filter.tried(h);
            if (budget_.max_nodes && nodes_ >= budget_.max_nodes) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            used_.set(h);
            image_[static_cast<std::size_t>(t)] = h;
            if (extend(idx + 1))
                return true;
            image_[static_cast<std::size_t>(t)] = -1;
            used_.reset(h);
            if (exhausted_)
                return false;
        }
        return false;
    }

    HostIndex host_;
    const Graph& pattern_;
    SearchBudget budget_;
    VertexSet used_;
    std::vector<int> order_;
    std::vector<int> isolated_;
    std::vector<int> image_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

std::string_view to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::absent:
        return "absent";
    case SearchStatus::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

EmbeddingWitness contains_tree(const Graph& host, const Graph& tree, const SearchBudget& budget) {
    EmbeddingWitness out;
    if (tree.order() == 0) {
        out.status = SearchStatus::found;
        return out;
    }
    if (tree.order() > host.order() || tree.size() > host.size())
        return out;
    return TreeSearch(host, tree, budget).run();
}

EmbeddingWitness find_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget) {
    EmbeddingWitness out;
    if (pattern.order() > host.order() || pattern.size() > host.size())
        return out;
    return PatternSearch(host, pattern, budget).run();
}

bool is_family_free(const Graph& host, const CoveringFamily& family) {
    return std::none_of(family.patterns.begin(), family.patterns.end(),
                        [&](const CoveringPattern& p) { return find_subgraph(host, p.graph).found(); });
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& mapping) {
    if (mapping.size() != static_cast<std::size_t>(pattern.order()))
        return false;
    std::vector<int> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int h : mapping)
        if (h < 0 || h >= host.order())
            return false;
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

}  // namespace spextree
