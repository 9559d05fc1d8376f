#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree {

/// Leg structure of a tree with at most one vertex of degree >= 3.
struct SpiderProfile {
    int center = 0;
    /// Center-to-leaf path lengths, non-increasing.
    std::vector<int> legs;
    int r1 = 0;  ///< odd legs of length >= 5
    int r2 = 0;  ///< legs of length 3
    int r3 = 0;  ///< legs of length 1
    int s = 0;   ///< even legs
    int r = 0;   ///< r1 + r2 + r3

    friend bool operator==(const SpiderProfile&, const SpiderProfile&) = default;
};

struct TreeProfile {
    int l = 0;
    /// The smaller colour class (the class of vertex 0 when both have equal size).
    std::vector<int> side_a;
    std::vector<int> side_b;
    int q = 0;
    /// Minimum degree over side A; with |A| = |B| the minimum over both orientations.
    int delta = 0;
    bool ambiguous_orientation = false;
    int beta = 0;
    int nu = 0;
    int diameter = 0;
    /// A minimum vertex cover realizing beta.
    std::vector<int> min_cover;
    std::optional<SpiderProfile> spider;
};

bool is_tree(const Graph& g);

enum class TreeFormat { edge_list, catalog };

/// Parses a tree from an edge list or a catalog name such as path(5), star(6),
/// spider(3,3,1), doublestar(1,2), broom(7,3) or tree(9,17).
/// Throws ParseError for malformed input, cycles or disconnected edge lists.
Graph parse_tree(std::string_view source, TreeFormat format);
/// Catalog name when the text looks like name(args), edge list otherwise.
Graph parse_tree(std::string_view source);

// Named trees.
Graph path_tree(int l);
/// K_{1,l-1}.
Graph star_tree(int l);
/// Legs of the given lengths glued at vertex 0.
Graph spider_tree(const std::vector<int>& legs);
/// Centers with a and b pendant leaves joined by an edge; a + b + 2 vertices.
Graph doublestar_tree(int a, int b);
/// A path on l - k vertices with k extra leaves attached to one end.
Graph broom_tree(int l, int k);
/// The i-th tree (0-based) on l vertices in canonical enumeration order.
Graph indexed_tree(int l, int index);

/// Bipartition, cover and matching numbers, delta, diameter and spider legs.
/// Requires a tree with at least two vertices.
TreeProfile profile(const Graph& tree);

/// Absent if two or more vertices have degree >= 3. Paths use the vertex at position
/// floor(l/2) counted from the lower-numbered end unless `center` names another
/// degree-2 vertex.
std::optional<SpiderProfile> spider_profile(const Graph& tree, std::optional<int> center = {});

/// Minimum vertex cover of a tree by dynamic programming; the cover is written to
/// `witness` when given.
int tree_min_cover(const Graph& tree, std::vector<int>* witness = nullptr);

/// Maximum matching of a bipartite graph by augmenting paths.
int bipartite_max_matching(const Graph& g);

/// The spider with gamma legs of length 1, alpha+1 legs of length 2 and one leg of
/// length d-2, where l-d-1 = 2 alpha + gamma. Order l, diameter d.
/// Requires l >= 6 and 4 <= d <= l-1.
Graph diameter_spider(int l, int d);

struct CatalogEntry {
    std::string name;
    Graph tree;
};

/// Every tree with at most `max_order` vertices (stars excluded unless asked), named
/// by the most specific catalog form, followed by a list of larger named spiders.
std::vector<CatalogEntry> builtin_catalog(int max_order = 9, bool include_stars = false);

/// The most specific catalog name of a tree: path, star, spider, doublestar or
/// tree(l,i).
std::string catalog_name(const Graph& tree);

}  // namespace spextree
