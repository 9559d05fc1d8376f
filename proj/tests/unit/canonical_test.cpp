#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spextree/canonical.hpp"
#include "spextree/constructions.hpp"
#include "spextree/error.hpp"

using namespace spextree;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        Graph g = ref::random_graph(1 + t % 16, 0.35, rng);
        Graph h = g.relabeled(shuffled(g.order(), rng));
        CHECK(canonical_form(g).code == canonical_form(h).code);
        CHECK(canonical_graph(g) == canonical_graph(h));
    }
}

TEST_CASE("canonical labeling is a permutation producing the canonical graph") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        Graph g = ref::random_graph(2 + t % 7, 0.4, rng);
        auto cf = canonical_form(g);
        std::vector<int> sorted = cf.labeling;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ident(g.order());
        std::iota(ident.begin(), ident.end(), 0);
        CHECK(sorted == ident);
        CHECK(ref::brute_isomorphic(canonical_graph(g), g));
    }
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 400; ++t) {
        int n = 1 + t % 7;
        Graph a = ref::random_graph(n, 0.5, rng), b = ref::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, b) == ref::brute_isomorphic(a, b));
    }
}

TEST_CASE("regular and symmetric graphs") {
    // Vertex-transitive graphs stress the automorphism pruning.
    CHECK(are_isomorphic(cycle_graph(12), cycle_graph(12).relabeled(std::vector<int>{5, 3, 1, 0, 2, 4, 6, 8, 10, 11, 9, 7})));
    CHECK_FALSE(are_isomorphic(cycle_graph(12), disjoint_union(cycle_graph(6), cycle_graph(6))));
    CHECK_FALSE(are_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6)));
    auto k = canonical_form(complete_graph(30));
    CHECK(k.last_orbit.size() == 30);
    auto kb = canonical_form(complete_bipartite(3, 40));
    CHECK(kb.generators.size() >= 2);
}

TEST_CASE("last orbit matches brute-force automorphisms") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 6;
        Graph g = ref::random_graph(n, 0.5, rng);
        auto cf = canonical_form(g);
        int last = cf.labeling.back();
        std::vector<int> orbit;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (g.relabeled(perm) == g)
                orbit.push_back(perm[last]);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        CHECK(cf.last_orbit == orbit);
    }
}

TEST_CASE("graph enumeration counts") {
    // Brute force minimum-string classes for n <= 5, then known totals.
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<int>(nonisomorphic_graphs(n).size()) == ref::brute_count_graphs(n));
    CHECK(nonisomorphic_graphs(6).size() == 156);
    CHECK(nonisomorphic_graphs(7).size() == 1044);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    const auto& gs = nonisomorphic_graphs(6);
    std::vector<std::vector<std::uint64_t>> codes;
    for (const auto& g : gs) {
        CHECK(g.order() == 6);
        codes.push_back(canonical_form(g).code);
    }
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("tree enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        const auto& ts = nonisomorphic_trees(n);
        CHECK(ts.size() == expected[n - 1]);
        for (const auto& t : ts)
            CHECK(t.size() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(nonisomorphic_graphs(kGraphEnumerationMaxOrder + 1), BudgetError);
    CHECK_THROWS_AS(nonisomorphic_trees(kTreeEnumerationMaxOrder + 1), BudgetError);
}

TEST_CASE("tree classes account for every labeled tree") {
    // Summing n!/|Aut(T)| over the classes must give Cayley's n^(n-2).
    for (int n = 2; n <= 7; ++n) {
        double labeled = 0;
        double factorial = 1;
        for (int i = 2; i <= n; ++i)
            factorial *= i;
        for (const auto& t : nonisomorphic_trees(n)) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            int aut = 0;
            do {
                aut += t.relabeled(perm) == t;
            } while (std::next_permutation(perm.begin(), perm.end()));
            labeled += factorial / aut;
        }
        CHECK(labeled == doctest::Approx(std::pow(n, n - 2)));
    }
}
