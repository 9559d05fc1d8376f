#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spextree/canonical.hpp"
#include "spextree/constructions.hpp"
#include "spextree/error.hpp"
#include "spextree/extremal.hpp"
#include "spextree/oracle.hpp"
#include "spextree/tree.hpp"

using namespace spextree;
using doctest::Approx;

namespace {

bool has_maximizer(const OracleResult& r, const Graph& g) {
    for (const auto& m : r.maximizers)
        if (are_isomorphic(m.graph, g))
            return true;
    return false;
}

}  // namespace

TEST_CASE("exhaustive oracle: P4 at n = 5 is a three-way tie") {
    auto r = spex_exhaustive(5, path_graph(4));
    CHECK(r.optimum.value == Approx(2.0).epsilon(1e-9));
    CHECK(r.maximizers.size() == 3);
    CHECK(has_maximizer(r, complete_bipartite(1, 4)));
    CHECK(has_maximizer(r, disjoint_union(complete_graph(3), empty_graph(2))));
    CHECK(r.candidates == 34);
    CHECK(r.label() == "exhaustive");
    CHECK_FALSE(r.restricted);

    auto brute = ref::brute_spex(5, path_graph(4));
    CHECK(std::abs(brute.rho - r.optimum.value) < 1e-9);
    CHECK(brute.classes == 3);
}

TEST_CASE("exhaustive oracle: P4 at n = 6 has the star as unique maximizer") {
    auto r = spex_exhaustive(6, path_graph(4));
    CHECK(r.optimum.value == Approx(std::sqrt(5.0)).epsilon(1e-9));
    REQUIRE(r.maximizers.size() == 1);
    CHECK(are_isomorphic(r.maximizers[0].graph, construct_G_nl(6, 4)));
    auto brute = ref::brute_spex(6, path_graph(4));
    CHECK(std::abs(brute.rho - r.optimum.value) < 1e-9);
    CHECK(brute.classes == 1);
}

TEST_CASE("exhaustive oracle matches labeled brute force on small trees") {
    for (int n = 4; n <= 6; ++n)
        for (int l = 3; l <= n; ++l)
            for (const auto& tree : nonisomorphic_trees(l)) {
                auto r = spex_exhaustive(n, tree);
                auto brute = ref::brute_spex(n, tree);
                CHECK(std::abs(brute.rho - r.optimum.value) < 1e-9);
                CHECK(brute.classes == static_cast<int>(r.maximizers.size()));
            }
}

TEST_CASE("exhaustive oracle: P5 at n = 7 is beaten by K4 plus isolated vertices") {
    // K4 + 3K1 has only four vertices per component, so it cannot hold P5, and its
    // spectral radius 3 exceeds that of S(7,1,1).
    Graph k4 = disjoint_union(complete_graph(4), empty_graph(3));
    CHECK(!ref::brute_contains(complete_graph(4), path_graph(5)));
    CHECK(ref::dense_rho(k4) > ref::dense_rho(construct_S(7, 1, 1)) + 0.3);

    auto r = spex_exhaustive(7, path_graph(5));
    CHECK(r.optimum.value == Approx(3.0).epsilon(1e-9));
    CHECK(has_maximizer(r, k4));
    CHECK_FALSE(has_maximizer(r, construct_S(7, 1, 1)));
    CHECK(r.maximizers.size() == 4);
}

TEST_CASE("exhaustive oracle budget") {
    CHECK_THROWS_AS(spex_exhaustive(9, path_graph(4)), BudgetError);
    CHECK_THROWS_AS(spex_exhaustive(0, path_graph(4)), RangeError);
}

TEST_CASE("join-form oracle examples") {
    auto p6 = spex_joinform(30, path_graph(6), false);
    CHECK(p6.restricted);
    CHECK(p6.label() == "restricted-family optimum");
    REQUIRE(p6.maximizers.size() == 1);
    CHECK(are_isomorphic(p6.maximizers[0].graph, construct_S(30, 2, 0)));

    auto s331 = spex_joinform(30, spider_tree({3, 3, 1}), false);
    REQUIRE(s331.maximizers.size() == 1);
    CHECK(are_isomorphic(s331.maximizers[0].graph, construct_S(30, 2, 2)));
    CHECK(s331.maximizers[0].matched_pairs == 2);

    auto s3311 = spex_joinform(20, spider_tree({3, 3, 1, 1}), false);
    REQUIRE(s3311.maximizers.size() == 1);
    CHECK(are_isomorphic(s3311.maximizers[0].graph, construct_S(20, 2, 9)));
    CHECK(s3311.optimum.value == Approx(quotient_spectral_radius(quotient_S(20, 2, 9)).value).epsilon(1e-9));
}

TEST_CASE("join-form oracle with every large side") {
    auto r = spex_joinform(9, path_graph(5), true);
    CHECK_FALSE(r.restricted);
    CHECK(r.label() == "join-form optimum (all R)");
    CHECK(r.level == OracleLevel::joinform_all_r);
    // Every join candidate is also a graph on n vertices, so the exhaustive optimum
    // dominates whenever both are affordable.
    for (const auto& tree : {path_graph(5), path_graph(6), spider_tree({2, 2, 1}), doublestar_tree(1, 2)}) {
        auto all = spex_joinform(8, tree, true);
        auto matching = spex_joinform(8, tree, false);
        auto exhaustive = spex_exhaustive(8, tree);
        CHECK(all.optimum.value <= exhaustive.optimum.value + 1e-9);
        CHECK(matching.optimum.value <= all.optimum.value + 1e-9);
    }
    CHECK_THROWS_AS(spex_joinform(12, path_graph(5), true), BudgetError);
    CHECK_THROWS_AS(spex_joinform(40, path_graph(16), false), BudgetError);
    CHECK_THROWS_AS(spex_joinform(10, star_tree(5), false), DomainError);
}

TEST_CASE("maximizers are F-free and pairwise non-isomorphic") {
    for (const auto& tree : {path_graph(6), doublestar_tree(1, 2), spider_tree({2, 2})}) {
        auto r = spex_exhaustive(8, tree);
        for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
            CHECK_FALSE(ref::brute_contains(r.maximizers[i].graph, tree));
            CHECK(std::abs(ref::dense_rho(r.maximizers[i].graph) - r.optimum.value) < 1e-8);
            for (std::size_t j = i + 1; j < r.maximizers.size(); ++j)
                CHECK_FALSE(are_isomorphic(r.maximizers[i].graph, r.maximizers[j].graph));
        }
    }
}
