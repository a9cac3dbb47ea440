#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "hypertree/constructions.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/structure.hpp"
#include "oracle_trees.hpp"

using namespace hypertree;

TEST_CASE("canonical codes are relabeling invariant") {
    TreeSkeleton a = TreeSkeleton::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    TreeSkeleton b = TreeSkeleton::from_edges(5, {{3, 0}, {0, 4}, {4, 1}, {1, 2}});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) == canonical_code(a));

    TreeSkeleton spider122 = TreeSkeleton::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    TreeSkeleton spider113 = TreeSkeleton::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(canonical_code(spider122) != canonical_code(spider113));
}

TEST_CASE("free tree counts match the exhaustive labeled oracle") {
    const std::map<int, std::size_t> expected{{2, 1}, {3, 1}, {4, 2}, {5, 3},
                                              {6, 6}, {7, 11}, {8, 23}};
    for (auto [n, count] : expected) {
        auto trees = enumerate_free_trees(n);
        REQUIRE(trees.size() == count);
        // all distinct, all valid, sorted by code
        std::set<CanonicalCode> codes;
        for (const auto& t : trees) {
            REQUIRE(t.n == n);
            codes.insert(canonical_code(t));
        }
        REQUIRE(codes.size() == count);
        if (n <= 7) REQUIRE(oracle::count_free_trees_exhaustive_slow(n) == count);
        REQUIRE(oracle::count_free_trees_exhaustive(n) == count);
    }
    CHECK(enumerate_free_trees(9).size() == 47);
    CHECK(enumerate_free_trees(10).size() == 106);
    CHECK(enumerate_free_trees(13).size() == 1301);
    CHECK_THROWS_AS(enumerate_free_trees(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_free_trees(14), std::invalid_argument);
}

TEST_CASE("classes partition the tree set for every fixed length") {
    for (int m : {4, 5, 6, 7})
        for (int ell : {1, 2, 3}) {
            std::size_t trees = enumerate_free_trees(m + 1).size();
            std::size_t total = 0;
            for (int k = 0; k <= m + 1; ++k) total += enumerate_class({m, 3, ell, k}).size();
            REQUIRE(total == trees);
        }
}

TEST_CASE("class members are validated power hypertrees with the right count") {
    for (int m : {4, 5, 6})
        for (int ell : {1, 2})
            for (int k = 0; k <= m; ++k)
                for (const ClassMember& mem : enumerate_class({m, 3, ell, k})) {
                    REQUIRE(is_power_hypertree(mem.graph, 3));
                    REQUIRE(count_pendant_paths(mem.graph, ell).count() == k);
                    REQUIRE(mem.code == canonical_code(mem.tree));
                }
}

TEST_CASE("named classes from the theorems") {
    auto two_long = enumerate_class({5, 3, 2, 2});
    REQUIRE(two_long.size() == 2);
    std::set<CanonicalCode> expected{canonical_code(loose_path(5, 3).graph),
                                     canonical_code(construct_S(5, 2, 2, 3).graph)};
    std::set<CanonicalCode> got{two_long[0].code, two_long[1].code};
    CHECK(got == expected);

    auto three_short = enumerate_class({5, 3, 1, 3});
    REQUIRE(three_short.size() == 2);
    std::set<CanonicalCode> expected3{canonical_code(construct_D(5, 1, 2, 1, 3).graph),
                                      canonical_code(skeleton_of(construct_S(5, 2, 2, 3).graph))};
    std::set<CanonicalCode> got3{three_short[0].code, three_short[1].code};
    CHECK(got3 == expected3);

    CHECK(enumerate_class({5, 3, 1, 6}).empty());
}

TEST_CASE("random trees are deterministic and cover all classes") {
    TreeSkeleton a = random_tree(7, 123);
    TreeSkeleton b = random_tree(7, 123);
    CHECK(a.edges == b.edges);
    CHECK(random_tree(7, 124).edges != a.edges);

    TreeSkeleton two = random_tree(2, 5);
    CHECK(two.n == 2);
    CHECK(two.edges.size() == 1);

    std::set<CanonicalCode> seen;
    for (int seed = 0; seed < 10000; ++seed) seen.insert(canonical_code(random_tree(5, seed)));
    CHECK(seen.size() == 3);
}
