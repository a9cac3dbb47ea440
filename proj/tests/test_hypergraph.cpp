#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hypertree/constructions.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/hypergraph.hpp"

using namespace hypertree;

TEST_CASE("edge list construction and validation") {
    Hypergraph g = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.is_uniform(3));

    Hypergraph p = Hypergraph::from_edge_list(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(p.edge_count() == 2);
    CHECK(p.degree(2) == 2);

    CHECK_THROWS_AS(Hypergraph::from_edge_list(3, {{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_edge_list(3, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_edge_list(3, {{1, 1, 2}}), std::invalid_argument);

    // vertex sets are normalized, duplicates caught as sets
    CHECK_THROWS_AS(Hypergraph::from_edge_list(3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);

    Hypergraph iso = Hypergraph::from_edge_list(4, {{0, 1, 2}});
    CHECK(iso.isolated_vertices() == std::vector<int>{3});
}

TEST_CASE("degree and neighbors") {
    Hypergraph g = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});

    LabeledHypergraph p = loose_path(2, 3);
    int shared = p.at("v2");
    CHECK(p.graph.degree(shared) == 2);
    CHECK(p.graph.neighbors(shared).size() == 4);

    LabeledHypergraph s = construct_S(5, 2, 2, 3);
    CHECK(s.graph.degree(s.at("c")) == 3);

    CHECK_THROWS_AS(g.degree(5), std::out_of_range);
}

TEST_CASE("distances on the clique expansion") {
    LabeledHypergraph p = loose_path(2, 3);
    const Hypergraph& g = p.graph;
    CHECK(distance(g, p.at("v1"), p.at("v3")) == 2);
    CHECK(distance(g, p.at("w1"), p.at("w2")) == 2);
    CHECK(distance(g, p.at("v1"), p.at("w1")) == 1);
    CHECK(distance(g, p.at("v1"), p.at("v1")) == 0);

    Hypergraph split = Hypergraph::from_edge_list(5, {{0, 1}, {2, 3, 4}});
    CHECK_THROWS_AS(distance(split, 0, 3), std::domain_error);
    CHECK(distances_from(split, 0)[3] == -1);
}

TEST_CASE("hypertree validation") {
    for (int m = 1; m <= 5; ++m) CHECK(validate_hypertree(loose_path(m, 3).graph).is_hypertree);

    // two 3-edges sharing two vertices: linearity fails
    Hypergraph overlap = Hypergraph::from_edge_list(4, {{0, 1, 2}, {1, 2, 3}});
    HypertreeValidity v = validate_hypertree(overlap);
    CHECK(v.connected);
    CHECK_FALSE(v.linear);
    CHECK_FALSE(v.acyclic);
    CHECK_FALSE(v.is_hypertree);

    // 3-uniform loose cycle of length 3 on 6 vertices
    Hypergraph cyc = Hypergraph::from_edge_list(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    v = validate_hypertree(cyc);
    CHECK(v.connected);
    CHECK(v.linear);
    CHECK_FALSE(v.acyclic);
    CHECK_FALSE(v.is_hypertree);

    // disconnected forest
    Hypergraph forest = Hypergraph::from_edge_list(6, {{0, 1, 2}, {3, 4, 5}});
    v = validate_hypertree(forest);
    CHECK_FALSE(v.connected);
    CHECK(v.acyclic);
    CHECK_FALSE(v.is_hypertree);
}

TEST_CASE("components after edge removal") {
    Hypergraph single = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    ComponentPartition part = components_after_edge_removal(single, 0);
    CHECK(part.count == 3);

    LabeledHypergraph p = loose_path(2, 3);
    part = components_after_edge_removal(p.graph, 1);
    auto sizes = part.component_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(part.count == 3);
    CHECK(sizes == std::vector<int>{1, 1, 3});
    CHECK(part.labels[p.at("v1")] == part.labels[p.at("v2")]);
    CHECK(part.labels[p.at("v1")] != part.labels[p.at("v3")]);

    // removing the central edge of D_{3,1}(4,1,2) isolates its filler and
    // splits the two pendant groups
    LabeledHypergraph d = construct_D(4, 1, 2, 1, 3);
    int central = -1;
    for (int e = 0; e < d.graph.edge_count(); ++e) {
        const auto& edge = d.graph.edges[e];
        if (std::binary_search(edge.begin(), edge.end(), d.at("v1")) &&
            std::binary_search(edge.begin(), edge.end(), d.at("v2")))
            central = e;
    }
    REQUIRE(central >= 0);
    part = components_after_edge_removal(d.graph, central);
    sizes = part.component_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(part.count == 3);
    CHECK(sizes == std::vector<int>{1, 3, 5});

    CHECK_THROWS_AS(components_after_edge_removal(single, 2), std::out_of_range);
}

TEST_CASE("distance metric properties on enumerated power hypertrees") {
    for (int m = 1; m <= 8; ++m) {
        for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
            Hypergraph h = power_of_tree(t, 3).graph;
            std::vector<std::vector<int>> d(h.n);
            for (int u = 0; u < h.n; ++u) d[u] = distances_from(h, u);
            for (int u = 0; u < h.n; ++u) {
                REQUIRE(d[u][u] == 0);
                for (int v = u + 1; v < h.n; ++v) {
                    REQUIRE(d[u][v] == d[v][u]);
                    REQUIRE(d[u][v] >= 1);
                }
            }
            for (int u = 0; u < h.n; ++u)
                for (int v = 0; v < h.n; ++v)
                    for (int w = 0; w < h.n; ++w) REQUIRE(d[u][v] <= d[u][w] + d[w][v]);
        }
    }
}

TEST_CASE("removing an edge from an r-uniform hypertree leaves r components") {
    for (int m = 2; m <= 5; ++m)
        for (int r : {3, 4})
            for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
                Hypergraph h = power_of_tree(t, r).graph;
                for (int e = 0; e < h.edge_count(); ++e) {
                    ComponentPartition part = components_after_edge_removal(h, e);
                    REQUIRE(part.count == r);
                    REQUIRE(part.count >= 2);
                }
            }
}
