#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hypertree/constructions.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/structure.hpp"

using namespace hypertree;

TEST_CASE("distance matrix entries") {
    for (int r : {3, 4, 5}) {
        DistanceMatrix d = distance_matrix(loose_path(1, r).graph);
        for (int u = 0; u < r; ++u)
            for (int v = 0; v < r; ++v) CHECK(d.at(u, v) == (u == v ? 0 : 1));
    }

    LabeledHypergraph p = loose_path(2, 3);
    DistanceMatrix d = distance_matrix(p.graph);
    // row of v1 under the labeling (v1, w1, v2, w2, v3)
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(0, 2) == 1);
    CHECK(d.at(0, 3) == 2);
    CHECK(d.at(0, 4) == 2);

    DistanceMatrix dd = distance_matrix(construct_D(4, 1, 2, 1, 3).graph);
    CHECK(dd.n == 9);
    int max_entry = 0;
    for (int u = 0; u < dd.n; ++u)
        for (int v = 0; v < dd.n; ++v) max_entry = std::max(max_entry, dd.at(u, v));
    CHECK(max_entry == 3);

    Hypergraph split = Hypergraph::from_edge_list(5, {{0, 1}, {2, 3, 4}});
    CHECK_THROWS_AS(distance_matrix(split), std::domain_error);
}

TEST_CASE("spectral radius of a single edge is r-1") {
    for (int r : {3, 4, 5}) {
        SpectralResult res = spectral_radius(loose_path(1, r).graph, 1e-12);
        CHECK(std::fabs(res.rho - (r - 1)) <= 1e-10);
        for (double x : res.perron) CHECK(x > 0.0);
    }
}

TEST_CASE("spectral radius of the two-edge path matches the quotient root") {
    // the two-cell equitable partition {v1,w1,w2,v3} | {v2} gives
    // rho^2 - 5 rho - 4 = 0
    double expected = (5.0 + std::sqrt(41.0)) / 2.0;
    SpectralResult res = spectral_radius(loose_path(2, 3).graph, 1e-12);
    CHECK(std::fabs(res.rho - expected) <= 1e-9);

    // Perron entries agree on the orbit {v1, w1, w2, v3}
    CHECK(std::fabs(res.perron[0] - res.perron[1]) <= 1e-9);
    CHECK(std::fabs(res.perron[0] - res.perron[3]) <= 1e-9);
    CHECK(std::fabs(res.perron[0] - res.perron[4]) <= 1e-9);
    CHECK(res.perron[2] < res.perron[0]);
}

TEST_CASE("solver contract: residual, unit norm, positivity, determinism") {
    for (int m = 1; m <= 6; ++m)
        for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
            Hypergraph h = power_of_tree(t, 3).graph;
            DistanceMatrix d = distance_matrix(h);
            SpectralResult res = spectral_radius(d, 1e-11);
            REQUIRE(res.residual <= 1e-11 * res.rho);
            double norm = 0.0, worst = 0.0;
            for (int u = 0; u < d.n; ++u) {
                REQUIRE(res.perron[u] > 0.0);
                norm += res.perron[u] * res.perron[u];
                double row = 0.0;
                for (int v = 0; v < d.n; ++v) row += d.at(u, v) * res.perron[v];
                worst = std::max(worst, std::fabs(row - res.rho * res.perron[u]));
            }
            REQUIRE(std::fabs(std::sqrt(norm) - 1.0) <= 1e-12);
            REQUIRE(worst <= 1e-11 * res.rho);

            SpectralResult again = spectral_radius(d, 1e-11);
            REQUIRE(again.rho == res.rho);
            REQUIRE(again.perron == res.perron);
            REQUIRE(again.iterations == res.iterations);
        }
}

TEST_CASE("Rayleigh quotients of positive unit vectors stay below rho") {
    std::mt19937_64 rng(7);
    for (int m : {2, 4, 6}) {
        Hypergraph h = power_of_tree(random_tree(m + 1, rng()), 3).graph;
        DistanceMatrix d = distance_matrix(h);
        SpectralResult res = spectral_radius(d, 1e-12);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> y(d.n);
            double norm = 0.0;
            for (double& v : y) {
                v = 1e-6 + (rng() % 1000003) / 1000003.0;
                norm += v * v;
            }
            norm = std::sqrt(norm);
            double quad = 0.0;
            for (int u = 0; u < d.n; ++u)
                for (int v = 0; v < d.n; ++v) quad += (y[u] / norm) * d.at(u, v) * (y[v] / norm);
            REQUIRE(quad <= res.rho * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("status and its minimum") {
    LabeledHypergraph p = loose_path(2, 3);
    CHECK(status(p.graph, p.at("v2")) == 4);
    CHECK(status(p.graph, p.at("v1")) == 6);
    CHECK(min_status(p.graph) == 4);

    for (int r : {3, 4, 5}) {
        Hypergraph e = loose_path(1, r).graph;
        CHECK(min_status(e) == r - 1);
        CHECK(std::fabs(spectral_radius(e, 1e-12).rho - min_status(e)) <= 1e-9);
    }

    // rho dominates the minimum status everywhere
    for (int m = 1; m <= 6; ++m)
        for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
            Hypergraph h = power_of_tree(t, 3).graph;
            REQUIRE(spectral_radius(h, 1e-12).rho >= min_status(h) - 1e-9);
        }
}

TEST_CASE("sigma sums") {
    Hypergraph e3 = loose_path(1, 3).graph;
    SpectralResult res = spectral_radius(e3, 1e-12);
    CHECK(sigma(res.perron, {}) == 0.0);
    CHECK(std::fabs(sigma(res.perron, {0, 1, 2}) - std::sqrt(3.0)) <= 1e-9);
    CHECK_THROWS_AS(sigma(res.perron, {5}), std::out_of_range);

    LabeledHypergraph s = construct_S(5, 2, 2, 3);
    SpectralResult sres = spectral_radius(s.graph, 1e-12);
    BranchDecomposition dec = branches_at(s.graph, s.at("c"));
    double total = 0.0;
    for (double x : sres.perron) total += x;
    double across = 0.0;
    for (const auto& b : dec.branches) across += sigma(sres.perron, b.vertices);
    // anchors are shared, so the branch sums overcount c twice
    CHECK(std::fabs(across - total - 2 * sres.perron[s.at("c")]) <= 1e-9);
}

TEST_CASE("the loose path maximizes rho over all power hypertrees per edge count") {
    for (int m = 2; m <= 8; ++m) {
        CanonicalCode path = canonical_code(loose_path(m, 3).graph);
        double best = -1.0, second = -1.0;
        CanonicalCode best_code;
        for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
            double rho = spectral_radius(power_of_tree(t, 3).graph, 1e-12).rho;
            if (rho > best) {
                second = best;
                best = rho;
                best_code = canonical_code(t);
            } else {
                second = std::max(second, rho);
            }
        }
        REQUIRE(best_code == path);
        if (second > 0) REQUIRE(best - second > 1e-9 * best);
    }
}

TEST_CASE("automorphism orbits carry equal Perron entries") {
    // mirror-symmetric balanced construction
    LabeledHypergraph d = construct_D(8, 2, 2, 1, 3);
    int t = 8 - 1 * 4 + 1;
    REQUIRE(t == 5);
    SpectralResult res = spectral_radius(d.graph, 1e-12);
    auto x = [&](const std::string& role) { return res.perron[d.at(role)]; };
    CHECK(std::fabs(x("v1") - x("v5")) <= 1e-9);
    CHECK(std::fabs(x("v2") - x("v4")) <= 1e-9);
    CHECK(std::fabs(x("w1") - x("w4")) <= 1e-9);
    CHECK(std::fabs(x("w2") - x("w3")) <= 1e-9);
}
