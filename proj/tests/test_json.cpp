#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypertree/constructions.hpp"
#include "hypertree/json_io.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/structure.hpp"

using namespace hypertree;

TEST_CASE("canonical hypergraph JSON") {
    Hypergraph g = Hypergraph::from_edge_list(5, {{2, 4, 3}, {0, 2, 1}});
    std::string s = to_json(g);
    CHECK(s == "{\"n\":5,\"edges\":[[0,1,2],[2,3,4]]}");

    Hypergraph back = hypergraph_from_json(s);
    CHECK(back.n == g.n);
    CHECK(to_json(back) == s);

    CHECK_THROWS_AS(hypergraph_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json("{\"n\":2,\"edges\":[[0,0]]}"), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json("{\"n\":\"x\",\"edges\":[]}"), std::invalid_argument);
}

TEST_CASE("round trip through the canonical form preserves spectra exactly") {
    for (int m : {2, 4}) {
        Hypergraph h = construct_D(m + 2, 1, 2, 1, 3).graph;
        Hypergraph back = hypergraph_from_json(to_json(h));
        SpectralResult a = spectral_radius(h, 1e-11);
        SpectralResult b = spectral_radius(back, 1e-11);
        REQUIRE(a.rho == b.rho);
        REQUIRE(a.perron == b.perron);
    }
}

TEST_CASE("result serialization carries 15 significant digits") {
    SpectralResult res = spectral_radius(loose_path(2, 3).graph, 1e-12);
    std::string s = to_json(res);
    CHECK(s.find("\"rho\":5.70156211871642") != std::string::npos);
    CHECK(s.find("\"iterations\":") != std::string::npos);
    CHECK(s.find("\"residual\":") != std::string::npos);

    std::string twice = to_json(spectral_radius(loose_path(2, 3).graph, 1e-12));
    CHECK(s == twice);
}

TEST_CASE("pendant report serialization") {
    PendantPathReport rep = count_pendant_paths(loose_path(3, 3).graph, 1);
    std::string s = to_json(rep);
    CHECK(s.find("\"ell\":1") != std::string::npos);
    CHECK(s.find("\"count\":2") != std::string::npos);
    CHECK(s.find("\"edges\":[0]") != std::string::npos);
    CHECK(s.find("\"edges\":[2]") != std::string::npos);
}
