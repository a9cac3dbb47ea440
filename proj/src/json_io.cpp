#include "hypertree/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypertree {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

namespace {

std::string int_list(const std::vector<int>& xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

}  // namespace

std::string to_json(const Hypergraph& g) {
    std::vector<std::vector<int>> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    std::string s = "{\"n\":" + std::to_string(g.n) + ",\"edges\":[";
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) s += ",";
        s += int_list(sorted[i]);
    }
    return s + "]}";
}

Hypergraph hypergraph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed hypergraph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw std::invalid_argument("hypergraph JSON needs integer \"n\" and array \"edges\"");
    std::vector<std::vector<int>> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array()) throw std::invalid_argument("each edge must be an array of vertices");
        std::vector<int> e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw std::invalid_argument("vertices must be integers");
            e.push_back(jv.get<int>());
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edge_list(j["n"].get<int>(), std::move(edges));
}

Hypergraph hypergraph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return hypergraph_from_json(ss.str());
}

std::string to_json(const SpectralResult& r) {
    std::string s = "{\"rho\":" + fmt_double(r.rho) + ",\"perron\":[";
    for (size_t i = 0; i < r.perron.size(); ++i) {
        if (i) s += ",";
        s += fmt_double(r.perron[i]);
    }
    s += "],\"iterations\":" + std::to_string(r.iterations);
    s += ",\"residual\":" + fmt_double(r.residual) + "}";
    return s;
}

std::string to_json(const PendantPathReport& r) {
    std::string s = "{\"ell\":" + std::to_string(r.ell) +
                    ",\"count\":" + std::to_string(r.count()) + ",\"paths\":[";
    for (size_t i = 0; i < r.paths.size(); ++i) {
        if (i) s += ",";
        const PendantPath& p = r.paths[i];
        s += "{\"edges\":" + int_list(p.edges) + ",\"start\":" + std::to_string(p.start) +
             ",\"anchor\":" + std::to_string(p.anchor) + "}";
    }
    return s + "]}";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace hypertree
