#pragma once

#include <string>
#include <vector>

namespace hypertree {

// An undirected hypergraph on the vertex set {0, ..., n-1}. Every edge is a
// sorted list of at least two distinct vertices and the edge sequence holds
// no duplicate edge (as a set). Values are immutable after construction, so
// all queries are pure and safe to run concurrently.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;     // each sorted ascending
    std::vector<std::vector<int>> incident;  // vertex -> indices of edges containing it

    // Validates and normalizes the input (vertices inside each edge are
    // sorted; edge order is kept as given). Throws std::invalid_argument on
    // an edge of size < 2, a repeated vertex inside an edge, an index out of
    // range, or a duplicate edge.
    static Hypergraph from_edge_list(int n, std::vector<std::vector<int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Number of edges containing u.
    int degree(int u) const;

    // Union of the edges containing u, minus u itself. Sorted.
    std::vector<int> neighbors(int u) const;

    // True when u and v share an edge.
    bool adjacent(int u, int v) const;

    // Common edge size, or -1 when edges differ in size (or there are none).
    int uniform_size() const;
    bool is_uniform(int r) const { return edge_count() > 0 && uniform_size() == r; }

    // Vertices contained in no edge.
    std::vector<int> isolated_vertices() const;

    void check_vertex(int u) const;  // throws std::out_of_range
    void check_edge(int e) const;
};

// Partition of the vertex set into connected components: two vertices share
// a label iff a loose path joins them. Labels are 0..count-1, assigned in
// order of the smallest vertex in each component.
struct ComponentPartition {
    std::vector<int> labels;
    int count = 0;

    std::vector<int> component_sizes() const;
};

struct HypertreeValidity {
    bool connected = false;
    bool linear = false;   // every pair of edges meets in at most one vertex
    bool acyclic = false;  // sum of (|e|-1) equals n minus the component count
    bool is_hypertree = false;
};

ComponentPartition components(const Hypergraph& g);

// Components of g with edge e deleted (all vertices kept). Vertices of e
// that lie in no other edge become singletons.
ComponentPartition components_after_edge_removal(const Hypergraph& g, int e);

// Distances are lengths of shortest loose paths, computed by breadth-first
// search on the clique expansion (each edge behaves as a clique), so
// non-power r-uniform inputs are supported uniformly. Unreachable: -1.
std::vector<int> distances_from(const Hypergraph& g, int source);

// Throws std::domain_error when u and v are in different components.
int distance(const Hypergraph& g, int u, int v);

// A hypertree is connected with no loose cycles. The test used here:
// connected, linear, and sum over edges of (|e|-1) equal to n-1. Edges
// overlapping in two or more vertices fail the linearity condition and are
// excluded from the hypertree class.
HypertreeValidity validate_hypertree(const Hypergraph& g);

}  // namespace hypertree
