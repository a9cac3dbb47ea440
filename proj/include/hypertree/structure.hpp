#pragma once

#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

// One pendant path (v1, e1, v2, ..., e_ell, v_{ell+1}): the start has degree
// one, interior junctions degree two, the anchor degree >= 2, and every
// off-junction vertex of a path edge has degree one. A path is identified by
// its edge sequence; the reported start is the lowest-index eligible vertex
// of the first edge.
struct PendantPath {
    std::vector<int> edges;      // e1..e_ell as edge indices
    std::vector<int> junctions;  // v1..v_{ell+1}
    int start = -1;              // v1
    int anchor = -1;             // v_{ell+1}
};

struct PendantPathReport {
    int ell = 0;
    std::vector<PendantPath> paths;  // sorted by edge sequence
    int count() const { return static_cast<int>(paths.size()); }
};

struct PendantElements {
    std::vector<int> pendant_vertices;  // degree-one vertices
    std::vector<int> pendant_edges;     // edges whose vertices all have degree
                                        // one except a single anchor of degree >= 2
};

// A branch at u: the maximal subhypertree through one edge at u in which u
// is pendant. There are degree(u) of them; they pairwise meet exactly in u.
struct Branch {
    std::vector<int> vertices;      // includes u; sorted
    std::vector<int> edge_indices;  // sorted
};

struct BranchDecomposition {
    int anchor = -1;
    std::vector<Branch> branches;  // one per edge at anchor, in incident-edge order
};

PendantElements pendant_elements(const Hypergraph& g);

// All pendant paths of length ell. Requires g to be a hypertree (throws
// std::invalid_argument otherwise).
PendantPathReport count_pendant_paths(const Hypergraph& g, int ell);

BranchDecomposition branches_at(const Hypergraph& t, int u);

// True iff g is an r-uniform hypertree in which every edge has at most two
// vertices of degree >= 2 (equivalently at least r-2 degree-one vertices).
bool is_power_hypertree(const Hypergraph& g, int r);

}  // namespace hypertree
