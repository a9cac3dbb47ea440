#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

// An ordinary tree used as the base of a power hypertree.
struct TreeSkeleton {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // exactly n-1, validated

    // Throws std::invalid_argument unless the edges form a tree on 0..n-1.
    static TreeSkeleton from_edges(int n, std::vector<std::pair<int, int>> edges);

    std::vector<std::vector<int>> adjacency() const;
    int degree(int u) const;
};

// Maps role names to vertex indices so harness code can address the exact
// vertices a construction talks about. Conventions (i is 1-based):
//   "v{i}"        i-th junction of a loose path / central path
//   "w{i}"        first filler of the i-th path edge ("w{i}.{j}" for more)
//   "A{j}.u{i}"   i-th junction (tip = u1) of the j-th attached path at v1
//   "A{j}.w{i}"   first filler of that path's i-th edge  (B{j}.* at v_t)
//   "c"           the common vertex of a star-like construction
//   "P{j}.u{i}"   path vertices at the common vertex ("P{j}.w{i}" fillers)
//   "E{j}.x{s}"   s-th non-center vertex of the j-th pendant edge
//   "t{i}"        original tree vertex i of a power construction
//   "e{j}.w{s}"   s-th filler added to tree edge j by a power construction
using ConstructionLabeling = std::map<std::string, int>;

struct LabeledHypergraph {
    Hypergraph graph;
    ConstructionLabeling labels;

    int at(const std::string& role) const;  // throws on unknown role
};

// The r-uniform loose path with m edges on m(r-1)+1 vertices. Vertices are
// numbered along the path: v1, the fillers of edge 1, v2, the fillers of
// edge 2, ..., v_{m+1}.
LabeledHypergraph loose_path(int m, int r);

// The r-th power of a tree: every tree edge gains r-2 fresh degree-one
// vertices. Tree vertices keep their indices; fillers are appended in tree
// edge order.
LabeledHypergraph power_of_tree(const TreeSkeleton& t, int r);

// Inverse of power_of_tree up to isomorphism: the unique tree whose r-th
// power is h. Skeleton vertices are the vertices of degree >= 2 plus, for
// each edge with fewer than two of those, its lowest-index degree-one
// vertex; they are relabeled 0..n_s-1 in increasing original order. Throws
// std::invalid_argument when h is not a power hypertree.
TreeSkeleton skeleton_of(const Hypergraph& h);

// Star-like hypertree: one pendant r-uniform path per entry of leg_lengths,
// all attached at a common vertex (index 0, label "c").
LabeledHypergraph spider_paths(const std::vector<int>& leg_lengths, int r);

// The hypertree with a central r-uniform path of m - ell*(a+b) edges and a
// (resp. b) pendant paths of length ell attached at its first (resp. last)
// junction. Requires 1 <= a <= b, ell >= 1, ell*(a+b) <= m-1, r >= 3.
LabeledHypergraph construct_D(int m, int a, int b, int ell, int r);

// The hypertree with k pendant paths of length ell and m - k*ell pendant
// edges at a common vertex. Requires r >= 3 and either k == 1 with
// 2 <= ell <= m-2, or k >= 2 with ell >= 2 and k*ell <= m-1.
LabeledHypergraph construct_S(int m, int k, int ell, int r);

// Attaches two pendant r-uniform paths of lengths p and q at v (q = 0 means
// a single path, p = q = 0 returns g unchanged). New vertices are appended.
Hypergraph attach_pendant_paths(const Hypergraph& g, int v, int p, int q, int r);

// Rewires the chosen edges from v to u: e' = (e \ {v}) + {u}. Each chosen
// edge must contain v and not u, and no e' may already be an edge of g.
// Violations are collected per edge and reported in one exception.
Hypergraph move_edges(const Hypergraph& g, int from_v, int to_u,
                      const std::vector<int>& edge_indices);

}  // namespace hypertree
