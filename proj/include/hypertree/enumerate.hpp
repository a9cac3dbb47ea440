#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypertree/constructions.hpp"
#include "hypertree/hypergraph.hpp"

namespace hypertree {

// Relabeling-invariant identifier of a tree: the parenthesis code of the
// tree rooted at its center, child codes sorted, taking the smaller of the
// two rootings when the tree is bicentral. Equal codes iff isomorphic.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const TreeSkeleton& t);

// Isomorphism of power hypertrees reduces to isomorphism of their
// skeletons, so this is also the canonical code used for them.
inline CanonicalCode canonical_code(const Hypergraph& power_hypertree) {
    return canonical_code(skeleton_of(power_hypertree));
}

// Every free tree on n vertices, one representative per isomorphism class,
// sorted by canonical code. Generated from the rooted-tree level-sequence
// successor enumeration with canonical dedup. Throws when n < 2 or n > cap.
std::vector<TreeSkeleton> enumerate_free_trees(int n, int cap = 13);

// A class of r-th power hypertrees: m edges and exactly k pendant paths of
// length ell.
struct ClassDescriptor {
    int m = 0;
    int r = 0;
    int ell = 0;
    int k = 0;
};

struct ClassMember {
    TreeSkeleton tree;
    Hypergraph graph;  // the r-th power of tree
    CanonicalCode code;
};

// All members of the class, sorted by canonical code. The pendant-path
// count is evaluated on the power hypergraph itself.
std::vector<ClassMember> enumerate_class(const ClassDescriptor& c, int cap = 13);

// Uniformly random labeled tree (sequence decoding), deterministic per
// (n, seed) on every platform.
TreeSkeleton random_tree(int n, std::uint64_t seed);

}  // namespace hypertree
