#include "hypertree/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "hypertree/structure.hpp"

namespace hypertree {

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : adj[v])
        if (w != parent) child_codes.push_back(rooted_code(adj, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

}  // namespace

CanonicalCode canonical_code(const TreeSkeleton& t) {
    auto adj = t.adjacency();
    auto centers = tree_centers(adj);
    CanonicalCode code = rooted_code(adj, centers[0], -1);
    if (centers.size() == 2) code = std::min(code, rooted_code(adj, centers[1], -1));
    return code;
}

std::vector<TreeSkeleton> enumerate_free_trees(int n, int cap) {
    if (n < 2 || n > cap) throw std::invalid_argument("enumerate_free_trees: n outside 2..cap");

    std::map<CanonicalCode, TreeSkeleton> classes;

    // Level sequences of rooted trees in decreasing lexicographic order,
    // starting from the path. Each rooted tree appears exactly once; the
    // canonical code folds the rootings of one free tree together.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    while (true) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            for (int j = i - 1; j >= 0; --j) {
                if (level[j] == level[i] - 1) {
                    edges.emplace_back(j, i);
                    break;
                }
            }
        }
        TreeSkeleton t = TreeSkeleton::from_edges(n, std::move(edges));
        classes.emplace(canonical_code(t), std::move(t));

        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }

    std::vector<TreeSkeleton> out;
    out.reserve(classes.size());
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

std::vector<ClassMember> enumerate_class(const ClassDescriptor& c, int cap) {
    if (c.m < 1 || c.r < 3 || c.ell < 1 || c.k < 0)
        throw std::invalid_argument("enumerate_class: invalid descriptor");
    std::vector<ClassMember> out;
    for (TreeSkeleton& t : enumerate_free_trees(c.m + 1, cap)) {
        Hypergraph h = power_of_tree(t, c.r).graph;
        if (count_pendant_paths(h, c.ell).count() != c.k) continue;
        ClassMember member;
        member.code = canonical_code(t);
        member.tree = std::move(t);
        member.graph = std::move(h);
        out.push_back(std::move(member));
    }
    // enumerate_free_trees is code-sorted already; keep that order
    return out;
}

TreeSkeleton random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_tree: n must be at least 2");
    if (n == 2) return TreeSkeleton::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    // linear Pruefer decode
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return TreeSkeleton::from_edges(n, std::move(edges));
}

}  // namespace hypertree
