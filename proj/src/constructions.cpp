#include "hypertree/constructions.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace hypertree {

TreeSkeleton TreeSkeleton::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("a tree on n vertices has exactly n-1 edges");
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n) throw std::invalid_argument("tree edge endpoint out of range");
        if (a == b) throw std::invalid_argument("tree edge is a self-loop");
        if (!seen.insert({a, b}).second) throw std::invalid_argument("duplicate tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // n-1 distinct edges + connectivity = tree
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("tree edges do not connect all vertices");
    TreeSkeleton t;
    t.n = n;
    t.edges = std::move(edges);
    return t;
}

std::vector<std::vector<int>> TreeSkeleton::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

int TreeSkeleton::degree(int u) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == u) + (b == u);
    return d;
}

int LabeledHypergraph::at(const std::string& role) const {
    auto it = labels.find(role);
    if (it == labels.end()) throw std::out_of_range("unknown construction role: " + role);
    return it->second;
}

namespace {

struct Builder {
    int n = 0;
    std::vector<std::vector<int>> edges;
    ConstructionLabeling labels;

    int fresh() { return n++; }

    void label(const std::string& role, int v) { labels[role] = v; }

    // One pendant path of the given length at anchor, built anchor-outward:
    // the edge nearest the anchor comes first, fillers before the outer
    // junction. Junctions are named {prefix}u{len}..{prefix}u1 (u1 = tip),
    // fillers {prefix}w{i} (first) and {prefix}w{i}.{j}.
    void attach_path(int anchor, int len, int r, const std::string& prefix) {
        int cur = anchor;
        for (int s = len; s >= 1; --s) {
            std::vector<int> e{cur};
            for (int j = 1; j <= r - 2; ++j) {
                int f = fresh();
                e.push_back(f);
                label(prefix + "w" + std::to_string(s) + (j == 1 ? "" : "." + std::to_string(j)), f);
            }
            int u = fresh();
            e.push_back(u);
            label(prefix + "u" + std::to_string(s), u);
            edges.push_back(std::move(e));
            cur = u;
        }
    }

    LabeledHypergraph finish() {
        LabeledHypergraph out;
        out.graph = Hypergraph::from_edge_list(n, std::move(edges));
        out.labels = std::move(labels);
        return out;
    }
};

}  // namespace

LabeledHypergraph loose_path(int m, int r) {
    if (m < 1) throw std::invalid_argument("loose path needs at least one edge");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    Builder b;
    int prev = b.fresh();
    b.label("v1", prev);
    for (int i = 1; i <= m; ++i) {
        std::vector<int> e{prev};
        for (int j = 1; j <= r - 2; ++j) {
            int f = b.fresh();
            e.push_back(f);
            b.label("w" + std::to_string(i) + (j == 1 ? "" : "." + std::to_string(j)), f);
        }
        int v = b.fresh();
        e.push_back(v);
        b.label("v" + std::to_string(i + 1), v);
        b.edges.push_back(std::move(e));
        prev = v;
    }
    return b.finish();
}

LabeledHypergraph power_of_tree(const TreeSkeleton& t, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    Builder b;
    b.n = t.n;
    for (int i = 0; i < t.n; ++i) b.label("t" + std::to_string(i), i);
    int j = 1;
    for (auto [u, v] : t.edges) {
        std::vector<int> e{u, v};
        for (int s = 1; s <= r - 2; ++s) {
            int f = b.fresh();
            e.push_back(f);
            b.label("e" + std::to_string(j) + ".w" + std::to_string(s), f);
        }
        b.edges.push_back(std::move(e));
        ++j;
    }
    return b.finish();
}

TreeSkeleton skeleton_of(const Hypergraph& h) {
    int r = h.uniform_size();
    if (r < 2) throw std::invalid_argument("not a power hypertree: not uniform");
    if (!validate_hypertree(h).is_hypertree)
        throw std::invalid_argument("not a power hypertree: not a hypertree");

    std::vector<char> keep(h.n, 0);
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) >= 2) keep[v] = 1;

    std::vector<std::pair<int, int>> kept_pairs;  // per edge, the two skeleton vertices
    for (const auto& e : h.edges) {
        std::vector<int> junctions;
        for (int v : e)
            if (h.degree(v) >= 2) junctions.push_back(v);
        if (static_cast<int>(junctions.size()) > 2)
            throw std::invalid_argument("not a power hypertree: edge with 3+ vertices of degree >= 2");
        while (static_cast<int>(junctions.size()) < 2) {
            // retain the lowest-index degree-one vertex not already chosen
            int pick = -1;
            for (int v : e)
                if (h.degree(v) == 1 && !keep[v]) {
                    pick = v;
                    break;
                }
            if (pick == -1)
                throw std::invalid_argument("not a power hypertree: edge too small to split");
            keep[pick] = 1;
            junctions.push_back(pick);
        }
        std::sort(junctions.begin(), junctions.end());
        kept_pairs.emplace_back(junctions[0], junctions[1]);
    }

    std::vector<int> relabel(h.n, -1);
    int ns = 0;
    for (int v = 0; v < h.n; ++v)
        if (keep[v]) relabel[v] = ns++;
    std::vector<std::pair<int, int>> tedges;
    tedges.reserve(kept_pairs.size());
    for (auto [a, bb] : kept_pairs) tedges.emplace_back(relabel[a], relabel[bb]);
    return TreeSkeleton::from_edges(ns, std::move(tedges));
}

LabeledHypergraph spider_paths(const std::vector<int>& leg_lengths, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    Builder b;
    int c = b.fresh();
    b.label("c", c);
    int j = 1;
    for (int len : leg_lengths) {
        if (len < 1) throw std::invalid_argument("leg length must be positive");
        b.attach_path(c, len, r, "P" + std::to_string(j) + ".");
        ++j;
    }
    return b.finish();
}

LabeledHypergraph construct_D(int m, int a, int b, int ell, int r) {
    if (r < 3) throw std::invalid_argument("D construction needs r >= 3");
    if (ell < 1 || a < 1 || a > b) throw std::invalid_argument("D construction needs 1 <= a <= b, ell >= 1");
    if (static_cast<long long>(ell) * (a + b) > m - 1)
        throw std::invalid_argument("D construction needs ell*(a+b) <= m-1");
    int t = m - ell * (a + b) + 1;  // central path has t junctions, t-1 edges
    Builder bd;
    int prev = bd.fresh();
    bd.label("v1", prev);
    for (int i = 1; i <= t - 1; ++i) {
        std::vector<int> e{prev};
        for (int j = 1; j <= r - 2; ++j) {
            int f = bd.fresh();
            e.push_back(f);
            bd.label("w" + std::to_string(i) + (j == 1 ? "" : "." + std::to_string(j)), f);
        }
        int v = bd.fresh();
        e.push_back(v);
        bd.label("v" + std::to_string(i + 1), v);
        bd.edges.push_back(std::move(e));
        prev = v;
    }
    int v1 = bd.labels.at("v1");
    int vt = bd.labels.at("v" + std::to_string(t));
    for (int j = 1; j <= a; ++j) bd.attach_path(v1, ell, r, "A" + std::to_string(j) + ".");
    for (int j = 1; j <= b; ++j) bd.attach_path(vt, ell, r, "B" + std::to_string(j) + ".");
    return bd.finish();
}

LabeledHypergraph construct_S(int m, int k, int ell, int r) {
    if (r < 3) throw std::invalid_argument("S construction needs r >= 3");
    bool ok = (k == 1 && 2 <= ell && ell <= m - 2) ||
              (k >= 2 && ell >= 2 && static_cast<long long>(k) * ell <= m - 1);
    if (!ok) throw std::invalid_argument("S construction parameter constraints violated");
    Builder b;
    int c = b.fresh();
    b.label("c", c);
    for (int j = 1; j <= k; ++j) b.attach_path(c, ell, r, "P" + std::to_string(j) + ".");
    for (int j = 1; j <= m - k * ell; ++j) {
        std::vector<int> e{c};
        for (int s = 1; s <= r - 1; ++s) {
            int x = b.fresh();
            e.push_back(x);
            b.label("E" + std::to_string(j) + ".x" + std::to_string(s), x);
        }
        b.edges.push_back(std::move(e));
    }
    return b.finish();
}

Hypergraph attach_pendant_paths(const Hypergraph& g, int v, int p, int q, int r) {
    g.check_vertex(v);
    if (p < 0 || q < 0) throw std::invalid_argument("path lengths must be nonnegative");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    Builder b;
    b.n = g.n;
    b.edges = g.edges;
    if (p > 0) b.attach_path(v, p, r, "P1.");
    if (q > 0) b.attach_path(v, q, r, "P2.");
    return b.finish().graph;
}

Hypergraph move_edges(const Hypergraph& g, int from_v, int to_u,
                      const std::vector<int>& edge_indices) {
    g.check_vertex(from_v);
    g.check_vertex(to_u);
    std::set<std::vector<int>> existing(g.edges.begin(), g.edges.end());
    std::vector<std::vector<int>> edges = g.edges;
    std::string errors;
    std::set<int> chosen;
    for (int ei : edge_indices) {
        g.check_edge(ei);
        if (!chosen.insert(ei).second) {
            errors += "edge " + std::to_string(ei) + ": listed twice; ";
            continue;
        }
        const auto& e = g.edges[ei];
        if (!std::binary_search(e.begin(), e.end(), from_v)) {
            errors += "edge " + std::to_string(ei) + ": does not contain the source vertex; ";
            continue;
        }
        if (std::binary_search(e.begin(), e.end(), to_u)) {
            errors += "edge " + std::to_string(ei) + ": already contains the target vertex; ";
            continue;
        }
        std::vector<int> moved;
        moved.reserve(e.size());
        for (int w : e)
            if (w != from_v) moved.push_back(w);
        moved.push_back(to_u);
        std::sort(moved.begin(), moved.end());
        if (existing.count(moved)) {
            errors += "edge " + std::to_string(ei) + ": move creates a duplicate edge; ";
            continue;
        }
        edges[ei] = std::move(moved);
    }
    if (!errors.empty()) throw std::invalid_argument("move_edges: " + errors);
    return Hypergraph::from_edge_list(g.n, std::move(edges));
}

}  // namespace hypertree
