#include "hypertree/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace hypertree {

Hypergraph Hypergraph::from_edge_list(int n, std::vector<std::vector<int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
        if (e.size() < 2)
            throw std::invalid_argument("edge with fewer than 2 vertices");
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw std::invalid_argument("vertex index out of range: " + std::to_string(e[i]));
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("repeated vertex inside an edge");
        }
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge");
    }
    Hypergraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.incident.assign(n, {});
    for (int ei = 0; ei < g.edge_count(); ++ei)
        for (int v : g.edges[ei]) g.incident[v].push_back(ei);
    return g;
}

void Hypergraph::check_vertex(int u) const {
    if (u < 0 || u >= n) throw std::out_of_range("vertex out of range: " + std::to_string(u));
}

void Hypergraph::check_edge(int e) const {
    if (e < 0 || e >= edge_count())
        throw std::out_of_range("edge index out of range: " + std::to_string(e));
}

int Hypergraph::degree(int u) const {
    check_vertex(u);
    return static_cast<int>(incident[u].size());
}

std::vector<int> Hypergraph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> nb;
    for (int ei : incident[u])
        for (int v : edges[ei])
            if (v != u) nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
}

bool Hypergraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    for (int ei : incident[u])
        if (std::binary_search(edges[ei].begin(), edges[ei].end(), v)) return true;
    return false;
}

int Hypergraph::uniform_size() const {
    if (edges.empty()) return -1;
    size_t r = edges.front().size();
    for (const auto& e : edges)
        if (e.size() != r) return -1;
    return static_cast<int>(r);
}

std::vector<int> Hypergraph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (incident[v].empty()) out.push_back(v);
    return out;
}

std::vector<int> ComponentPartition::component_sizes() const {
    std::vector<int> sizes(count, 0);
    for (int c : labels) ++sizes[c];
    return sizes;
}

namespace {

// Label components by BFS; edge "skip" (if >= 0) is treated as deleted.
ComponentPartition components_impl(const Hypergraph& g, int skip) {
    ComponentPartition part;
    part.labels.assign(g.n, -1);
    std::vector<char> edge_done(g.edges.size(), 0);
    std::queue<int> q;
    for (int s = 0; s < g.n; ++s) {
        if (part.labels[s] != -1) continue;
        int label = part.count++;
        part.labels[s] = label;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ei : g.incident[v]) {
                if (ei == skip || edge_done[ei]) continue;
                edge_done[ei] = 1;
                for (int w : g.edges[ei]) {
                    if (part.labels[w] == -1) {
                        part.labels[w] = label;
                        q.push(w);
                    }
                }
            }
        }
    }
    return part;
}

}  // namespace

ComponentPartition components(const Hypergraph& g) { return components_impl(g, -1); }

ComponentPartition components_after_edge_removal(const Hypergraph& g, int e) {
    g.check_edge(e);
    return components_impl(g, e);
}

std::vector<int> distances_from(const Hypergraph& g, int source) {
    g.check_vertex(source);
    std::vector<int> dist(g.n, -1);
    std::vector<char> edge_done(g.edges.size(), 0);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : g.incident[v]) {
            if (edge_done[ei]) continue;
            edge_done[ei] = 1;
            for (int w : g.edges[ei]) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

int distance(const Hypergraph& g, int u, int v) {
    g.check_vertex(v);
    int d = distances_from(g, u)[v];
    if (d == -1) throw std::domain_error("vertices lie in different components");
    return d;
}

HypertreeValidity validate_hypertree(const Hypergraph& g) {
    HypertreeValidity v;
    ComponentPartition part = components(g);
    v.connected = (part.count == 1);

    v.linear = true;
    for (size_t i = 0; i < g.edges.size() && v.linear; ++i) {
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const auto& a = g.edges[i];
            const auto& b = g.edges[j];
            int common = 0;
            size_t p = 0, q = 0;
            while (p < a.size() && q < b.size()) {
                if (a[p] == b[q]) { ++common; ++p; ++q; }
                else if (a[p] < b[q]) ++p;
                else ++q;
            }
            if (common > 1) { v.linear = false; break; }
        }
    }

    long long slack = 0;  // sum of (|e| - 1)
    for (const auto& e : g.edges) slack += static_cast<long long>(e.size()) - 1;
    v.acyclic = (slack == g.n - part.count);
    v.is_hypertree = v.connected && v.linear && (slack == g.n - 1);
    return v;
}

}  // namespace hypertree
