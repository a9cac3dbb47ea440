#include "hypertree/structure.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hypertree {

PendantElements pendant_elements(const Hypergraph& g) {
    PendantElements out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out.pendant_vertices.push_back(v);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        int anchors = 0;
        for (int v : g.edges[ei])
            if (g.degree(v) >= 2) ++anchors;
        if (anchors == 1) out.pendant_edges.push_back(ei);
    }
    return out;
}

PendantPathReport count_pendant_paths(const Hypergraph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("pendant path length must be positive");
    if (!validate_hypertree(g).is_hypertree)
        throw std::invalid_argument("pendant paths are only defined on hypertrees here");

    PendantPathReport report;
    report.ell = ell;

    // Each pendant path starts at a pendant edge (its first edge has exactly
    // one vertex of degree >= 2). Walk outward from every such tip edge while
    // junction degrees stay two; at most one path of each length per tip.
    for (int tip = 0; tip < g.edge_count(); ++tip) {
        std::vector<int> junctions_in_tip;
        for (int v : g.edges[tip])
            if (g.degree(v) >= 2) junctions_in_tip.push_back(v);
        if (junctions_in_tip.size() != 1) continue;

        int start = -1;  // lowest-index degree-one vertex of the tip edge
        for (int v : g.edges[tip])
            if (g.degree(v) == 1) {
                start = v;
                break;
            }

        std::vector<int> edge_seq{tip};
        std::vector<int> junction_seq{start, junctions_in_tip[0]};
        int end = junctions_in_tip[0];
        int prev_edge = tip;
        while (static_cast<int>(edge_seq.size()) < ell && g.degree(end) == 2) {
            int next_edge = -1;
            for (int ei : g.incident[end])
                if (ei != prev_edge) next_edge = ei;
            // the next edge must contain exactly one further junction
            int next_end = -1;
            bool ok = true;
            for (int v : g.edges[next_edge]) {
                if (v == end) continue;
                if (g.degree(v) >= 2) {
                    if (next_end != -1) ok = false;
                    next_end = v;
                }
            }
            if (!ok || next_end == -1) break;
            edge_seq.push_back(next_edge);
            junction_seq.push_back(next_end);
            prev_edge = next_edge;
            end = next_end;
        }
        if (static_cast<int>(edge_seq.size()) == ell && g.degree(end) >= 2) {
            PendantPath p;
            p.edges = std::move(edge_seq);
            p.junctions = std::move(junction_seq);
            p.start = start;
            p.anchor = end;
            report.paths.push_back(std::move(p));
        }
    }
    std::sort(report.paths.begin(), report.paths.end(),
              [](const PendantPath& a, const PendantPath& b) { return a.edges < b.edges; });
    return report;
}

BranchDecomposition branches_at(const Hypergraph& t, int u) {
    t.check_vertex(u);
    if (!validate_hypertree(t).is_hypertree)
        throw std::invalid_argument("branches are only defined on hypertrees here");
    BranchDecomposition out;
    out.anchor = u;
    for (int seed : t.incident[u]) {
        // grow the branch from the seed edge, never crossing u
        Branch br;
        std::vector<char> vseen(t.n, 0), eseen(t.edges.size(), 0);
        vseen[u] = 1;
        br.vertices.push_back(u);
        std::queue<int> q;
        eseen[seed] = 1;
        q.push(seed);
        br.edge_indices.push_back(seed);
        while (!q.empty()) {
            int ei = q.front();
            q.pop();
            for (int v : t.edges[ei]) {
                if (vseen[v]) continue;
                vseen[v] = 1;
                br.vertices.push_back(v);
                for (int ej : t.incident[v])
                    if (!eseen[ej]) {
                        eseen[ej] = 1;
                        br.edge_indices.push_back(ej);
                        q.push(ej);
                    }
            }
        }
        std::sort(br.vertices.begin(), br.vertices.end());
        std::sort(br.edge_indices.begin(), br.edge_indices.end());
        out.branches.push_back(std::move(br));
    }
    return out;
}

bool is_power_hypertree(const Hypergraph& g, int r) {
    if (!g.is_uniform(r)) return false;
    if (!validate_hypertree(g).is_hypertree) return false;
    for (const auto& e : g.edges) {
        int junctions = 0;
        for (int v : e)
            if (g.degree(v) >= 2) ++junctions;
        if (junctions > 2) return false;
    }
    return true;
}

}  // namespace hypertree
