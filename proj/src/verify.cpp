#include "hypertree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "hypertree/json_io.hpp"
#include "hypertree/parallel.hpp"

namespace hypertree {

SanityCounters& sanity_counters() {
    static SanityCounters counters;
    return counters;
}

SpectralResult solve_checked(const Hypergraph& g, double tol) {
    SpectralResult res = spectral_radius(g, tol);
    SanityCounters& c = sanity_counters();
    c.solves.fetch_add(1, std::memory_order_relaxed);
    long long s = min_status(g);
    if (res.rho < static_cast<double>(s) * (1.0 - 1e-12) - 1e-9)
        c.status_violations.fetch_add(1, std::memory_order_relaxed);
    if (res.residual > tol * res.rho * (1.0 + 1e-12) && res.residual != 0.0)
        c.residual_violations.fetch_add(1, std::memory_order_relaxed);
    return res;
}

bool LemmaReport::passed() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

double LemmaReport::max_identity_residual() const {
    double worst = 0.0;
    for (const auto& c : checks)
        if (c.applicable && (c.kind == "identity" || c.kind == "band"))
            worst = std::max(worst, c.value);
    return worst;
}

double LemmaReport::min_strict_margin() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : checks)
        if (c.applicable && c.kind == "strict") best = std::min(best, c.value);
    return best;
}

bool ExtremalReport::passed() const {
    for (const auto& v : verdicts)
        if (v.status == "fail" || v.status == "inconclusive") return false;
    return true;
}

namespace {

double zero_band(const HarnessSettings& s, double rho) { return s.margin * std::max(rho, 1.0); }

// Pass rule for "same sign" triples: all inside the zero band, or all
// strictly positive, or all strictly negative.
bool same_sign(double a, double b, double c, double band) {
    if (std::fabs(a) <= band && std::fabs(b) <= band && std::fabs(c) <= band) return true;
    if (a > 0 && b > 0 && c > 0) return true;
    if (a < 0 && b < 0 && c < 0) return true;
    return false;
}

LemmaCheck strict_check(const std::string& name, double margin, double band) {
    LemmaCheck c;
    c.name = name;
    c.kind = "strict";
    c.value = margin;
    c.threshold = band;
    c.pass = margin > band;
    return c;
}

LemmaCheck identity_check(const std::string& name, double residual, double tol) {
    LemmaCheck c;
    c.name = name;
    c.kind = "identity";
    c.value = residual;
    c.threshold = tol;
    c.pass = residual <= tol;
    return c;
}

LemmaCheck band_check(const std::string& name, double residual, double band) {
    LemmaCheck c;
    c.name = name;
    c.kind = "band";
    c.value = residual;
    c.threshold = band;
    c.pass = residual <= band;
    return c;
}

LemmaCheck skipped_check(const std::string& name, const std::string& why) {
    LemmaCheck c;
    c.name = name;
    c.kind = "skipped";
    c.applicable = false;
    c.pass = true;
    c.note = why;
    return c;
}

double sigma_of_component(const std::vector<double>& x, const ComponentPartition& part, int v) {
    double s = 0.0;
    int label = part.labels[v];
    for (size_t i = 0; i < x.size(); ++i)
        if (part.labels[i] == label) s += x[i];
    return s;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Two-edge identities

namespace {

struct TwoEdgeContext {
    const Hypergraph& t;
    const DistanceMatrix& d;
    const std::vector<double>& x;
    double rho;
    std::vector<ComponentPartition> parts;  // per-edge components of t - e
};

struct TwoEdgeResiduals {
    double pair_identity = -1.0;
    double filler_a = -1.0;  // valid when degree preconditions hold
    double filler_b = -1.0;
};

TwoEdgeResiduals eval_two_edge(const TwoEdgeContext& ctx, const TwoEdgeConfig& cfg,
                               bool degree_ok, int r) {
    TwoEdgeResiduals out;
    const auto& x = ctx.x;
    double rho = ctx.rho;
    double sigma_t1 = sigma_of_component(x, ctx.parts[cfg.e1], cfg.u1);
    double sigma_t2 = sigma_of_component(x, ctx.parts[cfg.e2], cfg.u2);

    double sigma_a1 = 0.0, sigma_a2 = 0.0;
    for (int w = 0; w < ctx.t.n; ++w) {
        if (ctx.d.at(w, cfg.u1) == ctx.d.at(w, cfg.v1)) sigma_a1 += x[w];
        if (ctx.d.at(w, cfg.u2) == ctx.d.at(w, cfg.v2)) sigma_a2 += x[w];
    }
    double lhs = rho * (x[cfg.u1] - x[cfg.u2]) - rho * (x[cfg.v1] - x[cfg.v2]);
    double rhs = 2.0 * (sigma_t2 - sigma_t1) + sigma_a2 - sigma_a1;
    out.pair_identity = std::fabs(lhs - rhs);

    if (degree_ok) {
        double dw = x[cfg.w1] - x[cfg.w2];
        double lhs_a = rho * (x[cfg.u1] - x[cfg.u2]) - (rho + 1.0) * dw;
        out.filler_a = std::fabs(lhs_a - (sigma_t2 - sigma_t1));
        double lhs_b = (rho + 1.0) * dw - rho * (x[cfg.v1] - x[cfg.v2]);
        double rhs_b = (r - 2) * (x[cfg.w2] - x[cfg.w1]) + sigma_t2 - sigma_t1;
        out.filler_b = std::fabs(lhs_b - rhs_b);
    }
    return out;
}

}  // namespace

LemmaReport check_two_edge_identities(const Hypergraph& t, const HarnessSettings& s) {
    if (!validate_hypertree(t).is_hypertree)
        throw std::invalid_argument("two-edge identities need a hypertree");
    LemmaReport report;
    report.lemma = "two-edge-identities";
    report.instance = "auto-scan over " + std::to_string(t.edge_count()) + " edges";

    SpectralResult res = solve_checked(t, s.solver_tol);
    DistanceMatrix d = distance_matrix(t);
    TwoEdgeContext ctx{t, d, res.perron, res.rho, {}};
    ctx.parts.reserve(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e) ctx.parts.push_back(components_after_edge_removal(t, e));

    int n_pair = 0, n_filler = 0;
    double worst_pair = 0.0, worst_a = 0.0, worst_b = 0.0;
    for (int e1 = 0; e1 < t.edge_count(); ++e1) {
        for (int e2 = 0; e2 < t.edge_count(); ++e2) {
            if (e1 == e2) continue;
            for (int u1 : t.edges[e1])
                for (int v1 : t.edges[e1]) {
                    if (u1 == v1) continue;
                    for (int u2 : t.edges[e2])
                        for (int v2 : t.edges[e2]) {
                            if (u2 == v2) continue;
                            if (d.at(u1, u2) != d.at(v1, v2) + 2) continue;
                            TwoEdgeConfig cfg;
                            cfg.e1 = e1;
                            cfg.e2 = e2;
                            cfg.u1 = u1;
                            cfg.v1 = v1;
                            cfg.u2 = u2;
                            cfg.v2 = v2;
                            bool degree_ok =
                                t.edges[e1].size() == t.edges[e2].size() && t.edges[e1].size() >= 3;
                            if (degree_ok) {
                                for (int w : t.edges[e1])
                                    if (w != u1 && w != v1 && t.degree(w) != 1) degree_ok = false;
                                for (int w : t.edges[e2])
                                    if (w != u2 && w != v2 && t.degree(w) != 1) degree_ok = false;
                            }
                            if (degree_ok) {
                                for (int w : t.edges[e1])
                                    if (w != u1 && w != v1) {
                                        cfg.w1 = w;
                                        break;
                                    }
                                for (int w : t.edges[e2])
                                    if (w != u2 && w != v2) {
                                        cfg.w2 = w;
                                        break;
                                    }
                            }
                            int r = static_cast<int>(t.edges[e1].size());
                            TwoEdgeResiduals rr = eval_two_edge(ctx, cfg, degree_ok, r);
                            ++n_pair;
                            worst_pair = std::max(worst_pair, rr.pair_identity);
                            if (degree_ok) {
                                ++n_filler;
                                worst_a = std::max(worst_a, rr.filler_a);
                                worst_b = std::max(worst_b, rr.filler_b);
                            }
                        }
                }
        }
    }
    report.configurations = n_pair;
    if (n_pair == 0) {
        report.checks.push_back(skipped_check("distance-pair identity", "no admissible configuration"));
    } else {
        auto c = identity_check("distance-pair identity", worst_pair, s.identity_tol);
        c.note = std::to_string(n_pair) + " configurations";
        report.checks.push_back(c);
    }
    if (n_filler == 0) {
        report.checks.push_back(skipped_check("filler identity (upper)", "no admissible configuration"));
        report.checks.push_back(skipped_check("filler identity (lower)", "no admissible configuration"));
    } else {
        auto ca = identity_check("filler identity (upper)", worst_a, s.identity_tol);
        ca.note = std::to_string(n_filler) + " configurations";
        report.checks.push_back(ca);
        report.checks.push_back(identity_check("filler identity (lower)", worst_b, s.identity_tol));
    }
    return report;
}

LemmaReport check_two_edge_identities(const Hypergraph& t, const TwoEdgeConfig& cfg_in,
                                      const HarnessSettings& s) {
    if (!validate_hypertree(t).is_hypertree)
        throw std::invalid_argument("two-edge identities need a hypertree");
    TwoEdgeConfig cfg = cfg_in;
    t.check_edge(cfg.e1);
    t.check_edge(cfg.e2);
    auto in_edge = [&](int e, int v) {
        return std::binary_search(t.edges[e].begin(), t.edges[e].end(), v);
    };
    if (!in_edge(cfg.e1, cfg.u1) || !in_edge(cfg.e1, cfg.v1) || cfg.u1 == cfg.v1 ||
        !in_edge(cfg.e2, cfg.u2) || !in_edge(cfg.e2, cfg.v2) || cfg.u2 == cfg.v2)
        throw std::invalid_argument("configuration vertices must be distinct members of their edges");

    SpectralResult res = solve_checked(t, s.solver_tol);
    DistanceMatrix d = distance_matrix(t);
    if (d.at(cfg.u1, cfg.u2) != d.at(cfg.v1, cfg.v2) + 2)
        throw std::invalid_argument("configuration violates the distance precondition d(u1,u2) = d(v1,v2) + 2");

    bool degree_ok = t.edges[cfg.e1].size() == t.edges[cfg.e2].size() && t.edges[cfg.e1].size() >= 3;
    if (degree_ok) {
        for (int w : t.edges[cfg.e1])
            if (w != cfg.u1 && w != cfg.v1 && t.degree(w) != 1) degree_ok = false;
        for (int w : t.edges[cfg.e2])
            if (w != cfg.u2 && w != cfg.v2 && t.degree(w) != 1) degree_ok = false;
    }
    if (degree_ok) {
        if (cfg.w1 < 0)
            for (int w : t.edges[cfg.e1])
                if (w != cfg.u1 && w != cfg.v1) {
                    cfg.w1 = w;
                    break;
                }
        if (cfg.w2 < 0)
            for (int w : t.edges[cfg.e2])
                if (w != cfg.u2 && w != cfg.v2) {
                    cfg.w2 = w;
                    break;
                }
        if (!in_edge(cfg.e1, cfg.w1) || cfg.w1 == cfg.u1 || cfg.w1 == cfg.v1 ||
            !in_edge(cfg.e2, cfg.w2) || cfg.w2 == cfg.u2 || cfg.w2 == cfg.v2)
            throw std::invalid_argument("filler vertices must be edge members distinct from u and v");
    } else if (cfg_in.w1 >= 0 || cfg_in.w2 >= 0) {
        throw std::invalid_argument("filler identities need equal edge sizes >= 3 and degree-one off vertices");
    }

    TwoEdgeContext ctx{t, d, res.perron, res.rho, {}};
    ctx.parts.reserve(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e) ctx.parts.push_back(components_after_edge_removal(t, e));
    int r = static_cast<int>(t.edges[cfg.e1].size());
    TwoEdgeResiduals rr = eval_two_edge(ctx, cfg, degree_ok, r);

    LemmaReport report;
    report.lemma = "two-edge-identities";
    report.instance = "edges " + std::to_string(cfg.e1) + "," + std::to_string(cfg.e2);
    report.configurations = 1;
    report.checks.push_back(identity_check("distance-pair identity", rr.pair_identity, s.identity_tol));
    if (degree_ok) {
        report.checks.push_back(identity_check("filler identity (upper)", rr.filler_a, s.identity_tol));
        report.checks.push_back(identity_check("filler identity (lower)", rr.filler_b, s.identity_tol));
    } else {
        report.checks.push_back(skipped_check("filler identity (upper)", "degree preconditions not met"));
        report.checks.push_back(skipped_check("filler identity (lower)", "degree preconditions not met"));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pendant pair sign / ordering

LemmaReport check_pendant_sign_lemma(const Hypergraph& t, const PendantPath& p1_in,
                                     const PendantPath& p2_in, const HarnessSettings& s) {
    if (p1_in.edges.size() != p2_in.edges.size() || p1_in.edges.empty())
        throw std::invalid_argument("pendant paths must have equal positive length");
    std::set<int> verts1, verts2;
    for (int e : p1_in.edges)
        for (int v : t.edges[e]) verts1.insert(v);
    for (int e : p2_in.edges)
        for (int v : t.edges[e]) verts2.insert(v);
    for (int v : verts1)
        if (verts2.count(v)) throw std::invalid_argument("pendant paths must be vertex-disjoint");

    int ell = static_cast<int>(p1_in.edges.size());
    SpectralResult res = solve_checked(t, s.solver_tol);
    const std::vector<double>& x = res.perron;
    double band = zero_band(s, res.rho);

    const PendantPath* p1 = &p1_in;
    const PendantPath* p2 = &p2_in;
    if (x[p1->anchor] < x[p2->anchor]) std::swap(p1, p2);

    auto filler = [&](const PendantPath& p, int i) {  // first degree-one filler of edge i (1-based)
        int a = p.junctions[i - 1], b = p.junctions[i];
        for (int v : t.edges[p.edges[i - 1]])
            if (v != a && v != b) return v;
        throw std::invalid_argument("pendant path edge has no filler (uniformity below 3)");
    };

    std::vector<double> du(ell + 2), dw(ell + 1);
    for (int i = 1; i <= ell + 1; ++i) du[i] = x[p1->junctions[i - 1]] - x[p2->junctions[i - 1]];
    for (int i = 1; i <= ell; ++i) dw[i] = x[filler(*p1, i)] - x[filler(*p2, i)];

    LemmaReport report;
    report.lemma = "pendant-pair-sign";
    report.instance = "ell=" + std::to_string(ell);
    for (int i = 1; i <= ell; ++i) {
        LemmaCheck c;
        c.name = "sign triple i=" + std::to_string(i);
        c.kind = "band";
        c.threshold = band;
        c.value = std::min({std::fabs(du[i]), std::fabs(dw[i]), std::fabs(du[i + 1])});
        c.pass = same_sign(du[i], dw[i], du[i + 1], band);
        report.checks.push_back(c);
    }
    if (du[ell + 1] > band) {
        for (int i = 1; i <= ell; ++i) {
            report.checks.push_back(
                strict_check("difference growth (junction) i=" + std::to_string(i), du[i + 1] - du[i], band));
            report.checks.push_back(
                strict_check("difference growth (filler) i=" + std::to_string(i), du[i + 1] - dw[i], band));
        }
    } else {
        report.checks.push_back(
            skipped_check("difference growth", "anchor entries agree within the zero band"));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Join-path symmetry

LemmaReport check_path_symmetry_lemma(const Hypergraph& t1, const Hypergraph& t2, int u, int v,
                                      int path_t, int r, const HarnessSettings& s) {
    if (path_t < 2) throw std::invalid_argument("the joining path needs at least one edge (t >= 2)");
    if (r < 3) throw std::invalid_argument("the joining path needs uniformity r >= 3");
    t1.check_vertex(u);
    t2.check_vertex(v);
    if (!validate_hypertree(t1).is_hypertree || !validate_hypertree(t2).is_hypertree)
        throw std::invalid_argument("join needs two hypertrees");

    int n1 = t1.n, n2 = t2.n;
    std::vector<std::vector<int>> edges = t1.edges;
    for (const auto& e : t2.edges) {
        std::vector<int> shifted;
        shifted.reserve(e.size());
        for (int w : e) shifted.push_back(w + n1);
        edges.push_back(std::move(shifted));
    }
    int fresh = n1 + n2;
    std::vector<int> vj(path_t + 1);  // 1-based junctions of the joining path
    vj[1] = u;
    vj[path_t] = v + n1;
    for (int i = 2; i <= path_t - 1; ++i) vj[i] = fresh++;
    std::vector<int> w_first(path_t);  // 1-based first filler per path edge
    for (int i = 1; i <= path_t - 1; ++i) {
        std::vector<int> e{vj[i]};
        for (int j = 0; j < r - 2; ++j) {
            if (j == 0) w_first[i] = fresh;
            e.push_back(fresh++);
        }
        e.push_back(vj[i + 1]);
        edges.push_back(std::move(e));
    }
    Hypergraph joined = Hypergraph::from_edge_list(fresh, std::move(edges));

    SpectralResult res = solve_checked(joined, s.solver_tol);
    const std::vector<double>& x = res.perron;
    double band = zero_band(s, res.rho);

    double sigma1 = 0.0, sigma2 = 0.0;
    for (int w = 0; w < n1; ++w) sigma1 += x[w];
    for (int w = n1; w < n1 + n2; ++w) sigma2 += x[w];
    double delta = (sigma2 - x[vj[path_t]]) - (sigma1 - x[vj[1]]);

    LemmaReport report;
    report.lemma = "join-path-symmetry";
    report.instance = "t=" + std::to_string(path_t) + " r=" + std::to_string(r);

    auto vx = [&](int i) { return x[vj[i]]; };
    int t = path_t;
    if (std::fabs(delta) <= band) {
        report.instance += " (balanced sides)";
        for (int i = 1; i <= t / 2; ++i)
            report.checks.push_back(band_check("palindrome junction i=" + std::to_string(i),
                                               std::fabs(vx(i) - vx(t + 1 - i)), band));
        for (int i = 1; t >= 3 && i <= (t - 1) / 2; ++i)
            report.checks.push_back(band_check("palindrome filler i=" + std::to_string(i),
                                               std::fabs(x[w_first[i]] - x[w_first[t - i]]), band));
    } else {
        bool mirrored = delta < 0;
        report.instance += mirrored ? " (heavier first side; mirrored)" : " (heavier second side)";
        auto V = [&](int i) { return mirrored ? vx(t + 1 - i) : vx(i); };
        auto W = [&](int i) { return mirrored ? x[w_first[t - i]] : x[w_first[i]]; };
        for (int i = 1; i <= t / 2; ++i)
            report.checks.push_back(
                strict_check("junction order i=" + std::to_string(i), V(i) - V(t + 1 - i), band));
        for (int i = 1; t >= 3 && i <= (t - 1) / 2; ++i)
            report.checks.push_back(
                strict_check("filler order i=" + std::to_string(i), W(i) - W(t - i), band));
        for (int i = 1; i <= t / 2 - 1; ++i)
            report.checks.push_back(strict_check("difference decay (junction) i=" + std::to_string(i),
                                                 (V(i) - V(t + 1 - i)) - (V(i + 1) - V(t - i)), band));
        for (int i = 1; t >= 3 && i <= (t - 1) / 2; ++i)
            report.checks.push_back(strict_check("difference decay (filler) i=" + std::to_string(i),
                                                 (V(i) - V(t + 1 - i)) - (W(i) - W(t - i)), band));
    }
    return report;
}

// ---------------------------------------------------------------------------
// D family: end entries, chains, status bound, balancing

LemmaReport check_D_family_lemmas(int m, int a, int b, int ell, int r, const HarnessSettings& s) {
    if (a < 1 || b < a + 2) throw std::invalid_argument("end-balance checks need 1 <= a and b >= a+2");
    if (ell < 1 || r < 3) throw std::invalid_argument("end-balance checks need ell >= 1 and r >= 3");
    long long legs = static_cast<long long>(ell) * (a + b);
    if (legs > m) throw std::invalid_argument("end-balance checks need ell*(a+b) <= m");
    int t = static_cast<int>(m - legs) + 1;

    LabeledHypergraph T;
    if (t >= 2) {
        T = construct_D(m, a, b, ell, r);
    } else {
        T = spider_paths(std::vector<int>(a + b, ell), r);  // degenerate central path
    }

    SpectralResult res = solve_checked(T.graph, s.solver_tol);
    const std::vector<double>& x = res.perron;
    double band = zero_band(s, res.rho);

    LemmaReport report;
    report.lemma = "end-balance";
    report.instance = "m=" + std::to_string(m) + " a=" + std::to_string(a) + " b=" +
                      std::to_string(b) + " ell=" + std::to_string(ell) + " r=" + std::to_string(r) +
                      " t=" + std::to_string(t);

    if (t >= 2) {
        auto vx = [&](int i) { return x[T.at("v" + std::to_string(i))]; };
        auto wx = [&](int i) { return x[T.at("w" + std::to_string(i))]; };
        report.checks.push_back(strict_check("end entries ordered", vx(1) - vx(t), band));
        if (t / 2 - 1 >= 1) {
            for (int i = 1; i <= t / 2 - 1; ++i)
                report.checks.push_back(strict_check("difference decay (junction) i=" + std::to_string(i),
                                                     (vx(i) - vx(t + 1 - i)) - (vx(i + 1) - vx(t - i)),
                                                     band));
        } else {
            report.checks.push_back(skipped_check("difference decay (junction)", "empty range at t=" +
                                                                                      std::to_string(t)));
        }
        if ((t - 1) / 2 >= 1) {
            for (int i = 1; i <= (t - 1) / 2; ++i)
                report.checks.push_back(strict_check("difference decay (filler) i=" + std::to_string(i),
                                                     (vx(i) - vx(t + 1 - i)) - (wx(i) - wx(t - i)),
                                                     band));
        } else {
            report.checks.push_back(skipped_check("difference decay (filler)", "empty range at t=" +
                                                                                    std::to_string(t)));
        }
    } else {
        report.checks.push_back(skipped_check("end entries ordered", "degenerate central path (t=1)"));
        report.checks.push_back(skipped_check("difference decay", "degenerate central path (t=1)"));
    }

    long long bound = static_cast<long long>(a) * ell * (r - 1) * (t - 1);
    for (int i = 1; i <= t / 2; ++i) bound += t - 2 * i + 1;
    for (int i = 1; i <= (t - 1) / 2; ++i) bound += static_cast<long long>(r - 2) * (t - 2 * i);
    auto c = strict_check("status lower bound", res.rho - static_cast<double>(bound), band);
    c.note = "bound=" + std::to_string(bound);
    report.checks.push_back(c);

    if (legs <= m - 1) {
        Hypergraph balanced = construct_D(m, a + 1, b - 1, ell, r).graph;
        SpectralResult res2 = solve_checked(balanced, s.solver_tol);
        report.checks.push_back(strict_check("balance increases rho", res2.rho - res.rho, band));
    } else {
        report.checks.push_back(skipped_check("balance increases rho", "needs ell*(a+b) <= m-1"));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Monotone moves

LemmaReport check_monotone_moves(const Hypergraph& g, const PathShiftMove& mv, int r,
                                 const HarnessSettings& s) {
    if (mv.p < mv.q || mv.q < 1) throw std::invalid_argument("path shift needs p >= q >= 1");
    if (!g.is_uniform(r)) throw std::invalid_argument("path shift needs an r-uniform base with an edge");
    if (components(g).count != 1) throw std::invalid_argument("path shift needs a connected base");
    g.check_vertex(mv.v);

    Hypergraph before = attach_pendant_paths(g, mv.v, mv.p, mv.q, r);
    Hypergraph after = attach_pendant_paths(g, mv.v, mv.p + 1, mv.q - 1, r);
    SpectralResult r1 = solve_checked(before, s.solver_tol);
    SpectralResult r2 = solve_checked(after, s.solver_tol);

    LemmaReport report;
    report.lemma = "path-shift";
    report.instance = "v=" + std::to_string(mv.v) + " (" + std::to_string(mv.p) + "," +
                      std::to_string(mv.q) + ")->(" + std::to_string(mv.p + 1) + "," +
                      std::to_string(mv.q - 1) + ")";
    report.checks.push_back(
        strict_check("rho increases across shift", r2.rho - r1.rho, zero_band(s, r2.rho)));
    return report;
}

LemmaReport check_monotone_moves(const Hypergraph& g, const SigmaMove& mv, const HarnessSettings& s) {
    g.check_vertex(mv.u);
    g.check_vertex(mv.v);
    if (mv.v == mv.u) throw std::invalid_argument("sigma move target must differ from the hub");
    BranchDecomposition dec = branches_at(g, mv.u);
    int t = static_cast<int>(dec.branches.size());
    if (t < 3) throw std::invalid_argument("sigma move needs at least three branches at the hub");
    if (mv.branch_set.empty()) throw std::invalid_argument("sigma move needs a nonempty branch set");

    int target_branch = -1;
    for (int i = 0; i < t; ++i)
        if (std::binary_search(dec.branches[i].vertices.begin(), dec.branches[i].vertices.end(), mv.v))
            target_branch = i;
    std::set<int> moved_set(mv.branch_set.begin(), mv.branch_set.end());
    for (int i : moved_set)
        if (i < 0 || i >= t || i == target_branch)
            throw std::invalid_argument("sigma move branch set must avoid the target branch");

    LemmaReport report;
    report.lemma = "sigma-move";
    report.instance = "u=" + std::to_string(mv.u) + " v=" + std::to_string(mv.v) + " |I|=" +
                      std::to_string(moved_set.size());

    SpectralResult res = solve_checked(g, s.solver_tol);
    double sigma_target = sigma(res.perron, dec.branches[target_branch].vertices);
    double sigma_keep = -1.0;
    for (int i = 0; i < t; ++i) {
        if (i == target_branch || moved_set.count(i)) continue;
        sigma_keep = std::max(sigma_keep, sigma(res.perron, dec.branches[i].vertices));
    }
    if (sigma_keep < 0) throw std::invalid_argument("sigma move must leave a branch besides the target");
    if (sigma_keep < sigma_target) {
        report.checks.push_back(skipped_check(
            "rho increases across move", "precondition sigma(kept) >= sigma(target) unmet"));
        return report;
    }

    std::vector<int> moved_edges;
    for (int i : moved_set)
        for (int e : dec.branches[i].edge_indices)
            if (std::binary_search(g.edges[e].begin(), g.edges[e].end(), mv.u))
                moved_edges.push_back(e);
    std::sort(moved_edges.begin(), moved_edges.end());
    Hypergraph after = move_edges(g, mv.u, mv.v, moved_edges);
    SpectralResult res2 = solve_checked(after, s.solver_tol);
    report.checks.push_back(
        strict_check("rho increases across move", res2.rho - res.rho, zero_band(s, res2.rho)));
    return report;
}

LemmaReport check_monotone_moves(const Hypergraph& g, const CliqueMove& mv, const HarnessSettings& s) {
    g.check_vertex(mv.w1);
    g.check_vertex(mv.w2);
    if (mv.w1 == mv.w2) throw std::invalid_argument("twin merge needs two distinct vertices");
    int shared = -1;
    for (int e : g.incident[mv.w1])
        if (std::binary_search(g.edges[e].begin(), g.edges[e].end(), mv.w2)) shared = e;
    if (shared < 0) throw std::invalid_argument("twin merge needs adjacent vertices");

    LemmaReport report;
    report.lemma = "twin-merge";
    report.instance = "w1=" + std::to_string(mv.w1) + " w2=" + std::to_string(mv.w2);

    if (g.degree(mv.w1) < 2 || g.degree(mv.w2) < 2) {
        report.checks.push_back(
            skipped_check("rho decreases across merge", "both sides need an edge beyond the shared one"));
        return report;
    }
    std::vector<int> moved;
    for (int e : g.incident[mv.w2])
        if (e != shared) moved.push_back(e);
    Hypergraph after = move_edges(g, mv.w2, mv.w1, moved);
    SpectralResult r1 = solve_checked(g, s.solver_tol);
    SpectralResult r2 = solve_checked(after, s.solver_tol);
    report.checks.push_back(
        strict_check("rho decreases across merge", r1.rho - r2.rho, zero_band(s, r1.rho)));
    return report;
}

// ---------------------------------------------------------------------------
// Extremal verification

namespace {

CanonicalCode path_code(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, i + 1);
    return canonical_code(TreeSkeleton::from_edges(m + 1, std::move(edges)));
}

}  // namespace

ExtremalReport verify_extremal(const ClassDescriptor& c, ExtremalMode mode,
                               const HarnessSettings& s) {
    std::vector<ClassMember> members = enumerate_class(c);
    if (members.empty()) throw std::domain_error("extremal class is empty");

    ExtremalReport report;
    report.desc = c;
    report.members.resize(members.size());
    parallel_for(static_cast<int>(members.size()), s.jobs, [&](int i) {
        SpectralResult res = solve_checked(members[i].graph, s.solver_tol);
        report.members[i] = {members[i].code, res.rho};
    });

    int imax = 0, imin = 0;
    for (size_t i = 1; i < report.members.size(); ++i) {
        if (report.members[i].rho > report.members[imax].rho) imax = static_cast<int>(i);
        if (report.members[i].rho < report.members[imin].rho) imin = static_cast<int>(i);
    }
    report.argmax = report.members[imax].code;
    report.argmin = report.members[imin].code;
    report.rho_max = report.members[imax].rho;
    report.rho_min = report.members[imin].rho;
    report.margin_max = report.margin_min = 0.0;  // gap to the runner-up; 0 for a singleton class
    if (report.members.size() > 1) {
        double inf = std::numeric_limits<double>::infinity();
        double runner_up_max = -inf, runner_up_min = inf;
        for (size_t i = 0; i < report.members.size(); ++i) {
            if (static_cast<int>(i) != imax) runner_up_max = std::max(runner_up_max, report.members[i].rho);
            if (static_cast<int>(i) != imin) runner_up_min = std::min(runner_up_min, report.members[i].rho);
        }
        report.margin_max = report.rho_max - runner_up_max;
        report.margin_min = runner_up_min - report.rho_min;
    }

    auto judge = [&](const std::string& item, const CanonicalCode& predicted, bool maximize) {
        ExtremalVerdict v;
        v.item = item;
        v.predicted = predicted;
        const CanonicalCode& winner = maximize ? report.argmax : report.argmin;
        double extreme = maximize ? report.rho_max : report.rho_min;
        double gap = maximize ? report.margin_max : report.margin_min;
        if (winner != predicted) {
            v.status = "fail";
        } else if (report.members.size() == 1 || gap > s.margin * extreme) {
            v.status = "pass";
        } else {
            v.status = "inconclusive";
        }
        report.verdicts.push_back(std::move(v));
    };

    bool want_max = mode != ExtremalMode::min;
    bool want_min = mode != ExtremalMode::max;
    int m = c.m, k = c.k, ell = c.ell;
    if (want_max) {
        if (k == 2 && 1 <= ell && ell <= m - 1) judge("max:path", path_code(m), true);
        if (k >= 3 && ell >= 1 && static_cast<long long>(ell) * k < m)
            judge("max:D-balanced",
                  canonical_code(skeleton_of(construct_D(m, k / 2, (k + 1) / 2, ell, c.r).graph)), true);
        if (k == 1 && 2 <= ell && ell <= m - 2)
            judge("max:D(1,2)", canonical_code(skeleton_of(construct_D(m, 1, 2, 1, c.r).graph)), true);
        if (ell == 1 && k >= 2 && k < m)
            judge("max:pendant-edge-class",
                  canonical_code(skeleton_of(construct_D(m, k / 2, (k + 1) / 2, 1, c.r).graph)), true);
    }
    if (want_min) {
        bool covered = (k == 1 && 2 <= ell && ell <= m - 2) ||
                       (k >= 2 && ell >= 2 && static_cast<long long>(k) * ell <= m - 1);
        if (covered)
            judge("min:S", canonical_code(skeleton_of(construct_S(m, k, ell, c.r).graph)), false);
        else
            report.verdicts.push_back({"min:S", "", "not-covered"});
    }
    if (report.verdicts.empty()) report.verdicts.push_back({"(none)", "", "not-covered"});
    return report;
}

// ---------------------------------------------------------------------------
// Campaigns

void CampaignResult::add(CampaignRow row) {
    if (row.verdict == "fail") all_pass = false;
    rows.push_back(std::move(row));
}

void CampaignResult::merge(const CampaignResult& other) {
    for (const auto& r : other.rows) add(r);
    configurations += other.configurations;
    all_pass = all_pass && other.all_pass;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace

std::string to_csv(const CampaignResult& c) {
    std::string out = "id,code,rho,margin,tolerance,verdict\n";
    for (const auto& r : c.rows)
        out += csv_field(r.id) + "," + csv_field(r.code) + "," + fmt_double(r.rho) + "," +
               fmt_double(r.margin) + "," + fmt_double(r.tolerance) + "," + r.verdict + "\n";
    return out;
}

std::string to_json(const CampaignResult& c) {
    std::string out = "{\"rows\":[";
    for (size_t i = 0; i < c.rows.size(); ++i) {
        const auto& r = c.rows[i];
        if (i) out += ",";
        out += "{\"id\":\"" + json_escape(r.id) + "\",\"code\":\"" + json_escape(r.code) +
               "\",\"rho\":" + fmt_double(r.rho) + ",\"margin\":" + fmt_double(r.margin) +
               ",\"tolerance\":" + fmt_double(r.tolerance) + ",\"verdict\":\"" + r.verdict + "\"}";
    }
    out += "],\"configurations\":" + std::to_string(c.configurations) +
           ",\"all_pass\":" + (c.all_pass ? std::string("true") : std::string("false")) + "}";
    return out;
}

std::string to_json(const ExtremalReport& r) {
    std::string out = "{\"class\":{\"m\":" + std::to_string(r.desc.m) +
                      ",\"r\":" + std::to_string(r.desc.r) + ",\"ell\":" + std::to_string(r.desc.ell) +
                      ",\"k\":" + std::to_string(r.desc.k) + "},\"members\":[";
    for (size_t i = 0; i < r.members.size(); ++i) {
        if (i) out += ",";
        out += "{\"code\":\"" + json_escape(r.members[i].code) +
               "\",\"rho\":" + fmt_double(r.members[i].rho) + "}";
    }
    out += "],\"argmax\":\"" + json_escape(r.argmax) + "\",\"argmin\":\"" + json_escape(r.argmin) +
           "\",\"rho_max\":" + fmt_double(r.rho_max) + ",\"rho_min\":" + fmt_double(r.rho_min) +
           ",\"margin_max\":" + fmt_double(r.margin_max) + ",\"margin_min\":" + fmt_double(r.margin_min) +
           ",\"verdicts\":[";
    for (size_t i = 0; i < r.verdicts.size(); ++i) {
        if (i) out += ",";
        out += "{\"item\":\"" + json_escape(r.verdicts[i].item) + "\",\"predicted\":\"" +
               json_escape(r.verdicts[i].predicted) + "\",\"status\":\"" + r.verdicts[i].status + "\"}";
    }
    return out + "]}";
}

std::string to_json(const LemmaReport& r) {
    std::string out = "{\"lemma\":\"" + json_escape(r.lemma) + "\",\"instance\":\"" +
                      json_escape(r.instance) +
                      "\",\"configurations\":" + std::to_string(r.configurations) + ",\"checks\":[";
    for (size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        if (i) out += ",";
        out += "{\"name\":\"" + json_escape(c.name) + "\",\"kind\":\"" + json_escape(c.kind) +
               "\",\"applicable\":" + (c.applicable ? "true" : "false") +
               ",\"pass\":" + (c.pass ? "true" : "false") + ",\"value\":" + fmt_double(c.value) +
               ",\"threshold\":" + fmt_double(c.threshold);
        if (!c.note.empty()) out += ",\"note\":\"" + json_escape(c.note) + "\"";
        out += "}";
    }
    out += "],\"passed\":" + std::string(r.passed() ? "true" : "false") + "}";
    return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

CampaignRow lemma_row(std::string id, std::string code, double rho, const LemmaReport& rep,
                      const HarnessSettings& s, bool identity_style) {
    CampaignRow row;
    row.id = std::move(id);
    row.code = std::move(code);
    row.rho = rho;
    if (identity_style) {
        row.margin = rep.max_identity_residual();
        row.tolerance = s.identity_tol;
    } else {
        double m = rep.min_strict_margin();
        row.margin = std::isfinite(m) ? m : 0.0;
        row.tolerance = s.margin;
    }
    row.verdict = rep.passed() ? "pass" : "fail";
    return row;
}

// Shared driver: run fn(i) for every instance, collecting rows in order.
template <class F>
CampaignResult run_rows(int count, const HarnessSettings& s, F&& fn) {
    std::vector<CampaignResult> slots(count);
    parallel_for(count, s.jobs, [&](int i) { slots[i] = fn(i); });
    CampaignResult out;
    for (const auto& slot : slots) out.merge(slot);
    return out;
}

}  // namespace

CampaignResult extremal_grid_max_path(int max_m, int r, const HarnessSettings& s) {
    struct Item {
        ClassDescriptor c;
    };
    std::vector<Item> items;
    for (int m = 2; m <= max_m; ++m)
        for (int ell = 1; ell <= m - 1; ++ell) items.push_back({{m, r, ell, 2}});
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        const ClassDescriptor& c = items[i].c;
        ExtremalReport rep = verify_extremal(c, ExtremalMode::max, {s.solver_tol, s.margin, s.identity_tol, 1});
        CampaignResult out;
        std::string verdict = "not-covered";
        for (const auto& v : rep.verdicts)
            if (v.item == "max:path") verdict = v.status;
        out.add({"max-path/m" + std::to_string(c.m) + "/l" + std::to_string(c.ell), rep.argmax,
                 rep.rho_max, rep.margin_max, s.margin, verdict});
        return out;
    });
}

CampaignResult extremal_grid_max_balanced(int max_m, int r, const HarnessSettings& s) {
    std::vector<ClassDescriptor> items;
    for (int m = 2; m <= max_m; ++m)
        for (int k = 3; k < m; ++k)
            for (int ell = 1; static_cast<long long>(ell) * k < m; ++ell)
                items.push_back({m, r, ell, k});
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        const ClassDescriptor& c = items[i];
        ExtremalReport rep = verify_extremal(c, ExtremalMode::max, {s.solver_tol, s.margin, s.identity_tol, 1});
        CampaignResult out;
        std::string verdict = "not-covered";
        for (const auto& v : rep.verdicts)
            if (v.item == "max:D-balanced") verdict = v.status;
        out.add({"max-D/m" + std::to_string(c.m) + "/l" + std::to_string(c.ell) + "/k" +
                     std::to_string(c.k),
                 rep.argmax, rep.rho_max, rep.margin_max, s.margin, verdict});
        return out;
    });
}

CampaignResult extremal_grid_max_single(int max_m, int r, const HarnessSettings& s) {
    std::vector<ClassDescriptor> items;
    for (int m = 4; m <= max_m; ++m)
        for (int ell = 2; ell <= m - 2; ++ell) items.push_back({m, r, ell, 1});
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        const ClassDescriptor& c = items[i];
        ExtremalReport rep = verify_extremal(c, ExtremalMode::max, {s.solver_tol, s.margin, s.identity_tol, 1});
        CampaignResult out;
        std::string verdict = "not-covered";
        for (const auto& v : rep.verdicts)
            if (v.item == "max:D(1,2)") verdict = v.status;
        out.add({"max-D12/m" + std::to_string(c.m) + "/l" + std::to_string(c.ell), rep.argmax,
                 rep.rho_max, rep.margin_max, s.margin, verdict});
        return out;
    });
}

CampaignResult extremal_grid_min_star(int max_m, int r, const HarnessSettings& s) {
    std::vector<ClassDescriptor> items;
    for (int m = 2; m <= max_m; ++m) {
        for (int ell = 2; ell <= m - 2; ++ell) items.push_back({m, r, ell, 1});
        for (int k = 2; k <= m; ++k)
            for (int ell = 2; static_cast<long long>(k) * ell <= m - 1; ++ell)
                items.push_back({m, r, ell, k});
    }
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        const ClassDescriptor& c = items[i];
        ExtremalReport rep = verify_extremal(c, ExtremalMode::min, {s.solver_tol, s.margin, s.identity_tol, 1});
        CampaignResult out;
        std::string verdict = "not-covered";
        for (const auto& v : rep.verdicts)
            if (v.item == "min:S") verdict = v.status;
        out.add({"min-S/m" + std::to_string(c.m) + "/l" + std::to_string(c.ell) + "/k" +
                     std::to_string(c.k),
                 rep.argmin, rep.rho_min, rep.margin_min, s.margin, verdict});
        return out;
    });
}

CampaignResult extremal_grid_corollary(int max_m, int r, const HarnessSettings& s) {
    std::vector<ClassDescriptor> items;
    for (int m = 2; m <= max_m; ++m)
        for (int k = 2; k < m; ++k) items.push_back({m, r, 1, k});
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        const ClassDescriptor& c = items[i];
        CampaignResult out;
        std::string id = "max-pendant-edges/m" + std::to_string(c.m) + "/k" + std::to_string(c.k);
        std::vector<ClassMember> probe = enumerate_class(c);
        if (probe.empty()) {
            out.add({id, "", 0.0, 0.0, s.margin, "vacuous"});
            return out;
        }
        ExtremalReport rep = verify_extremal(c, ExtremalMode::max, {s.solver_tol, s.margin, s.identity_tol, 1});
        std::string verdict = "not-covered";
        for (const auto& v : rep.verdicts)
            if (v.item == "max:pendant-edge-class") verdict = v.status;
        out.add({id, rep.argmax, rep.rho_max, rep.margin_max, s.margin, verdict});
        return out;
    });
}

CampaignResult identity_campaign(int max_m, int r, int n_random, int max_random_m,
                                 std::uint64_t seed, const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph graph;
        std::string code;
    };
    std::vector<Instance> instances;
    for (int m = 1; m <= max_m; ++m) {
        int idx = 0;
        for (const TreeSkeleton& t : enumerate_free_trees(m + 1)) {
            instances.push_back({"identity/m" + std::to_string(m) + "/" + std::to_string(idx++),
                                 power_of_tree(t, r).graph, canonical_code(t)});
        }
    }
    for (int i = 0; i < n_random; ++i) {
        std::uint64_t si = mix_seed(seed, i);
        int m = 2 + static_cast<int>(si % static_cast<std::uint64_t>(std::max(1, max_random_m - 1)));
        TreeSkeleton t = random_tree(m + 1, mix_seed(si, 7));
        instances.push_back({"identity/rand" + std::to_string(i), power_of_tree(t, r).graph,
                             canonical_code(t)});
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        LemmaReport rep = check_two_edge_identities(instances[i].graph, local);
        SpectralResult res = spectral_radius(instances[i].graph, s.solver_tol);
        CampaignResult out;
        out.configurations = rep.configurations;
        out.add(lemma_row(instances[i].id, instances[i].code, res.rho, rep, s, true));
        return out;
    });
}

CampaignResult pendant_sign_campaign(int max_m, int r, int n_random, std::uint64_t seed,
                                     const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph graph;
        PendantPath p1, p2;
    };
    std::vector<Instance> instances;
    for (int m = 2; m <= max_m; ++m)
        for (int ell = 1; ell <= m; ++ell)
            for (int a = 1; a <= m; ++a)
                for (int b = a; static_cast<long long>(ell) * (a + b) <= m - 1; ++b) {
                    LabeledHypergraph T = construct_D(m, a, b, ell, r);
                    PendantPathReport paths = count_pendant_paths(T.graph, ell);
                    int t = m - ell * (a + b) + 1;
                    int v1 = T.at("v1"), vt = T.at("v" + std::to_string(t));
                    PendantPath p1, p2;
                    bool found1 = false, found2 = false;
                    for (const auto& p : paths.paths) {
                        if (!found1 && p.anchor == v1) {
                            p1 = p;
                            found1 = true;
                        } else if (!found2 && p.anchor == vt) {
                            p2 = p;
                            found2 = true;
                        }
                    }
                    if (found1 && found2)
                        instances.push_back({"sign/D-m" + std::to_string(m) + "a" + std::to_string(a) +
                                                 "b" + std::to_string(b) + "l" + std::to_string(ell),
                                             T.graph, p1, p2});
                }
    int found = 0;
    for (std::uint64_t attempt = 0; found < n_random && attempt < 100ull * n_random; ++attempt) {
        std::uint64_t si = mix_seed(seed, attempt);
        int nverts = 4 + static_cast<int>(si % 7);  // trees on 4..10 vertices
        TreeSkeleton t = random_tree(nverts, mix_seed(si, 3));
        Hypergraph h = power_of_tree(t, r).graph;
        bool used = false;
        for (int ell = 1; ell < nverts && !used; ++ell) {
            PendantPathReport rep = count_pendant_paths(h, ell);
            for (size_t i = 0; i < rep.paths.size() && !used; ++i)
                for (size_t j = i + 1; j < rep.paths.size() && !used; ++j) {
                    std::set<int> vs;
                    bool disjoint = true;
                    for (int e : rep.paths[i].edges)
                        for (int v : h.edges[e]) vs.insert(v);
                    for (int e : rep.paths[j].edges)
                        for (int v : h.edges[e])
                            if (vs.count(v)) disjoint = false;
                    if (!disjoint) continue;
                    instances.push_back({"sign/rand" + std::to_string(found), h, rep.paths[i],
                                         rep.paths[j]});
                    ++found;
                    used = true;
                }
        }
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        LemmaReport rep = check_pendant_sign_lemma(instances[i].graph, instances[i].p1,
                                                   instances[i].p2, local);
        SpectralResult res = spectral_radius(instances[i].graph, s.solver_tol);
        CampaignResult out;
        out.add(lemma_row(instances[i].id, rep.instance, res.rho, rep, s, false));
        return out;
    });
}

CampaignResult path_symmetry_campaign(int n_random, std::uint64_t seed, const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph t1, t2;
        int u, v, t, r;
    };
    std::vector<Instance> instances;
    std::vector<std::pair<std::string, LabeledHypergraph>> bases;
    bases.emplace_back("edge", loose_path(1, 3));
    bases.emplace_back("path2", loose_path(2, 3));
    bases.emplace_back("path3", loose_path(3, 3));
    bases.emplace_back("star3", spider_paths({1, 1, 1}, 3));
    auto anchor = [](const LabeledHypergraph& h) {
        return h.labels.count("c") ? h.at("c") : h.at("v1");
    };
    for (size_t i = 0; i < bases.size(); ++i)
        for (int t = 2; t <= 5; ++t)
            instances.push_back({"sym/equal-" + bases[i].first + "-t" + std::to_string(t),
                                 bases[i].second.graph, bases[i].second.graph,
                                 anchor(bases[i].second), anchor(bases[i].second), t, 3});
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j)
            for (int t = 2; t <= 5; ++t)
                instances.push_back({"sym/mixed-" + bases[i].first + "-" + bases[j].first + "-t" +
                                         std::to_string(t),
                                     bases[i].second.graph, bases[j].second.graph,
                                     anchor(bases[i].second), anchor(bases[j].second), t, 3});
    for (int i = 0; i < n_random; ++i) {
        std::uint64_t si = mix_seed(seed, i);
        int n1 = 2 + static_cast<int>(si % 5);
        int n2 = 2 + static_cast<int>(mix_seed(si, 1) % 5);
        Hypergraph t1 = power_of_tree(random_tree(n1, mix_seed(si, 2)), 3).graph;
        Hypergraph t2 = power_of_tree(random_tree(n2, mix_seed(si, 3)), 3).graph;
        int u = static_cast<int>(mix_seed(si, 4) % static_cast<std::uint64_t>(t1.n));
        int v = static_cast<int>(mix_seed(si, 5) % static_cast<std::uint64_t>(t2.n));
        int t = 2 + static_cast<int>(mix_seed(si, 6) % 4);
        instances.push_back({"sym/rand" + std::to_string(i), std::move(t1), std::move(t2), u, v, t, 3});
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        const Instance& in = instances[i];
        LemmaReport rep = check_path_symmetry_lemma(in.t1, in.t2, in.u, in.v, in.t, in.r, local);
        CampaignResult out;
        out.add(lemma_row(in.id, rep.instance, 0.0, rep, s, false));
        return out;
    });
}

CampaignResult d_family_campaign(int max_m, int n_random, std::uint64_t seed,
                                 const HarnessSettings& s) {
    struct Params {
        int m, a, b, ell, r;
        std::string id;
    };
    std::vector<Params> items;
    for (int m = 1; m <= max_m; ++m)
        for (int ell = 1; ell <= m; ++ell)
            for (int a = 1; a <= m; ++a)
                for (int b = a + 2; static_cast<long long>(ell) * (a + b) <= m - 1; ++b)
                    items.push_back({m, a, b, ell, 3, ""});
    // degenerate one-junction central paths: only the status bound applies
    for (int ell = 1; ell <= 2; ++ell) {
        int m = 4 * ell;
        if (m <= std::max(max_m, 8)) items.push_back({m, 1, 3, ell, 3, ""});
    }
    for (int i = 0; i < n_random; ++i) {
        std::uint64_t si = mix_seed(seed ^ 0x5eedull, i);
        int a = 1 + static_cast<int>(si % 2);
        int b = a + 2 + static_cast<int>(mix_seed(si, 1) % 2);
        int ell = 1 + static_cast<int>(mix_seed(si, 2) % 3);
        int t = 2 + static_cast<int>(mix_seed(si, 3) % 5);
        int m = ell * (a + b) + t - 1;
        int r = 3 + static_cast<int>(mix_seed(si, 4) % 3);
        if (m > 14) {  // keep desk scale
            ell = 1;
            m = (a + b) + t - 1;
        }
        items.push_back({m, a, b, ell, r, "dfam/rand" + std::to_string(i)});
    }
    for (auto& p : items)
        if (p.id.empty())
            p.id = "dfam/m" + std::to_string(p.m) + "a" + std::to_string(p.a) + "b" +
                   std::to_string(p.b) + "l" + std::to_string(p.ell) + "r" + std::to_string(p.r);
    return run_rows(static_cast<int>(items.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        const Params& p = items[i];
        LemmaReport rep = check_D_family_lemmas(p.m, p.a, p.b, p.ell, p.r, local);
        CampaignResult out;
        for (const auto& c : rep.checks) {
            if (!c.applicable) {
                out.add({p.id + "/" + c.name, rep.instance, 0.0, 0.0, s.margin, "not-covered"});
            } else {
                out.add({p.id + "/" + c.name, rep.instance, 0.0, c.value, c.threshold,
                         c.pass ? "pass" : "fail"});
            }
        }
        return out;
    });
}

CampaignResult path_shift_campaign(int n_bases, int max_pq, std::uint64_t seed,
                                   const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph base;
        int v, r;
    };
    std::vector<Instance> instances;
    for (int i = 0; i < n_bases; ++i) {
        std::uint64_t si = mix_seed(seed ^ 0x9a7full, i);
        int r = (i % 2 == 0) ? 3 : 4;
        int nverts = 2 + static_cast<int>(si % 4);
        Hypergraph base = power_of_tree(random_tree(nverts, mix_seed(si, 1)), r).graph;
        int v = static_cast<int>(mix_seed(si, 2) % static_cast<std::uint64_t>(base.n));
        instances.push_back({"pshift/base" + std::to_string(i), std::move(base), v, r});
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        const Instance& in = instances[i];
        CampaignResult out;
        for (int total = 2; total <= max_pq; ++total) {
            // rho over the whole chain (p,q) = (total-q, q), q descending to 0
            std::vector<double> rho(total / 2 + 1, 0.0);
            double worst = std::numeric_limits<double>::infinity();
            for (int q = total / 2; q >= 0; --q)
                rho[q] = solve_checked(attach_pendant_paths(in.base, in.v, total - q, q, in.r),
                                       s.solver_tol)
                             .rho;
            double band = 0.0;
            for (int q = total / 2; q >= 1; --q) {
                worst = std::min(worst, rho[q - 1] - rho[q]);
                band = std::max(band, s.margin * rho[q - 1]);
            }
            out.add({in.id + "/s" + std::to_string(total), "r" + std::to_string(in.r), rho[0], worst,
                     s.margin, worst > band ? "pass" : "fail"});
        }
        return out;
    });
}

CampaignResult sigma_move_campaign(int n_instances, std::uint64_t seed, const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph graph;
        int u;
    };
    std::vector<Instance> instances;
    int found = 0;
    for (std::uint64_t attempt = 0; found < n_instances && attempt < 100ull * n_instances; ++attempt) {
        std::uint64_t si = mix_seed(seed ^ 0x51311ull, attempt);
        int nverts = 5 + static_cast<int>(si % 5);
        TreeSkeleton t = random_tree(nverts, mix_seed(si, 1));
        int u = -1;
        for (int v = 0; v < t.n; ++v)
            if (t.degree(v) >= 3) {
                u = v;
                break;
            }
        if (u < 0) continue;
        instances.push_back({"smove/rand" + std::to_string(found), power_of_tree(t, 3).graph, u});
        ++found;
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        const Instance& in = instances[i];
        BranchDecomposition dec = branches_at(in.graph, in.u);
        SpectralResult res = solve_checked(in.graph, s.solver_tol);
        // smallest-sigma branch receives the moved edges; largest stays put
        int lo = 0, hi = 0;
        std::vector<double> sig(dec.branches.size());
        for (size_t j = 0; j < dec.branches.size(); ++j) {
            sig[j] = sigma(res.perron, dec.branches[j].vertices);
            if (sig[j] < sig[lo]) lo = static_cast<int>(j);
            if (sig[j] > sig[hi]) hi = static_cast<int>(j);
        }
        if (hi == lo) hi = (lo + 1) % static_cast<int>(dec.branches.size());
        SigmaMove mv;
        mv.u = in.u;
        mv.v = -1;
        for (int v : dec.branches[lo].vertices)
            if (v != in.u) {
                mv.v = v;
                break;
            }
        for (size_t j = 0; j < dec.branches.size(); ++j)
            if (static_cast<int>(j) != lo && static_cast<int>(j) != hi)
                mv.branch_set.push_back(static_cast<int>(j));
        LemmaReport rep = check_monotone_moves(in.graph, mv, local);
        CampaignResult out;
        out.add(lemma_row(in.id, rep.instance, res.rho, rep, s, false));
        return out;
    });
}

CampaignResult clique_move_campaign(int n_instances, std::uint64_t seed, const HarnessSettings& s) {
    struct Instance {
        std::string id;
        Hypergraph graph;
        CliqueMove mv;
    };
    std::vector<Instance> instances;
    int found = 0;
    for (std::uint64_t attempt = 0; found < n_instances && attempt < 100ull * n_instances; ++attempt) {
        std::uint64_t si = mix_seed(seed ^ 0xc11caull, attempt);
        int nverts = 4 + static_cast<int>(si % 6);
        Hypergraph h = power_of_tree(random_tree(nverts, mix_seed(si, 1)), 3).graph;
        CliqueMove mv;
        for (int e = 0; e < h.edge_count() && mv.w1 < 0; ++e) {
            std::vector<int> junctions;
            for (int v : h.edges[e])
                if (h.degree(v) >= 2) junctions.push_back(v);
            if (junctions.size() == 2) {
                mv.w1 = junctions[0];
                mv.w2 = junctions[1];
            }
        }
        if (mv.w1 < 0) continue;
        instances.push_back({"merge/rand" + std::to_string(found), std::move(h), mv});
        ++found;
    }
    return run_rows(static_cast<int>(instances.size()), s, [&](int i) {
        HarnessSettings local = s;
        local.jobs = 1;
        const Instance& in = instances[i];
        LemmaReport rep = check_monotone_moves(in.graph, in.mv, local);
        CampaignResult out;
        out.add(lemma_row(in.id, rep.instance, 0.0, rep, s, false));
        return out;
    });
}

}  // namespace hypertree
