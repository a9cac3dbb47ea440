#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "hypertree/constructions.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/structure.hpp"

namespace hypertree {

// Numeric policy for every check. Strict inequalities must clear the
// decision margin (relative to rho); identities must land within the
// absolute identity tolerance; |difference| <= margin*rho counts as zero in
// sign comparisons. Checks solve eigenpairs at solver_tol (relative), which
// is kept well below the identity tolerance so residual bounds are
// meaningful.
struct HarnessSettings {
    double solver_tol = 1e-12;
    double margin = 1e-9;          // decision margin / zero band, relative to rho
    double identity_tol = 1e-9;    // absolute bound on identity residuals
    int jobs = 1;
};

// Counts every eigensolve done through the harness along with violations of
// the two global sanity conditions: rho(G) >= s(G) and the residual
// contract of the solver.
struct SanityCounters {
    std::atomic<long> solves{0};
    std::atomic<long> status_violations{0};
    std::atomic<long> residual_violations{0};
};

SanityCounters& sanity_counters();

// Eigensolve that feeds the global sanity counters.
SpectralResult solve_checked(const Hypergraph& g, double tol);

// ---------------------------------------------------------------------------
// Reports

struct LemmaCheck {
    std::string name;
    std::string kind;        // "identity" | "band" | "strict" | "skipped"
    bool applicable = true;
    bool pass = false;
    double value = 0.0;      // residual (identity/band) or margin (strict)
    double threshold = 0.0;  // bound the value was compared against
    std::string note;
};

struct LemmaReport {
    std::string lemma;
    std::string instance;
    std::vector<LemmaCheck> checks;
    int configurations = 0;  // size of an auto-discovered configuration scan

    bool passed() const;
    double max_identity_residual() const;  // over identity checks, 0 if none
    double min_strict_margin() const;      // over applicable strict checks, +inf if none
};

struct ExtremalMember {
    CanonicalCode code;
    double rho = 0.0;
};

struct ExtremalVerdict {
    std::string item;  // "max:path", "max:D-balanced", "max:D(1,2)", "max:pendant-edge-class", "min:S"
    CanonicalCode predicted;
    std::string status;  // "pass" | "fail" | "inconclusive" | "not-covered"
};

struct ExtremalReport {
    ClassDescriptor desc;
    std::vector<ExtremalMember> members;  // sorted by canonical code
    CanonicalCode argmax, argmin;
    double rho_max = 0.0, rho_min = 0.0;
    double margin_max = 0.0, margin_min = 0.0;  // gap to the runner-up; 0 if single member
    std::vector<ExtremalVerdict> verdicts;

    bool passed() const;  // no verdict failed or was inconclusive
};

// ---------------------------------------------------------------------------
// Per-instance checks

enum class ExtremalMode { max, min, both };

// Exhaustive rho over the class with argmax/argmin compared against the
// predicted extremal structures; the preconditions of each extremal
// statement are evaluated mechanically and items outside them are reported
// "not-covered". Throws std::domain_error when the class is empty.
ExtremalReport verify_extremal(const ClassDescriptor& c, ExtremalMode mode,
                               const HarnessSettings& s = {});

struct TwoEdgeConfig {
    int e1 = -1, e2 = -1;
    int u1 = -1, v1 = -1, u2 = -1, v2 = -1;
    int w1 = -1, w2 = -1;  // optional; lowest-index fillers when absent
};

// Residuals of the two-edge Perron identities, on one supplied
// configuration or on every configuration discovered by scanning ordered
// edge pairs and vertex choices that meet the distance (and, for the
// filler identities, degree) preconditions.
LemmaReport check_two_edge_identities(const Hypergraph& t, const HarnessSettings& s = {});
LemmaReport check_two_edge_identities(const Hypergraph& t, const TwoEdgeConfig& cfg,
                                      const HarnessSettings& s = {});

// Sign agreement along two disjoint equal-length pendant paths, plus the
// strict difference chains when the anchor entries separate beyond the
// zero band.
LemmaReport check_pendant_sign_lemma(const Hypergraph& t, const PendantPath& p1,
                                     const PendantPath& p2, const HarnessSettings& s = {});

// Joins t1 at u to t2 at v through a fresh r-uniform path with path_t - 1
// edges and checks the palindrome equalities (balanced sides) or the strict
// orderings and decreasing difference chains (unbalanced sides).
LemmaReport check_path_symmetry_lemma(const Hypergraph& t1, const Hypergraph& t2, int u, int v,
                                      int path_t, int r, const HarnessSettings& s = {});

// On D_{r,ell}(m,a,b) with b >= a+2: the end-entry sign, the decreasing
// difference chains, the status lower bound on rho, and the strict rho
// increase from balancing (a,b) toward (a+1,b-1). ell*(a+b) == m (a
// degenerate one-junction central path) is allowed; only the status bound
// applies there.
LemmaReport check_D_family_lemmas(int m, int a, int b, int ell, int r,
                                  const HarnessSettings& s = {});

struct PathShiftMove {
    int v = 0;
    int p = 1, q = 1;  // compares (p,q) against (p+1,q-1); needs p >= q >= 1
};

struct SigmaMove {
    int u = -1;                    // vertex with at least three branches
    int v = -1;                    // target vertex in another branch
    std::vector<int> branch_set;   // indices (at u) of the branches to move
};

struct CliqueMove {
    int w1 = -1, w2 = -1;  // adjacent; all non-shared edges at w2 move to w1
};

LemmaReport check_monotone_moves(const Hypergraph& g, const PathShiftMove& mv, int r,
                                 const HarnessSettings& s = {});
LemmaReport check_monotone_moves(const Hypergraph& g, const SigmaMove& mv,
                                 const HarnessSettings& s = {});
LemmaReport check_monotone_moves(const Hypergraph& g, const CliqueMove& mv,
                                 const HarnessSettings& s = {});

// ---------------------------------------------------------------------------
// Campaigns: deterministic batches of checks, one row per class or lemma
// instance. Rows are byte-stable for a fixed configuration, independent of
// the job count.

struct CampaignRow {
    std::string id;
    std::string code;      // canonical code or instance tag
    double rho = 0.0;
    double margin = 0.0;   // min strict margin, or max residual for identity rows
    double tolerance = 0.0;
    std::string verdict;   // "pass" | "fail" | "not-covered" | ...
};

struct CampaignResult {
    std::vector<CampaignRow> rows;
    long configurations = 0;
    bool all_pass = true;

    void add(CampaignRow row);
    void merge(const CampaignResult& other);
};

std::string to_csv(const CampaignResult& c);
std::string to_json(const CampaignResult& c);
std::string to_json(const ExtremalReport& r);
std::string to_json(const LemmaReport& r);

// Extremal grids: every class the corresponding statement covers, up to
// max_m edges.
CampaignResult extremal_grid_max_path(int max_m, int r, const HarnessSettings& s = {});
CampaignResult extremal_grid_max_balanced(int max_m, int r, const HarnessSettings& s = {});
CampaignResult extremal_grid_max_single(int max_m, int r, const HarnessSettings& s = {});
CampaignResult extremal_grid_min_star(int max_m, int r, const HarnessSettings& s = {});
CampaignResult extremal_grid_corollary(int max_m, int r, const HarnessSettings& s = {});

// Identity residuals over every power hypertree with at most max_m edges
// plus seeded random instances with at most max_random_m edges.
CampaignResult identity_campaign(int max_m, int r, int n_random, int max_random_m,
                                 std::uint64_t seed, const HarnessSettings& s = {});

// Sign/ordering checks on the D family grid plus seeded random hypertrees
// that own two disjoint equal-length pendant paths.
CampaignResult pendant_sign_campaign(int max_m, int r, int n_random, std::uint64_t seed,
                                     const HarnessSettings& s = {});

// Palindrome/ordering checks for joined hypertrees: a symmetric and an
// asymmetric construction grid plus seeded random joins.
CampaignResult path_symmetry_campaign(int n_random, std::uint64_t seed,
                                      const HarnessSettings& s = {});

// End-entry sign, chains, status bound and balancing on every admissible
// (m <= max_m, ell, a, b >= a+2) at r = 3, degenerate one-junction cases,
// and seeded random parameter tuples.
CampaignResult d_family_campaign(int max_m, int n_random, std::uint64_t seed,
                                 const HarnessSettings& s = {});

// Full (p,q) sweeps of the path-shift comparison on seeded base hypergraphs.
CampaignResult path_shift_campaign(int n_bases, int max_pq, std::uint64_t seed,
                                   const HarnessSettings& s = {});

CampaignResult sigma_move_campaign(int n_instances, std::uint64_t seed,
                                   const HarnessSettings& s = {});
CampaignResult clique_move_campaign(int n_instances, std::uint64_t seed,
                                    const HarnessSettings& s = {});

}  // namespace hypertree
