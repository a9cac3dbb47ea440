// Command-line front end: construct the named hypertree families, compute
// distance spectral data, list pendant paths, enumerate classes, and run the
// verification campaigns. All output is deterministic for a fixed
// configuration, including under --jobs > 1.
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 invalid
// input or parameters.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypertree/constructions.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/json_io.hpp"
#include "hypertree/parallel.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/structure.hpp"
#include "hypertree/verify.hpp"

namespace {

using namespace hypertree;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content << "\n";
    } else {
        write_file(out_path, content);
    }
}

TreeSkeleton tree_from_file(const std::string& path) {
    Hypergraph h = hypergraph_from_file(path);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : h.edges) {
        if (e.size() != 2)
            throw std::invalid_argument("a tree file must contain only 2-vertex edges");
        edges.emplace_back(e[0], e[1]);
    }
    return TreeSkeleton::from_edges(h.n, std::move(edges));
}

std::string class_listing_json(const ClassDescriptor& c, bool filter_k, double tol, int jobs) {
    std::vector<ClassMember> members;
    for (TreeSkeleton& t : enumerate_free_trees(c.m + 1)) {
        Hypergraph h = power_of_tree(t, c.r).graph;
        int k = count_pendant_paths(h, c.ell).count();
        if (filter_k && k != c.k) continue;
        ClassMember mem;
        mem.code = canonical_code(t);
        mem.tree = std::move(t);
        mem.graph = std::move(h);
        members.push_back(std::move(mem));
    }
    std::vector<std::string> rows(members.size());
    parallel_for(static_cast<int>(members.size()), jobs, [&](int i) {
        SpectralResult res = solve_checked(members[i].graph, tol);
        int k = count_pendant_paths(members[i].graph, c.ell).count();
        rows[i] = "{\"code\":\"" + members[i].code + "\",\"m\":" + std::to_string(c.m) +
                  ",\"k\":" + std::to_string(k) + ",\"rho\":" + fmt_double(res.rho) + "}";
    });
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += rows[i];
    }
    return out + "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance spectral radius toolkit for uniform hypertrees"};
    app.require_subcommand(1);

    // shared options
    double tol = 1e-10;
    double margin = 1e-9;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string format = "json";
    std::string out_path;
    app.add_option("--tol", tol, "eigensolver relative tolerance")->envname("HYPERTREE_TOL");
    app.add_option("--margin", margin, "decision margin for strict checks")->envname("HYPERTREE_MARGIN");
    app.add_option("--seed", seed, "seed for randomized campaigns")->envname("HYPERTREE_SEED");
    app.add_option("--jobs", jobs, "worker threads for campaigns")->envname("HYPERTREE_JOBS");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // construct -----------------------------------------------------------
    // shared options may follow any subcommand
    auto* construct = app.add_subcommand("construct", "emit a named hypertree as JSON");
    construct->fallthrough();
    std::string family;
    int m = 0, r = 3, ell = 1, k = 1, a = 1, b = 1;
    std::string in_path;
    construct->add_option("family", family, "path | D | S | power")->required();
    construct->add_option("--m", m, "edge count");
    construct->add_option("--r", r, "edge size (uniformity)");
    construct->add_option("--ell", ell, "pendant path length");
    construct->add_option("--k", k, "pendant path count");
    construct->add_option("--a", a, "paths at the first end");
    construct->add_option("--b", b, "paths at the last end");
    construct->add_option("--in", in_path, "tree file for the power construction");

    // rho -----------------------------------------------------------------
    auto* rho_cmd = app.add_subcommand("rho", "dominant distance eigenpair of a hypergraph file");
    rho_cmd->fallthrough();
    std::string rho_in;
    rho_cmd->add_option("--in", rho_in, "hypergraph JSON file")->required();

    // pendant -------------------------------------------------------------
    auto* pendant = app.add_subcommand("pendant", "pendant paths of a given length");
    pendant->fallthrough();
    std::string pendant_in;
    int pendant_ell = 1;
    pendant->add_option("--in", pendant_in, "hypergraph JSON file")->required();
    pendant->add_option("--ell", pendant_ell, "path length")->required();

    // enumerate -----------------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "list a power hypertree class with rho");
    enumerate->fallthrough();
    int en_m = 0, en_r = 3, en_ell = 1, en_k = 0;
    enumerate->add_option("--m", en_m, "edge count")->required();
    enumerate->add_option("--r", en_r, "uniformity");
    enumerate->add_option("--ell", en_ell, "pendant path length")->required();
    auto* en_k_opt = enumerate->add_option("--k", en_k, "filter to classes with exactly k paths");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "verification campaigns");
    verify->fallthrough();
    verify->require_subcommand(1);
    double vtol = 1e-12;
    verify->add_option("--tol", vtol, "eigensolver tolerance for verification solves");

    auto* vtheorem = verify->add_subcommand("theorem", "extremal check for one class");
    vtheorem->fallthrough();
    int th_m = 0, th_r = 3, th_ell = 1, th_k = 1;
    std::string th_mode = "both";
    vtheorem->add_option("--m", th_m)->required();
    vtheorem->add_option("--r", th_r);
    vtheorem->add_option("--ell", th_ell)->required();
    vtheorem->add_option("--k", th_k)->required();
    vtheorem->add_option("--mode", th_mode)->check(CLI::IsMember({"max", "min", "both"}));

    auto* vgrids = verify->add_subcommand("grids", "every extremal grid up to --max-m");
    vgrids->fallthrough();
    int gr_max_m = 8, gr_r = 3, gr_cor_m = 7;
    vgrids->add_option("--max-m", gr_max_m);
    vgrids->add_option("--r", gr_r);
    vgrids->add_option("--max-m-pendant-edges", gr_cor_m);

    auto* vident = verify->add_subcommand("identities", "two-edge identity campaign");
    vident->fallthrough();
    int id_max_m = 6, id_r = 3, id_random = 200, id_rand_m = 10;
    vident->add_option("--max-m", id_max_m);
    vident->add_option("--r", id_r);
    vident->add_option("--random", id_random);
    vident->add_option("--max-random-m", id_rand_m);

    auto* vperron = verify->add_subcommand("perron", "sign, symmetry and end-balance campaigns");
    vperron->fallthrough();
    int pe_max_m = 8, pe_d_max_m = 9, pe_random = 100;
    vperron->add_option("--max-m", pe_max_m);
    vperron->add_option("--max-m-dfamily", pe_d_max_m);
    vperron->add_option("--random", pe_random);

    auto* vmono = verify->add_subcommand("monotone", "path-shift and edge-move campaigns");
    vmono->fallthrough();
    int mo_bases = 20, mo_max_pq = 6, mo_random = 100;
    vmono->add_option("--bases", mo_bases);
    vmono->add_option("--max-pq", mo_max_pq);
    vmono->add_option("--random", mo_random);

    auto* vall = verify->add_subcommand("all", "every campaign with its default grid");
    vall->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) {
            LabeledHypergraph built;
            if (family == "path") {
                built = loose_path(m, r);
            } else if (family == "D") {
                built = construct_D(m, a, b, ell, r);
            } else if (family == "S") {
                built = construct_S(m, k, ell, r);
            } else if (family == "power") {
                if (in_path.empty())
                    throw std::invalid_argument("construct power needs --in <tree file>");
                built = power_of_tree(tree_from_file(in_path), r);
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            emit(to_json(built.graph), out_path);
            return 0;
        }
        if (*rho_cmd) {
            emit(to_json(spectral_radius(hypergraph_from_file(rho_in), tol)), out_path);
            return 0;
        }
        if (*pendant) {
            emit(to_json(count_pendant_paths(hypergraph_from_file(pendant_in), pendant_ell)),
                 out_path);
            return 0;
        }
        if (*enumerate) {
            ClassDescriptor c{en_m, en_r, en_ell, en_k};
            emit(class_listing_json(c, !en_k_opt->empty(), tol, jobs), out_path);
            return 0;
        }
        if (*verify) {
            HarnessSettings settings{vtol, margin, 1e-9, jobs};
            if (*vtheorem) {
                ExtremalMode mode = th_mode == "max"   ? ExtremalMode::max
                                    : th_mode == "min" ? ExtremalMode::min
                                                       : ExtremalMode::both;
                ExtremalReport rep = verify_extremal({th_m, th_r, th_ell, th_k}, mode, settings);
                emit(to_json(rep), out_path);
                return rep.passed() ? 0 : 1;
            }
            CampaignResult result;
            if (*vgrids || *vall) {
                result.merge(extremal_grid_max_path(gr_max_m, gr_r, settings));
                result.merge(extremal_grid_max_balanced(gr_max_m, gr_r, settings));
                result.merge(extremal_grid_max_single(gr_max_m, gr_r, settings));
                result.merge(extremal_grid_min_star(gr_max_m, gr_r, settings));
                result.merge(extremal_grid_corollary(gr_cor_m, gr_r, settings));
            }
            if (*vident || *vall)
                result.merge(identity_campaign(id_max_m, id_r, id_random, id_rand_m, seed, settings));
            if (*vperron || *vall) {
                result.merge(pendant_sign_campaign(pe_max_m, 3, pe_random, seed, settings));
                result.merge(path_symmetry_campaign(pe_random, seed, settings));
                result.merge(d_family_campaign(pe_d_max_m, pe_random, seed, settings));
            }
            if (*vmono || *vall) {
                result.merge(path_shift_campaign(mo_bases, mo_max_pq, seed, settings));
                result.merge(sigma_move_campaign(mo_random, seed, settings));
                result.merge(clique_move_campaign(mo_random, seed, settings));
            }
            emit(format == "csv" ? to_csv(result) : to_json(result), out_path);
            return result.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
