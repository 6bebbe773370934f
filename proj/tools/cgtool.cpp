// Command-line front end: planes, presentations, subgroup algorithms,
// p-quotients, ramification structures, surface invariants, the appendix
// representation checks, and the bundled end-to-end scenarios.
//
// Exit codes: 0 success, 2 verification failure, 3 budget/cap refusal,
// 4 missing external data, 1 other errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "cgt/abelian.hpp"
#include "cgt/catalog.hpp"
#include "cgt/cosets.hpp"
#include "cgt/diffset.hpp"
#include "cgt/fingerprint.hpp"
#include "cgt/howie.hpp"
#include "cgt/plane.hpp"
#include "cgt/polyhedral.hpp"
#include "cgt/pquotient.hpp"
#include "cgt/ramification.hpp"
#include "cgt/repcheck.hpp"
#include "cgt/report.hpp"
#include "cgt/schreier.hpp"
#include "cgt/stargraph.hpp"
#include "cgt/surfaces.hpp"
#include "cgt/textfmt.hpp"

using namespace cgt;
using nlohmann::json;

namespace {

struct Common {
    std::string data_dir = "data";
    std::string convention = "right";
    std::string output = "-";

    ConjConvention cc() const {
        return convention == "left" ? ConjConvention::LeftAction : ConjConvention::RightAction;
    }
    Catalog catalog() const { return Catalog(data_dir, cc()); }
};

std::vector<long> parse_type(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c != ' ') {
            throw domain_error("bad type list: " + s);
        }
    }
    if (out.empty()) throw domain_error("empty type list");
    return out;
}

std::vector<int> parse_residues(const std::string& s) {
    std::vector<int> out;
    for (long v : parse_type(s)) out.push_back(int(v));
    return out;
}

Presentation load_group(const Common& common, const std::string& name, const std::string& file) {
    if (!file.empty()) return load_presentation_file(file, common.cc()).presentation;
    if (name.empty()) throw domain_error("need --name or --file");
    return common.catalog().presentation(name);
}

// Quotient of the index-3 subgroup together with the images of x0, x1, x2.
struct Index3Data {
    PcGroup pc;
    std::vector<PcElement> xyz;
};

Index3Data index3_quotient(const Common& common, int k) {
    Catalog cat = common.catalog();
    auto table = coset_enumerate(cat.subgroup("H"));
    auto sub = reidemeister_schreier(table);
    auto q = p_quotient(sub.simplified, 3, k);
    std::vector<PcElement> xyz;
    for (int i = 0; i < 3; ++i)
        xyz.push_back(q.pc.eval_word(sub.rewrite(Word::gen(i)), q.images));
    return {std::move(q.pc), std::move(xyz)};
}

int run_reproduce(const Common& common, const std::string& scenario, int max_class) {
    json config{{"scenario", scenario}, {"convention", common.convention}};
    json doc = report_skeleton("reproduce", config);
    json& res = doc["results"];
    bool verified = true;

    if (scenario == "thm-main-k2") {
        auto data = index3_quotient(common, 2);
        res["order_exponent"] = data.pc.order_exponent();
        verified = verified && data.pc.order_exponent() == 6;
        std::string used;
        std::optional<RamificationStructure> rs;
        for (auto cc : {common.cc(), common.cc() == ConjConvention::RightAction
                                         ? ConjConvention::LeftAction
                                         : ConjConvention::RightAction}) {
            auto [t1, t2] = paper_tuples("thm-main", data.pc, data.xyz, cc);
            rs = verify_structure(data.pc, t1, t2);
            if (rs) {
                used = cc == ConjConvention::RightAction ? "right" : "left";
                break;
            }
        }
        res["convention_used"] = used;
        if (!rs) {
            res["verified"] = false;
            verified = false;
        } else {
            res["verified"] = true;
            res["structure"] = structure_json(data.pc, *rs, {"x0", "x1", "x2", "x"},
                                              {"y0", "y1", "y2", "y"});
            verified = verified && rs->type1 == std::vector<long>{3, 3, 3, 3} &&
                       rs->type2 == std::vector<long>{3, 3, 3, 3};
            auto surf = surface_invariants(729, rs->type1, rs->type2);
            res["surface"] = to_json(surf);
            verified = verified && surf.genus1 == 244 && surf.chi == 81;
        }
    } else if (scenario == "heawood") {
        Catalog cat = common.catalog();
        Graph sg = star_graph(cat.presentation("G0"));
        auto plane = plane_from_difference_set(DifferenceSet{7, {1, 2, 4}});
        Graph ig = incidence_graph(plane);
        auto witness = graph_isomorphism(sg, ig);
        res["star_graph"] = to_json(sg);
        res["isomorphic"] = witness.has_value();
        if (witness) res["witness"] = *witness;
        verified = witness.has_value();
    } else if (scenario == "beauville-7") {
        Catalog cat = common.catalog();
        auto q = p_quotient(cat.presentation("C7xC7"), 7, 1);
        SearchOptions opt;
        opt.max_results = 4;
        auto found = search_structures(q.pc, {7, 7, 7}, {7, 7, 7}, opt);
        res["structures_found"] = found.structures.size();
        verified = !found.structures.empty();
        if (verified) {
            res["structure"] = structure_json(q.pc, found.structures[0]);
            auto surf =
                surface_invariants(49, found.structures[0].type1, found.structures[0].type2);
            res["surface"] = to_json(surf);
            verified = verified && surf.genus1 == 15 && surf.genus2 == 15 && surf.chi == 4 &&
                       surf.euler == 16 && surf.ksq == 32;
        }
    } else if (scenario == "gk-vs-g0") {
        Catalog cat = common.catalog();
        auto g0 = cat.presentation("G0");
        auto gk = cat.presentation("GK");
        json list = json::array();
        for (int k = 1; k <= max_class; ++k) {
            auto f1 = fingerprint(p_quotient(g0, 2, k).pc);
            auto f2 = fingerprint(p_quotient(gk, 2, k).pc);
            bool equal = f1 == f2;
            list.push_back(json{{"class", k},
                                {"fingerprint_g0", to_json(f1)},
                                {"fingerprint_gk", to_json(f2)},
                                {"equal", equal}});
            verified = verified && equal;
        }
        res["fingerprints"] = list;
    } else if (scenario == "appendix") {
        auto rm = load_appendix_matrices(common.data_dir + "/matrices/appendix.json");
        auto rep = verify_representation(rm);
        res["repcheck"] = to_json(rep);
        verified = rep.all_pass();
    } else {
        throw domain_error("unknown scenario: " + scenario +
                           " (known: thm-main-k2, heawood, beauville-7, gk-vs-g0, appendix)");
    }
    res["all_verified"] = verified;
    write_report(doc, common.output);
    return verified ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational pipeline from finite projective planes to surface invariants"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Common common;
    app.add_option("--data-dir", common.data_dir, "data directory (presentations, matrices)");
    app.add_option("--convention", common.convention,
                   "conjugation convention: right (g^h = h^-1 g h) or left")
        ->check(CLI::IsMember({"right", "left"}));
    app.add_option("-o,--output", common.output, "report path, - for stdout");

    // plane
    auto* plane = app.add_subcommand("plane", "difference sets, incidence structures, isomorphism");
    int plane_q = 0;
    std::string plane_set, plane_iso_set;
    int plane_mod = 0;
    bool plane_graph = false;
    plane->add_option("--q", plane_q, "prime power: build the Singer difference set");
    plane->add_option("--set", plane_set, "residue list, e.g. 1,2,4");
    plane->add_option("--mod", plane_mod, "modulus for --set");
    plane->add_flag("--graph", plane_graph, "include the incidence graph");
    plane->add_option("--iso-with", plane_iso_set, "second residue list: test plane isomorphism");

    // present
    auto* present = app.add_subcommand("present", "presentations, star graphs, polyhedral data");
    std::string pr_name, pr_file, pr_polyhedral;
    int pr_star_q = -1;
    bool pr_serialize = false, pr_validate = false;
    present->add_option("--name", pr_name, "catalog name (G0, G, Ghat, GK, GK-poly, ...)");
    present->add_option("--file", pr_file, "presentation text file");
    int pr_howie_q = 0;
    std::string pr_howie_set;
    present->add_option("--howie-q", pr_howie_q,
                        "build the plane presentation for this prime power (deduped)");
    present->add_option("--howie-set", pr_howie_set,
                        "residue list for --howie-q (default: the Singer set)");
    present->add_option("--star-check", pr_star_q, "check the star graph against PG(2,q)");
    present->add_flag("--serialize", pr_serialize, "emit the text format");
    present->add_option("--polyhedral", pr_polyhedral,
                        "polyhedral data: triangle-q2, order4, order4-verbatim");
    present->add_flag("--validate", pr_validate, "fail (exit 2) when polyhedral data is invalid");

    // subgroup
    auto* subgroup =
        app.add_subcommand("subgroup", "coset enumeration, rewriting, abelianization");
    std::string sg_name;
    long sg_max_cosets = 100000;
    bool sg_abelianize = false, sg_rewrite = false;
    subgroup->add_option("--name", sg_name, "catalog subgroup (H0, H, H2, H4, H5, F5)")
        ->required();
    subgroup->add_option("--max-cosets", sg_max_cosets, "enumeration budget");
    subgroup->add_flag("--abelianize", sg_abelianize, "abelianize the rewritten presentation");
    subgroup->add_flag("--rewrite", sg_rewrite, "emit the rewritten presentation");

    // pquotient
    auto* pq = app.add_subcommand("pquotient", "maximal p-quotients of p-class k");
    std::string pq_group, pq_file, pq_subgroup;
    int pq_p = 2, pq_k = 1;
    bool pq_fingerprint = false, pq_snapshot = false, pq_full = false;
    pq->add_option("--group", pq_group, "catalog presentation name");
    pq->add_option("--file", pq_file, "presentation text file");
    pq->add_option("--subgroup", pq_subgroup,
                   "catalog subgroup: quotient of its rewritten presentation");
    pq->add_option("-p", pq_p, "prime")->required();
    pq->add_option("-k", pq_k, "class bound")->required();
    int pq_class_limit = 8;
    pq->add_option("--class-limit", pq_class_limit, "raise the configured class bound");
    pq->add_flag("--fingerprint", pq_fingerprint, "include the invariant fingerprint");
    pq->add_flag("--snapshot", pq_snapshot, "include the full pc presentation");
    pq->add_flag("--full-consistency", pq_full, "debug mode: no weight filter");

    // ramify
    auto* ramify = app.add_subcommand("ramify", "verify or search unmixed ramification structures");
    std::string rm_tuples, rm_type1, rm_type2, rm_strategy = "exhaustive", rm_group, rm_file;
    int rm_p = 3, rm_k = 2;
    std::uint64_t rm_seed = 1;
    long rm_budget = 1000000, rm_max_results = 8, rm_max_candidates = 2000;
    int rm_workers = 0;
    ramify->add_option("--tuples", rm_tuples, "verify bundled tuples: thm-main or T2-pair");
    ramify->add_option("--group", rm_group, "catalog presentation for search / T2-pair");
    ramify->add_option("--file", rm_file, "presentation file for search");
    ramify->add_option("-p", rm_p, "prime");
    ramify->add_option("-k", rm_k, "class");
    ramify->add_option("--type1", rm_type1, "first type, e.g. 3,3,3,3");
    ramify->add_option("--type2", rm_type2, "second type");
    ramify->add_option("--strategy", rm_strategy, "exhaustive or randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    ramify->add_option("--seed", rm_seed, "seed for the randomized strategy");
    ramify->add_option("--budget", rm_budget, "search budget");
    ramify->add_option("--max-results", rm_max_results, "stop after this many structures");
    ramify->add_option("--max-candidates", rm_max_candidates, "per-side tuple cap");
    ramify->add_option("--workers", rm_workers, "parallel workers (0 = hardware)");

    // surface
    auto* surface = app.add_subcommand("surface", "numerical invariants from |G| and types");
    std::int64_t sf_order = 0;
    std::string sf_type1, sf_type2;
    surface->add_option("--order", sf_order, "group order")->required();
    surface->add_option("--type1", sf_type1, "first type")->required();
    surface->add_option("--type2", sf_type2, "second type")->required();

    // repcheck
    auto* rep = app.add_subcommand("repcheck", "verify the bundled matrix representation");
    std::string rep_matrices;
    rep->add_option("--matrices", rep_matrices, "matrix data file (default from data dir)");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "bundled end-to-end scenarios");
    std::string rp_name;
    int rp_max_class = 6;
    reproduce
        ->add_option("scenario", rp_name, "thm-main-k2, heawood, beauville-7, gk-vs-g0, appendix")
        ->required();
    reproduce->add_option("--max-class", rp_max_class, "class range for gk-vs-g0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(plane)) {
            json config{{"q", plane_q}, {"set", plane_set}, {"mod", plane_mod}};
            json doc = report_skeleton("plane", config);
            json& res = doc["results"];
            DifferenceSet d;
            if (plane_q > 0) {
                d = singer_difference_set(plane_q);
            } else {
                if (plane_set.empty() || plane_mod == 0)
                    throw domain_error("need --q or --set with --mod");
                d = DifferenceSet{plane_mod, parse_residues(plane_set)};
            }
            res["difference_set"] = to_json(d);
            auto chk = is_perfect_difference_set(d.residues, d.m);
            res["perfect"] = to_json(chk);
            int exit_code = 0;
            if (chk.perfect) {
                auto pl = plane_from_difference_set(d);
                res["plane"] = to_json(pl);
                res["axioms_valid"] = check_plane_axioms(pl).valid;
                if (plane_graph) res["incidence_graph"] = to_json(incidence_graph(pl));
                if (!plane_iso_set.empty()) {
                    DifferenceSet d2{d.m, parse_residues(plane_iso_set)};
                    auto other = incidence_graph(plane_from_difference_set(d2));
                    auto w = graph_isomorphism(incidence_graph(pl), other);
                    res["isomorphic"] = w.has_value();
                    if (w) res["witness"] = *w;
                    if (!w) exit_code = 2;
                }
            } else {
                exit_code = 2;
            }
            write_report(doc, common.output);
            return exit_code;
        }

        if (app.got_subcommand(present)) {
            json config{{"name", pr_name}, {"file", pr_file}, {"polyhedral", pr_polyhedral}};
            json doc = report_skeleton("present", config);
            json& res = doc["results"];
            int exit_code = 0;
            if (!pr_polyhedral.empty()) {
                PolyhedralPresentation pp;
                if (pr_polyhedral == "triangle-q2")
                    pp = Catalog::triangle_q2();
                else if (pr_polyhedral == "order4")
                    pp = Catalog::polyhedral_q4(true);
                else if (pr_polyhedral == "order4-verbatim")
                    pp = Catalog::polyhedral_q4(false);
                else
                    throw domain_error("unknown polyhedral data: " + pr_polyhedral);
                auto vrep = polyhedral_validate(pp);
                res["valid"] = vrep.valid;
                json viols = json::array();
                for (const auto& v : vrep.violations)
                    viols.push_back(json{{"kind", v.kind}, {"detail", v.detail}});
                res["violations"] = viols;
                if (vrep.valid) {
                    auto prs = polyhedral_to_presentation(pp);
                    res["presentation"] = serialize_presentation(prs);
                }
                if (pr_validate && !vrep.valid) exit_code = 2;
            } else {
                Presentation p;
                if (pr_howie_q >= 2) {
                    DifferenceSet d = pr_howie_set.empty()
                                          ? singer_difference_set(pr_howie_q)
                                          : DifferenceSet{pr_howie_q * pr_howie_q + pr_howie_q + 1,
                                                          parse_residues(pr_howie_set)};
                    p = howie_presentation_deduped(pr_howie_q, d);
                    res["difference_set"] = to_json(d);
                } else {
                    p = load_group(common, pr_name, pr_file);
                }
                res["generators"] = p.generators.size();
                res["relators"] = p.relators.size();
                res["provenance"] = p.provenance;
                res["abelianization"] = to_json(abelianization(p));
                if (pr_serialize) res["text"] = serialize_presentation(p);
                if (pr_star_q >= 2) {
                    Graph sg = star_graph(p);
                    auto ig =
                        incidence_graph(plane_from_difference_set(singer_difference_set(pr_star_q)));
                    auto w = graph_isomorphism(sg, ig);
                    res["star_graph_vertices"] = sg.vertex_count();
                    res["star_matches_plane"] = w.has_value();
                    if (w) res["witness"] = *w;
                    if (!w) exit_code = 2;
                }
            }
            write_report(doc, common.output);
            return exit_code;
        }

        if (app.got_subcommand(subgroup)) {
            json config{{"name", sg_name}, {"max_cosets", sg_max_cosets}};
            json doc = report_skeleton("subgroup", config);
            json& res = doc["results"];
            Catalog cat = common.catalog();
            auto spec = cat.subgroup(sg_name);
            auto table = coset_enumerate(spec, sg_max_cosets);
            res["index"] = table.index();
            auto sub = reidemeister_schreier(table);
            res["schreier_generators"] = sub.raw.generators.size();
            res["simplified_generators"] = sub.simplified.generators.size();
            if (sg_abelianize) {
                res["abelianization_raw"] = to_json(abelianization(sub.raw));
                res["abelianization"] = to_json(abelianization(sub.simplified));
            }
            if (sg_rewrite) res["presentation"] = serialize_presentation(sub.simplified);
            write_report(doc, common.output);
            return 0;
        }

        if (app.got_subcommand(pq)) {
            json config{{"group", pq_group},
                        {"file", pq_file},
                        {"subgroup", pq_subgroup},
                        {"p", pq_p},
                        {"k", pq_k}};
            json doc = report_skeleton("pquotient", config);
            json& res = doc["results"];
            Presentation p;
            if (!pq_subgroup.empty()) {
                Catalog cat = common.catalog();
                auto table = coset_enumerate(cat.subgroup(pq_subgroup));
                p = reidemeister_schreier(table).simplified;
            } else {
                p = load_group(common, pq_group, pq_file);
            }
            PQuotientOptions opt;
            opt.full_consistency = pq_full;
            opt.max_class = std::max(pq_class_limit, pq_k > pq_class_limit ? pq_class_limit : pq_k);
            opt.max_class = pq_class_limit;
            auto q = p_quotient(p, pq_p, pq_k, opt);
            res["order_exponent"] = q.pc.order_exponent();
            res["class"] = q.pc.pclass();
            res["layer_sizes"] = q.pc.layer_sizes();
            res["stabilized_at"] = q.stabilized_at;
            res["provenance"] = p.provenance;
            if (pq_fingerprint) res["fingerprint"] = to_json(fingerprint(q.pc));
            if (pq_snapshot) res["pc_presentation"] = pc_group_json(q.pc);
            write_report(doc, common.output);
            return 0;
        }

        if (app.got_subcommand(ramify)) {
            json config{{"tuples", rm_tuples},     {"group", rm_group},
                        {"p", rm_p},               {"k", rm_k},
                        {"type1", rm_type1},       {"type2", rm_type2},
                        {"strategy", rm_strategy}, {"seed", rm_seed},
                        {"budget", rm_budget},     {"convention", common.convention}};
            json doc = report_skeleton("ramify", config);
            json& res = doc["results"];
            int exit_code = 0;
            if (rm_tuples == "thm-main") {
                auto data = index3_quotient(common, rm_k);
                res["order_exponent"] = data.pc.order_exponent();
                auto [t1, t2] = paper_tuples("thm-main", data.pc, data.xyz, common.cc());
                res["type1"] = system_type(data.pc, t1);
                res["type2"] = system_type(data.pc, t2);
                auto cert = disjoint_systems(data.pc, t1, t2);
                res["certificate"] = to_json(cert);
                bool ok = cert.disjoint && is_spherical_system(data.pc, t1).ok &&
                          is_spherical_system(data.pc, t2).ok;
                res["verified"] = ok;
                if (!ok) exit_code = 2;
            } else if (rm_tuples == "T2-pair") {
                Catalog cat = common.catalog();
                auto q =
                    p_quotient(cat.presentation(rm_group.empty() ? "C7xC7" : rm_group), rm_p, rm_k);
                if (q.pc.ngens() < 2) throw domain_error("T2-pair needs a 2-generator quotient");
                auto [t1, t2] =
                    paper_tuples("T2-pair", q.pc, {q.pc.gen(0), q.pc.gen(1)}, common.cc());
                auto rs = verify_structure(q.pc, t1, t2);
                res["verified"] = rs.has_value();
                if (rs)
                    res["structure"] = structure_json(
                        q.pc, *rs, {"g0", "g1", "(g0*g1)^-1"},
                        {"g0*g1^2", "g0*g1^3", "(g0*g1^2*g0*g1^3)^-1"});
                else
                    exit_code = 2;
            } else {
                Presentation p = load_group(common, rm_group, rm_file);
                auto q = p_quotient(p, rm_p, rm_k);
                SearchOptions opt;
                opt.strategy = rm_strategy == "randomized" ? SearchStrategy::Randomized
                                                           : SearchStrategy::Exhaustive;
                opt.seed = rm_seed;
                opt.budget = rm_budget;
                opt.max_results = rm_max_results;
                opt.max_candidates = rm_max_candidates;
                opt.workers = rm_workers;
                auto found =
                    search_structures(q.pc, parse_type(rm_type1), parse_type(rm_type2), opt);
                res["structures_found"] = found.structures.size();
                res["exhausted"] = found.exhausted;
                res["nodes"] = found.pairs_tested;
                json list = json::array();
                for (const auto& rs : found.structures) list.push_back(structure_json(q.pc, rs));
                res["structures"] = list;
            }
            write_report(doc, common.output);
            return exit_code;
        }

        if (app.got_subcommand(surface)) {
            json config{{"order", sf_order}, {"type1", sf_type1}, {"type2", sf_type2}};
            json doc = report_skeleton("surface", config);
            auto s = surface_invariants(sf_order, parse_type(sf_type1), parse_type(sf_type2));
            doc["results"]["invariants"] = to_json(s);
            doc["results"]["curve_genus1"] =
                curve_genus(sf_order, parse_type(sf_type1)).to_string();
            doc["results"]["curve_genus2"] =
                curve_genus(sf_order, parse_type(sf_type2)).to_string();
            write_report(doc, common.output);
            return 0;
        }

        if (app.got_subcommand(rep)) {
            std::string path =
                rep_matrices.empty() ? common.data_dir + "/matrices/appendix.json" : rep_matrices;
            json doc = report_skeleton("repcheck", json{{"matrices", path}});
            auto rm = load_appendix_matrices(path);
            auto report = verify_representation(rm);
            doc["results"]["repcheck"] = to_json(report);
            write_report(doc, common.output);
            return report.all_pass() ? 0 : 2;
        }

        if (app.got_subcommand(reproduce)) {
            return run_reproduce(common, rp_name, rp_max_class);
        }
    } catch (const missing_data_error& e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return 4;
    } catch (const budget_error& e) {
        std::cerr << "budget/cap: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return 1;
    }
    return 1;
}
