#include "cgt/report.hpp"

#include <fstream>
#include <iostream>

namespace cgt {

using nlohmann::json;

json report_skeleton(const std::string& command, const json& config) {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    doc["config"] = config;
    doc["results"] = json::object();
    return doc;
}

json to_json(const DifferenceSet& d) {
    return json{{"modulus", d.m},
                {"residues", d.residues},
                {"canonical_translate", canonical_translate(d)}};
}

json to_json(const DifferenceCheck& c) {
    json j;
    j["perfect"] = c.perfect;
    json bad = json::array();
    for (size_t d = 1; d < c.multiplicity.size(); ++d)
        if (c.multiplicity[d] != 1)
            bad.push_back(json{{"difference", d}, {"multiplicity", c.multiplicity[d]}});
    j["defects"] = bad;
    return j;
}

json to_json(const Graph& g) {
    json j;
    j["vertices"] = g.labels();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

json to_json(const PlaneIncidence& p) {
    return json{{"order", p.q}, {"points", p.num_points}, {"lines", p.lines}};
}

json to_json(const AbelianInvariants& a) {
    return json{{"torsion", a.torsion}, {"free_rank", a.free_rank}};
}

json to_json(const Fingerprint& f) {
    json j;
    j["p"] = f.p;
    j["order_exponent"] = f.order_exponent;
    j["class"] = f.pclass;
    j["layer_sizes"] = f.layer_sizes;
    j["abelian_invariants"] = f.abelian_invariants;
    j["exponent_exp"] = f.exponent_exp;
    j["power_rank_profile"] = f.power_rank_profile;
    j["conjugacy_classes"] = f.conjugacy_classes;
    return j;
}

json to_json(const SurfaceInvariants& s) {
    return json{{"genus1", s.genus1}, {"genus2", s.genus2},
                {"chi", s.chi},       {"euler", s.euler},
                {"K2", s.ksq},        {"pg", s.pg},
                {"q", s.q},           {"isogenous_to_higher_product",
                                       s.isogenous_to_higher_product}};
}

json to_json(const DisjointnessCertificate& c) {
    return json{{"disjoint", c.disjoint},
                {"sigma1_size", c.sigma1_size},
                {"sigma2_size", c.sigma2_size},
                {"intersection_size", c.intersection_size}};
}

json pc_group_json(const PcGroup& pc) {
    json j;
    j["p"] = pc.p();
    j["class"] = pc.pclass();
    j["order_exponent"] = pc.order_exponent();
    j["layer_sizes"] = pc.layer_sizes();
    json gens = json::array();
    for (int i = 0; i < pc.ngens(); ++i) {
        json g;
        g["index"] = i;
        g["weight"] = pc.weights()[i];
        const auto& d = pc.definitions()[i];
        switch (d.kind) {
            case PcDefKind::Image: g["definition"] = "image:" + std::to_string(d.a); break;
            case PcDefKind::Power: g["definition"] = "power:" + std::to_string(d.a); break;
            case PcDefKind::Comm:
                g["definition"] = "comm:" + std::to_string(d.a) + "," + std::to_string(d.b);
                break;
            default: g["definition"] = "none";
        }
        gens.push_back(g);
    }
    j["generators"] = gens;
    json powers = json::array();
    for (int i = 0; i < pc.ngens(); ++i) powers.push_back(pc.power_relation(i).e);
    j["power_relations"] = powers;
    json comms = json::array();
    for (int jj = 0; jj < pc.ngens(); ++jj)
        for (int ii = 0; ii < jj; ++ii) {
            const auto& v = pc.comm_relation(jj, ii);
            bool trivial = true;
            for (int e : v.e) trivial = trivial && e == 0;
            if (!trivial)
                comms.push_back(json{{"j", jj}, {"i", ii}, {"value", v.e}});
        }
    j["commutator_relations"] = comms;
    return j;
}

json structure_json(const PcGroup& pc, const RamificationStructure& rs,
                    const std::vector<std::string>& t1_words,
                    const std::vector<std::string>& t2_words) {
    (void)pc;
    json j;
    auto tuple_json = [&](const std::vector<PcElement>& t) {
        json a = json::array();
        for (const auto& g : t) a.push_back(g.e);
        return a;
    };
    j["t1_exponents"] = tuple_json(rs.t1);
    j["t2_exponents"] = tuple_json(rs.t2);
    if (!t1_words.empty()) j["t1_words"] = t1_words;
    if (!t2_words.empty()) j["t2_words"] = t2_words;
    j["type1"] = rs.type1;
    j["type2"] = rs.type2;
    j["certificate"] = to_json(rs.certificate);
    return j;
}

json to_json(const RepcheckReport& r) {
    json j;
    j["conj_formula_checked"] = r.conj_formula_checked;
    j["conj_formula_failures"] = r.conj_formula_failures;
    j["alpha_cubes_are_y"] = r.alpha_cubes_are_y;
    j["alpha_inverses_ok"] = r.alpha_inverses_ok;
    j["tau13_identity"] = r.tau13_identity;
    j["conj_relators_x_indexed"] = r.conj_relators_x_indexed;
    j["conj_relators_transported"] = r.conj_relators_transported;
    j["x0_matches_conjugation"] = r.x0_matches_conjugation;
    j["tau_matches_conjugation"] = r.tau_matches_conjugation;
    json checks = json::array();
    for (const auto& c : r.printed_checks) {
        json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) cj["first_diff"] = c.first_diff;
        checks.push_back(cj);
    }
    j["printed_checks"] = checks;
    j["printed_all_pass"] = r.printed_all_pass;
    return j;
}

void write_report(const json& doc, const std::string& path) {
    std::string text = doc.dump(2);
    text += "\n";
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw domain_error("cannot write report to " + path);
    f << text;
}

} // namespace cgt
