#include "cgt/catalog.hpp"

#include <algorithm>
#include <set>

#include "cgt/textfmt.hpp"

namespace cgt {

namespace {

Presentation cyclic_family(const std::string& provenance, const std::string& stem, int m,
                           const std::vector<std::vector<int>>& offset_families,
                           bool with_cubes = false) {
    Presentation p;
    p.provenance = provenance;
    for (int i = 0; i < m; ++i) p.generators.push_back(stem + std::to_string(i));
    if (with_cubes)
        for (int i = 0; i < m; ++i) p.relators.push_back(Word({i + 1, i + 1, i + 1}));
    for (const auto& offs : offset_families)
        for (int i = 0; i < m; ++i) {
            std::vector<int> letters;
            for (int o : offs) letters.push_back(((i + o) % m) + 1);
            p.relators.push_back(Word(std::move(letters)));
        }
    p.validate();
    return p;
}

Presentation make_g0() {
    return cyclic_family("eq. for G0 (7 generators)", "x", 7, {{0, 1, 3}});
}

Presentation make_g() {
    return cyclic_family("eq. for G (13 generators)", "x", 13, {{0, 1, 4}}, true);
}

Presentation make_ghat() {
    return cyclic_family("eq. for the q=4 group (21 generators)", "x", 21,
                         {{0, 7, 14}, {0, 14, 7}, {0, 3, 15}});
}

// 21-generator presentation on w0..w6, y0..y6, z0..z6. 'linking' selects the
// two extra relator families: the printed ones for GK, the variant for G'.
Presentation make_wyz(bool gk_linking) {
    Presentation p;
    p.provenance = gk_linking ? "alternative presentation of GK" : "variant group G'";
    for (char c : {'w', 'y', 'z'})
        for (int i = 0; i < 7; ++i) p.generators.push_back(std::string(1, c) + std::to_string(i));
    auto W = [](int i) { return ((i % 7) + 7) % 7 + 1; };
    auto Y = [](int i) { return ((i % 7) + 7) % 7 + 8; };
    auto Z = [](int i) { return ((i % 7) + 7) % 7 + 15; };
    for (int i = 0; i < 7; ++i) {
        p.relators.push_back(Word({W(i), W(i + 1), W(i + 3)}));
        p.relators.push_back(Word({Y(i), Y(i + 1), Y(i + 3)}));
        p.relators.push_back(Word({Z(i), Z(i + 1), Z(i + 3)}));
    }
    for (int i = 0; i < 7; ++i) {
        if (gk_linking) {
            // w_i^-1 y_{6(1+i)} z_i^-1 and w_i^-1 z_i^-1 y_{6(1+i)}
            int yi = Y(6 * (1 + i));
            p.relators.push_back(Word({-W(i), yi, -Z(i)}));
            p.relators.push_back(Word({-W(i), -Z(i), yi}));
        } else {
            p.relators.push_back(Word({W(i), Y(i), Z(i)}));
            p.relators.push_back(Word({W(i), Z(i), Y(i)}));
        }
    }
    p.validate();
    return p;
}

Presentation make_g6() {
    Presentation p;
    p.provenance = "seven-generator presentation of G6";
    p.generators = {"a", "b", "c", "d", "e", "f", "g"};
    for (const char* t : {"a*b*e", "a*c*b", "a*e*c", "b*f^2", "c*d^2", "d*f*g", "e*g^2"})
        p.relators.push_back(parse_word(t, p.generators));
    p.validate();
    return p;
}

Presentation make_g6_2gen() {
    Presentation p;
    p.provenance = "two-generator presentation of G6";
    p.generators = {"a", "b"};
    p.relators.push_back(parse_word("b^-1*a^-1*b^2*a^-2*b^-3*a^-1", p.generators));
    p.relators.push_back(parse_word("a^3*b*a*b*a^-2*b^2", p.generators));
    p.validate();
    return p;
}

Presentation make_c7c7() {
    Presentation p;
    p.provenance = "constructed: elementary abelian group of order 49";
    p.generators = {"a", "b"};
    p.relators.push_back(parse_word("a^7", p.generators));
    p.relators.push_back(parse_word("b^7", p.generators));
    p.relators.push_back(parse_word("a*b*a^-1*b^-1", p.generators));
    p.validate();
    return p;
}

const std::map<std::string, std::vector<std::string>>& subgroup_word_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"H0", {"x0", "x1"}},
        {"H", {"x0", "x1", "x2"}},
        {"H2",
         {"b*d^-1*a^-1*b*c^-1", "a*b*d^-1*a*b*d^-1*b*c^-1", "(b*c^-1)^2", "a*d*c^-1",
          "d*b^-1*a^-1*d*b^-1*a^-1*b*c^-1"}},
        {"H4",
         {"d*a^-1*b*c^-1", "b*c^-1*b*c^-1*e*a^-1*b*f^-1", "c*b^-1*a*e^-1*c*f^-1",
          "(e*a^-1*b*f^-1)^2", "c*b^-1*c*b^-1*e*a^-1*b*f^-1",
          "e*a^-1*b*c^-1*e*a^-1*b*c^-1*e*a^-1*b*f^-1"}},
        {"H5", {"b*a^-1", "c*a^-1", "d*a^-1", "e*a^-1", "f*a^-1", "g*a^-1"}},
    };
    return table;
}

const std::map<std::string, std::string>& subgroup_parent_table() {
    static const std::map<std::string, std::string> table = {
        {"H0", "G0"}, {"H", "G"}, {"H2", "G2"}, {"H4", "G4"}, {"H5", "G5"},
    };
    return table;
}

} // namespace

Catalog::Catalog(std::string data_dir, ConjConvention cc)
    : data_dir_(std::move(data_dir)), cc_(cc) {}

Presentation Catalog::load_external(const std::string& name) const {
    if (data_dir_.empty())
        throw missing_data_error("presentation " + name +
                                 " requires a user data file, but no data directory is set");
    auto file = load_presentation_file(data_dir_ + "/presentations/" + name + ".txt", cc_);
    return file.presentation;
}

Presentation Catalog::presentation(const std::string& name) const {
    if (name == "G0" || name == "G3") return make_g0(); // G3 of the seven-group list is G0
    if (name == "G") return make_g();
    if (name == "Ghat") return make_ghat();
    if (name == "GK") return make_wyz(true);
    if (name == "Gprime") return make_wyz(false);
    if (name == "G6") return make_g6();
    if (name == "G6-2gen") return make_g6_2gen();
    if (name == "GK-poly") return polyhedral_to_presentation(polyhedral_q4(true));
    if (name == "G-cmsz") return cmsz_transported_presentation();
    if (name == "C7xC7") return make_c7c7();
    if (name == "G1" || name == "G2" || name == "G4" || name == "G5" || name == "G7")
        return load_external(name);
    throw domain_error("unknown presentation: " + name);
}

bool Catalog::is_known_presentation(const std::string& name) const {
    static const std::set<std::string> names = {"G0", "G3", "G", "Ghat", "GK", "Gprime",
                                                "G6", "G6-2gen", "GK-poly", "G-cmsz", "C7xC7",
                                                "G1", "G2", "G4", "G5", "G7"};
    return names.count(name) > 0;
}

std::vector<std::string> Catalog::bundled_presentations() const {
    return {"G0", "G", "Ghat", "GK", "Gprime", "G6", "G6-2gen", "GK-poly", "G-cmsz", "C7xC7"};
}

SubgroupSpec Catalog::subgroup(const std::string& name) const {
    if (name == "F5") {
        // Printed only as "a subgroup of index 2 in H5"; no generator words in
        // the source, so this entry is data-gated like its parent.
        if (data_dir_.empty())
            throw missing_data_error("subgroup F5 requires a user data file");
        auto file = load_presentation_file(data_dir_ + "/presentations/F5.txt", cc_);
        if (file.subgroup_words.empty())
            throw missing_data_error("F5 data file must provide sub: lines");
        SubgroupSpec s;
        s.parent_name = "F5-parent";
        s.parent = file.presentation;
        s.generators = file.subgroup_words;
        s.provenance = "user data file F5.txt";
        s.validate();
        return s;
    }
    auto pit = subgroup_parent_table().find(name);
    auto wit = subgroup_word_table().find(name);
    if (pit == subgroup_parent_table().end() || wit == subgroup_word_table().end())
        throw domain_error("unknown subgroup: " + name);
    SubgroupSpec s;
    s.parent_name = pit->second;
    s.parent = presentation(pit->second);
    for (const auto& text : wit->second)
        s.generators.push_back(parse_word(text, s.parent.generators, cc_));
    s.provenance = "subgroup " + name + " of " + pit->second;
    s.validate();
    return s;
}

bool Catalog::is_known_subgroup(const std::string& name) const {
    return name == "F5" || subgroup_parent_table().count(name) > 0;
}

Word Catalog::index3_tuple_word(const std::string& name, ConjConvention cc) {
    static const std::vector<std::string> gens = {"x0", "x1", "x2"};
    if (name == "x0" || name == "x1" || name == "x2") return parse_word(name, gens, cc);
    if (name == "x") return parse_word("x2^-1*x1^-1*x0^-1", gens, cc);
    if (name == "y0") return parse_word("x0*x1^2*x2^2", gens, cc);
    if (name == "y1") return parse_word("x0^2*x1*x2^2", gens, cc);
    if (name == "y2") return parse_word("x1*x2^-1*x2^(x0)", gens, cc);
    if (name == "y") {
        Word y0 = index3_tuple_word("y0", cc);
        Word y1 = index3_tuple_word("y1", cc);
        Word y2 = index3_tuple_word("y2", cc);
        return y2.inverse() * y1.inverse() * y0.inverse();
    }
    throw domain_error("unknown tuple word: " + name);
}

std::vector<std::string> Catalog::index3_tuple_names() {
    return {"x0", "x1", "x2", "x", "y0", "y1", "y2", "y"};
}

PolyhedralPresentation Catalog::triangle_q2() {
    PolyhedralPresentation pp;
    pp.q = 2;
    pp.plane_points = {{0, 1, 2, 3, 4, 5, 6}};
    pp.lambda = {{0, {1, 4, 2}}, {1, {3, 2, 5}}, {2, {4, 3, 6}}, {3, {0, 4, 5}},
                 {4, {1, 5, 6}}, {5, {0, 2, 6}}, {6, {0, 1, 3}}};
    const std::vector<std::vector<int>> base = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                                {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
    for (const auto& t : base)
        for (int r = 0; r < 3; ++r)
            pp.tuples.push_back({t[r % 3], t[(r + 1) % 3], t[(r + 2) % 3]});
    return pp;
}

PolyhedralPresentation Catalog::polyhedral_q4(bool corrected) {
    PolyhedralPresentation pp;
    pp.q = 4;
    pp.plane_points = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                        15, 16, 17, 18, 19, 20, 21}};
    pp.lambda = {
        {4, {5, 6, 7, 12, 18}},   {7, {1, 2, 5, 8, 21}},    {2, {3, 4, 5, 14, 16}},
        {5, {1, 3, 6, 10, 19}},   {1, {2, 4, 6, 9, 15}},    {3, {1, 4, 7, 11, 17}},
        {6, {2, 3, 7, 13, 20}},
        {9, {12, 13, 14, 1, 15}}, {11, {8, 9, 12, 3, 17}},  {14, {10, 11, 12, 2, 16}},
        {12, {8, 10, 13, 4, 18}}, {10, {9, 11, 13, 5, 19}}, {13, {8, 11, 13, 6, 20}},
        {8, {9, 10, 14, 7, 21}},
        {18, {19, 20, 21, 4, 12}}, {21, {15, 16, 19, 7, 8}}, {16, {17, 18, 19, 2, 14}},
        {19, {15, 17, 20, 5, 10}}, {15, {16, 18, 20, 1, 9}}, {17, {15, 18, 21, 3, 11}},
        {20, {16, 17, 21, 6, 13}},
    };
    if (corrected) pp.lambda[13] = {8, 11, 14, 6, 20}; // printed row has 13 twice on a line

    std::vector<std::vector<int>> base = {
        {1, 9, 15},  {1, 15, 9},  {2, 14, 16}, {2, 16, 14}, {3, 11, 17}, {3, 17, 11},
        {4, 12, 18}, {4, 18, 12}, {5, 10, 19}, {5, 19, 10}, {6, 13, 20}, {6, 20, 13},
        {7, 8, 21},  {7, 21, 8},
        {1, 2, 3},   {1, 4, 5},   {1, 6, 7},   {3, 4, 6},   {3, 7, 5},   {2, 5, 6},
        {2, 4, 7},
        {8, 9, 12},  {8, 10, 13}, {8, 14, 11}, {9, 14, 10}, {9, 13, 11}, {12, 13, 14},
        {10, 11, 12},
        {15, 16, 17}, {15, 18, 19}, {17, 18, 20}, {17, 21, 19}, {16, 19, 20}, {16, 18, 21},
    };
    // The printed list stops one tuple short of covering the incident pairs of
    // the third subplane; the completion is forced by conditions (1) and (3).
    if (corrected) base.push_back({15, 20, 21});
    for (const auto& t : base)
        for (int r = 0; r < 3; ++r)
            pp.tuples.push_back({t[r % 3], t[(r + 1) % 3], t[(r + 2) % 3]});
    return pp;
}

std::vector<std::pair<std::string, std::string>> Catalog::ghat_to_gprime_table() {
    return {
        {"x0", "z0^-1"},  {"x1", "w1^-1"},  {"x2", "y2^-1"},  {"x3", "z3^-1"},
        {"x4", "w4^-1"},  {"x5", "y5^-1"},  {"x6", "z6^-1"},  {"x7", "w0^-1"},
        {"x8", "y1^-1"},  {"x9", "z2^-1"},  {"x10", "w3^-1"}, {"x11", "y4^-1"},
        {"x12", "z5^-1"}, {"x13", "w6^-1"}, {"x14", "y0^-1"}, {"x15", "z1^-1"},
        {"x16", "w2^-1"}, {"x17", "y3^-1"}, {"x18", "z4^-1"}, {"x19", "w5^-1"},
        {"x20", "y6^-1"},
    };
}

Presentation Catalog::cmsz_transported_presentation() {
    // a_i = x_{2i} identifies the 13-generator group with its a-indexed form;
    // transported relators come out of the x-relators via x_j = a_{7j mod 13}.
    Presentation g = make_g();
    Presentation p;
    p.provenance = "G on a-generators via a_i = x_{2i}";
    for (int i = 0; i < 13; ++i) p.generators.push_back("a" + std::to_string(i));
    for (const auto& r : g.relators) {
        std::vector<int> letters;
        for (int l : r.letters) {
            int j = std::abs(l) - 1;
            int ai = (7 * j) % 13;
            letters.push_back(l > 0 ? ai + 1 : -(ai + 1));
        }
        p.relators.push_back(Word(std::move(letters)));
    }
    p.validate();
    return p;
}

} // namespace cgt
