#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "cgt/catalog.hpp"
#include "cgt/report.hpp"
#include "cgt/textfmt.hpp"

using namespace cgt;

namespace {
const std::string kDataDir = CGT_DATA_DIR;
}

TEST_CASE("word parsing: products, powers, conjugation") {
    std::vector<std::string> gens = {"x0", "x1", "x4"};
    CHECK(parse_word("x0*x1*x4^-1", gens) == Word({1, 2, -3}));
    CHECK(parse_word("x0^3", gens) == Word({1, 1, 1}));
    CHECK(parse_word("(x0*x1)^2", gens) == Word({1, 2, 1, 2}));
    CHECK(parse_word("x1^(x0)", gens) == Word({-1, 2, 1}));
    CHECK(parse_word("x1^(x0)", gens, ConjConvention::LeftAction) == Word({1, 2, -1}));
    CHECK(parse_word("x0^0", gens).empty());
    CHECK(parse_word("  x0 * x1 ", gens) == Word({1, 2}));
}

TEST_CASE("word parsing: diagnostics carry line and column") {
    std::vector<std::string> gens = {"a", "b"};
    try {
        parse_word("a*zz*b", gens, ConjConvention::RightAction, 7);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 7);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_word("a^", gens), parse_error);
    CHECK_THROWS_AS(parse_word("a*(b", gens), parse_error);
    CHECK_THROWS_AS(parse_word("a b", gens), parse_error);
}

TEST_CASE("presentation text files") {
    std::string text =
        "# comment line\n"
        "gens: x0 x1 x2\n"
        "rel: x0*x1*x2^-1\n"
        "sub: x0*x1\n";
    auto file = parse_presentation_text(text);
    CHECK(file.presentation.generators.size() == 3);
    CHECK(file.presentation.relators.size() == 1);
    CHECK(file.subgroup_words.size() == 1);

    // undeclared generator in a relator
    CHECK_THROWS_AS(parse_presentation_text("gens: a\nrel: a*b\n"), parse_error);
    // rel before gens
    CHECK_THROWS_AS(parse_presentation_text("rel: a\ngens: a\n"), parse_error);
    // unknown directive
    CHECK_THROWS_AS(parse_presentation_text("foo: bar\n"), parse_error);
}

TEST_CASE("round-trip: catalog entries survive serialize/parse") {
    Catalog cat;
    for (const auto& name : cat.bundled_presentations()) {
        Presentation p = cat.presentation(name);
        std::string text = serialize_presentation(p);
        auto file = parse_presentation_text(text);
        CHECK(file.presentation.generators == p.generators);
        REQUIRE(file.presentation.relators.size() == p.relators.size());
        for (size_t i = 0; i < p.relators.size(); ++i)
            CHECK(file.presentation.relators[i].free_reduced() == p.relators[i].free_reduced());
    }
    // subgroup words round-trip too
    auto h = cat.subgroup("H0");
    std::string text = serialize_presentation(h.parent, h.generators);
    auto file = parse_presentation_text(text);
    CHECK(file.subgroup_words == h.generators);
}

TEST_CASE("the bundled seven-generator file equals the catalog entry") {
    auto file = load_presentation_file(kDataDir + "/presentations/G0.txt");
    Catalog cat;
    Presentation g0 = cat.presentation("G0");
    CHECK(file.presentation.generators == g0.generators);
    std::set<Word> a, b;
    for (const auto& r : file.presentation.relators) a.insert(cyclic_canonical(r));
    for (const auto& r : g0.relators) b.insert(cyclic_canonical(r));
    CHECK(a == b);
}

TEST_CASE("data stubs raise missing-data errors") {
    CHECK_THROWS_AS(load_presentation_file(kDataDir + "/presentations/G2.txt"),
                    missing_data_error);
    CHECK_THROWS_AS(load_presentation_file(kDataDir + "/presentations/no_such_file.txt"),
                    missing_data_error);
    Catalog cat(kDataDir);
    CHECK_THROWS_AS(cat.presentation("G2"), missing_data_error);
    CHECK_THROWS_AS(cat.subgroup("H4"), missing_data_error);
    CHECK_THROWS_AS(cat.subgroup("F5"), missing_data_error);
}

TEST_CASE("reports are deterministic for a fixed config") {
    nlohmann::json config{{"seed", 1}, {"budget", 100}};
    auto doc1 = report_skeleton("test", config);
    doc1["results"]["values"] = {3, 2, 1};
    auto doc2 = report_skeleton("test", config);
    doc2["results"]["values"] = {3, 2, 1};
    CHECK(doc1.dump(2) == doc2.dump(2));
    // keys are emitted sorted, so insertion order does not matter
    nlohmann::json a, b;
    a["x"] = 1;
    a["a"] = 2;
    b["a"] = 2;
    b["x"] = 1;
    CHECK(a.dump() == b.dump());
}

TEST_CASE("json serializers cover the domain types") {
    DifferenceSet d{7, {1, 2, 4}};
    auto jd = to_json(d);
    CHECK(jd["modulus"] == 7);
    CHECK(jd["canonical_translate"] == std::vector<int>{0, 1, 3});
    auto chk = is_perfect_difference_set({0, 1, 2}, 7);
    auto jc = to_json(chk);
    CHECK(jc["perfect"] == false);
    CHECK(jc["defects"].size() > 0);
    AbelianInvariants ab;
    ab.torsion = {2, 6};
    ab.free_rank = 1;
    auto ja = to_json(ab);
    CHECK(ja["free_rank"] == 1);
}
