#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/abelian.hpp"
#include "cgt/catalog.hpp"
#include "cgt/cosets.hpp"
#include "cgt/pquotient.hpp"
#include "cgt/schreier.hpp"
#include "cgt/textfmt.hpp"

using namespace cgt;

TEST_CASE("coset enumeration: bundled index claims") {
    Catalog cat;
    {
        auto t = coset_enumerate(cat.subgroup("H0"));
        CHECK(t.index() == 2);
        CHECK(t.complete);
    }
    {
        auto t = coset_enumerate(cat.subgroup("H"));
        CHECK(t.index() == 3);
    }
    {
        // full generator set: index 1
        auto g0 = cat.presentation("G0");
        std::vector<Word> all;
        for (size_t i = 0; i < g0.generators.size(); ++i) all.push_back(Word::gen(int(i)));
        CHECK(coset_enumerate(g0, all).index() == 1);
    }
}

TEST_CASE("coset enumeration on textbook groups") {
    // S3 = <a, b | a^2, b^2, (ab)^3>, trivial subgroup: 6 cosets
    Presentation s3;
    s3.generators = {"a", "b"};
    s3.relators = {parse_word("a^2", s3.generators), parse_word("b^2", s3.generators),
                   parse_word("(a*b)^3", s3.generators)};
    CHECK(coset_enumerate(s3, {}).index() == 6);
    CHECK(coset_enumerate(s3, {parse_word("a", s3.generators)}).index() == 3);
    // free product factor of infinite index: budget refusal
    Presentation f2;
    f2.generators = {"a", "b"};
    CHECK_THROWS_AS(coset_enumerate(f2, {parse_word("a", f2.generators)}, 500), budget_error);
}

TEST_CASE("completed tables close all relator traces and fix coset 0") {
    Catalog cat;
    auto t = coset_enumerate(cat.subgroup("H"));
    for (int c = 0; c < t.index(); ++c)
        for (const auto& r : t.parent.relators) CHECK(t.act_word(c, r) == c);
    for (const auto& w : t.subgroup_generators) CHECK(t.act_word(0, w) == 0);
}

TEST_CASE("index is invariant under relator reordering and generator renaming") {
    Catalog cat;
    auto g0 = cat.presentation("G0");
    std::reverse(g0.relators.begin(), g0.relators.end());
    std::swap(g0.relators[0], g0.relators[3]);
    auto sub = cat.subgroup("H0");
    CHECK(coset_enumerate(g0, sub.generators).index() == 2);

    // rename generators by rotating the naming (indices shift cyclically)
    Presentation ren = cat.presentation("G0");
    for (auto& r : ren.relators)
        for (auto& l : r.letters) {
            int g = std::abs(l) - 1;
            int ng = (g + 1) % 7;
            l = l > 0 ? ng + 1 : -(ng + 1);
        }
    std::vector<Word> sub2 = {Word::gen(1), Word::gen(2)}; // shifted images of x0, x1
    CHECK(coset_enumerate(ren, sub2).index() == 2);
}

TEST_CASE("abelianization: bundled values") {
    Catalog cat;
    CHECK(abelianization(cat.presentation("G0")).torsion ==
          std::vector<std::int64_t>{2, 2, 6});
    CHECK(abelianization(cat.presentation("GK")).torsion == std::vector<std::int64_t>{2, 6, 6});
    CHECK(abelianization(cat.presentation("GK-poly")).torsion ==
          std::vector<std::int64_t>{2, 6, 6});
    CHECK(abelianization(cat.presentation("Ghat")).torsion ==
          std::vector<std::int64_t>{2, 2, 2, 2, 6, 6});
    // free group of rank 2
    Presentation f2;
    f2.generators = {"a", "b"};
    auto ab = abelianization(f2);
    CHECK(ab.torsion.empty());
    CHECK(ab.free_rank == 2);
}

TEST_CASE("reidemeister-schreier: index-1 subgroup reproduces the group") {
    Catalog cat;
    auto g0 = cat.presentation("G0");
    std::vector<Word> all;
    for (size_t i = 0; i < g0.generators.size(); ++i) all.push_back(Word::gen(int(i)));
    auto table = coset_enumerate(g0, all);
    auto sub = reidemeister_schreier(table);
    CHECK(abelianization(sub.raw) == abelianization(g0));
    CHECK(abelianization(sub.simplified) == abelianization(g0));
}

TEST_CASE("reidemeister-schreier: the index-2 subgroup of the 7-generator group") {
    Catalog cat;
    auto table = coset_enumerate(cat.subgroup("H0"));
    auto sub = reidemeister_schreier(table);
    // schreier generator count: index * gens - (index - 1)
    CHECK(sub.raw.generators.size() == 2 * 7 - 1);
    auto ab_raw = abelianization(sub.raw);
    auto ab_simpl = abelianization(sub.simplified);
    CHECK(ab_raw == ab_simpl);
    // resolved value for the subgroup generated by x0, x1: Z_4 x Z_12
    // (computed here; the two sources print conflicting readings)
    CHECK(ab_raw.free_rank == 0);
    CHECK(ab_raw.torsion == std::vector<std::int64_t>{4, 12});

    // the catalog words x0, x1 must rewrite into subgroup generators whose
    // images generate: check the rewriting map round-trips membership
    Word x0 = Word::gen(0), x1 = Word::gen(1);
    CHECK_NOTHROW(sub.rewrite(x0));
    CHECK_NOTHROW(sub.rewrite(x1));
    CHECK_THROWS_AS(sub.rewrite(Word::gen(2)), domain_error); // x2 not in H0
}

TEST_CASE("reidemeister-schreier feeds the 3-quotient of the index-3 subgroup") {
    Catalog cat;
    auto table = coset_enumerate(cat.subgroup("H"));
    auto sub = reidemeister_schreier(table);
    auto q = p_quotient(sub.simplified, 3, 2);
    CHECK(q.pc.order_exponent() == 6); // order 3^6 at class 2
}

TEST_CASE("abelianization equals pc abelianization through the quotient") {
    Catalog cat;
    auto g0 = cat.presentation("G0");
    // class-1 2-quotient has order 2^3 (the mod-2 rank of (2,2,6))
    auto q = p_quotient(g0, 2, 1);
    CHECK(q.pc.order_exponent() == 3);
}

TEST_CASE("the two bundled presentations of the seventh listed group agree") {
    Catalog cat;
    auto g7gen = cat.presentation("G6");
    auto g2gen = cat.presentation("G6-2gen");
    CHECK(abelianization(g7gen).torsion == std::vector<std::int64_t>{2, 6});
    CHECK(abelianization(g2gen).torsion == std::vector<std::int64_t>{2, 6});
    for (int p : {2, 3})
        for (int k = 1; k <= 3; ++k) {
            auto a = p_quotient(g7gen, p, k);
            auto b = p_quotient(g2gen, p, k);
            CHECK(a.pc.order_exponent() == b.pc.order_exponent());
            CHECK(a.pc.layer_sizes() == b.pc.layer_sizes());
        }
}

TEST_CASE("derived subgroup via the augmented-commutator enumeration") {
    Catalog cat;
    auto g = cat.presentation("G6-2gen");
    auto spec = derived_subgroup_spec(g);
    auto table = coset_enumerate(spec);
    CHECK(table.index() == 12); // |G^ab| = |Z2 x Z6|
    auto sub = reidemeister_schreier(table);
    // the commutator subgroup abelianizes to Z/2
    CHECK(abelianization(sub.simplified).torsion == std::vector<std::int64_t>{2});
    CHECK(abelianization(sub.simplified).free_rank == 0);

    // free group: infinite abelianization is refused
    Presentation f2;
    f2.generators = {"a", "b"};
    CHECK_THROWS_AS(derived_subgroup_spec(f2), domain_error);
}

TEST_CASE("user-data-gated subgroups: full pipeline when files are supplied") {
    // the bundled data directory ships stubs, so this is a gating test by
    // default; with real relator files in place it exercises the claims for
    // the externally defined groups (index 16 for the first, 7-quotient
    // orders, and the abelianization comparisons)
    Catalog cat(CGT_DATA_DIR);
    try {
        auto h2 = cat.subgroup("H2");
        auto table = coset_enumerate(h2);
        CHECK(table.index() == 16);
        auto sub = reidemeister_schreier(table);
        CHECK(abelianization(sub.simplified).torsion == std::vector<std::int64_t>{7, 21});
        auto q = p_quotient(sub.simplified, 7, 1);
        CHECK(q.pc.order_exponent() == 2);
    } catch (const missing_data_error&) {
        MESSAGE("external data for the second listed group not present; pipeline gated");
    }
    try {
        auto h4 = cat.subgroup("H4");
        auto table = coset_enumerate(h4);
        CHECK(table.index() == 48);
    } catch (const missing_data_error&) {
        MESSAGE("external data for the fourth listed group not present; pipeline gated");
    }
}

TEST_CASE("rewriting arbitrary subgroup words") {
    Catalog cat;
    auto table = coset_enumerate(cat.subgroup("H"));
    auto sub = reidemeister_schreier(table);
    // words in x0,x1,x2 lie in H; their rewrites must evaluate consistently
    // under the epimorphism of the subgroup presentation's 3-quotient
    auto q = p_quotient(sub.simplified, 3, 2);
    auto eval = [&](const Word& parent_word) {
        return q.pc.eval_word(sub.rewrite(parent_word), q.images);
    };
    Word x0 = Word::gen(0), x1 = Word::gen(1), x2 = Word::gen(2);
    PcElement a = eval(x0), b = eval(x1), c = eval(x2);
    // product evaluation is a homomorphism: eval(x0 x1) = eval(x0) eval(x1)
    CHECK(eval(x0 * x1) == q.pc.mul(a, b));
    CHECK(eval(x0 * x1 * x2) == q.pc.mul(q.pc.mul(a, b), c));
    CHECK(eval(x0.pow(3)).e == q.pc.id().e); // x0^3 = 1 in the parent
}
