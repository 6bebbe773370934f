#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cgt/catalog.hpp"
#include "cgt/cosets.hpp"
#include "cgt/pquotient.hpp"
#include "cgt/ramification.hpp"
#include "cgt/schreier.hpp"
#include "cgt/textfmt.hpp"

using namespace cgt;

namespace {

struct Index3Quotient {
    PcGroup pc;
    std::vector<PcElement> xyz; // images of x0, x1, x2
};

Index3Quotient index3_quotient(int k) {
    Catalog cat;
    auto table = coset_enumerate(cat.subgroup("H"));
    auto sub = reidemeister_schreier(table);
    auto q = p_quotient(sub.simplified, 3, k);
    std::vector<PcElement> xyz;
    for (int i = 0; i < 3; ++i)
        xyz.push_back(q.pc.eval_word(sub.rewrite(Word::gen(i)), q.images));
    return {q.pc, xyz};
}

PcGroup c7c7() {
    Catalog cat;
    return p_quotient(cat.presentation("C7xC7"), 7, 1).pc;
}

// Oracle: Sigma by the literal triple loop over all (g, i, j).
std::set<std::uint64_t> sigma_triple_loop(const PcGroup& pc,
                                          const std::vector<PcElement>& tuple) {
    std::set<std::uint64_t> out;
    out.insert(pc.rank(pc.id()));
    for (std::uint64_t r = 0; r < pc.order_u64(); ++r) {
        PcElement g = pc.unrank(r);
        PcElement ginv = pc.inv(g);
        for (const auto& gi : tuple) {
            PcElement pw = pc.id();
            for (int j = 0; j < int(pc.element_order(gi)); ++j) {
                out.insert(pc.rank(pc.mul(pc.mul(g, pw), ginv)));
                pw = pc.mul(std::move(pw), gi);
            }
        }
    }
    return out;
}

std::set<std::uint64_t> to_set(const PcGroup& pc, const ElementSet& s) {
    std::set<std::uint64_t> out;
    for (std::uint64_t r = 0; r < s.universe; ++r)
        if (s.contains(r)) out.insert(r);
    return out;
}

} // namespace

TEST_CASE("spherical system checks") {
    auto [pc, xyz] = index3_quotient(2);
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    CHECK(is_spherical_system(pc, t1).ok);
    CHECK(is_spherical_system(pc, t2).ok);

    // a tuple containing the identity is rejected
    auto bad = t1;
    bad[1] = pc.id();
    auto chk = is_spherical_system(pc, bad);
    CHECK(!chk.ok);
    CHECK(chk.diagnosis.find("identity") != std::string::npos);

    // product must be one
    auto noprod = t1;
    std::swap(noprod[0], noprod[1]); // generally breaks the product
    PcElement prod = pc.id();
    for (const auto& g : noprod) prod = pc.mul(prod, g);
    if (!pc.is_identity(prod)) CHECK(!is_spherical_system(pc, noprod).ok);

    // non-generating tuple: (g, g^-1) with g in the Frattini part
    PcElement deep = pc.gen(pc.ngens() - 1);
    auto ng = std::vector<PcElement>{deep, pc.inv(deep)};
    CHECK(!is_spherical_system(pc, ng).ok);

    // (g, g^-1) in a cyclic group generates iff g does
    Presentation c9;
    c9.generators = {"x"};
    c9.relators = {parse_word("x^9", c9.generators)};
    auto qc = p_quotient(c9, 3, 2);
    PcElement g = qc.images[0];
    CHECK(is_spherical_system(qc.pc, {g, qc.pc.inv(g)}).ok);
    PcElement cube = qc.pc.pow(g, 3);
    CHECK(!is_spherical_system(qc.pc, {cube, qc.pc.inv(cube)}).ok);
}

TEST_CASE("system types") {
    auto [pc, xyz] = index3_quotient(2);
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    CHECK(system_type(pc, t1) == std::vector<long>{3, 3, 3, 3});
    CHECK(system_type(pc, t2) == std::vector<long>{3, 3, 3, 3});
    // invariance under reordering and conjugation of entries
    std::mt19937_64 rng(5);
    auto t = t1;
    std::shuffle(t.begin(), t.end(), rng);
    CHECK(system_type(pc, t) == system_type(pc, t1));
    for (auto& g : t) g = pc.conj(g, pc.unrank(rng() % pc.order_u64()));
    CHECK(system_type(pc, t) == system_type(pc, t1));
    // order-7 pair
    PcGroup ab = c7c7();
    PcElement a = ab.gen(0);
    CHECK(system_type(ab, {a, ab.inv(a)}) == std::vector<long>{7, 7});
}

TEST_CASE("types in the class-5 quotient") {
    auto [pc, xyz] = index3_quotient(5);
    REQUIRE(pc.order_exponent() == 14);
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    CHECK(system_type(pc, t1) == std::vector<long>{3, 3, 3, 9});  // d_5 = 2
    CHECK(system_type(pc, t2) == std::vector<long>{9, 9, 9, 9});  // b_5 = 2
}

TEST_CASE("sigma sets: cyclic, central, and the triple-loop oracle") {
    // cyclic group: Sigma of (g, g^-1) is everything
    Presentation c9;
    c9.generators = {"x"};
    c9.relators = {parse_word("x^9", c9.generators)};
    auto qc = p_quotient(c9, 3, 2);
    PcElement g = qc.images[0];
    auto s = sigma_set(qc.pc, {g, qc.pc.inv(g)});
    CHECK(s.count() == 9);

    // central entries: Sigma is the union of the cyclic subgroups themselves
    auto [pc, xyz] = index3_quotient(2);
    PcElement z1 = pc.gen(pc.ngens() - 1), z2 = pc.gen(pc.ngens() - 2);
    auto sc = sigma_set(pc, {z1, z2});
    std::set<std::uint64_t> expect{pc.rank(pc.id())};
    for (const PcElement& c : {z1, z2}) {
        PcElement acc = c;
        while (!pc.is_identity(acc)) {
            expect.insert(pc.rank(acc));
            acc = pc.mul(std::move(acc), c);
        }
    }
    CHECK(to_set(pc, sc) == expect);

    // oracle agreement on the paper tuples
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    auto s1 = sigma_set(pc, t1);
    CHECK(to_set(pc, s1) == sigma_triple_loop(pc, t1));
    auto s2 = sigma_set(pc, t2);
    CHECK(to_set(pc, s2) == sigma_triple_loop(pc, t2));
}

TEST_CASE("sigma is invariant under inner twists") {
    auto [pc, xyz] = index3_quotient(2);
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    auto base = sigma_set(pc, t1);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        PcElement h = pc.unrank(rng() % pc.order_u64());
        auto twisted = t1;
        for (auto& g : twisted) g = pc.conj(g, h);
        auto s = sigma_set(pc, twisted);
        CHECK(s.bits == base.bits);
    }
    // disjointness is likewise stable under conjugating single entries
    auto cert0 = disjoint_systems(pc, t1, t2);
    for (int trial = 0; trial < 20; ++trial) {
        PcElement h = pc.unrank(rng() % pc.order_u64());
        auto t = t2;
        t[trial % t.size()] = pc.conj(t[trial % t.size()], h);
        auto cert = disjoint_systems(pc, t1, t);
        CHECK(cert.disjoint == cert0.disjoint);
        CHECK(cert.sigma2_size == cert0.sigma2_size);
    }
}

TEST_CASE("paper tuples at class 2 form a verified structure") {
    auto [pc, xyz] = index3_quotient(2);
    auto [t1, t2] = paper_tuples("thm-main", pc, xyz);
    auto cert = disjoint_systems(pc, t1, t2);
    CHECK(cert.disjoint);
    CHECK(cert.intersection_size == 1);
    auto rs = verify_structure(pc, t1, t2);
    REQUIRE(rs.has_value());
    CHECK(rs->type1 == std::vector<long>{3, 3, 3, 3});
    CHECK(rs->type2 == std::vector<long>{3, 3, 3, 3});
    // self-disjointness never holds for a nontrivial system
    CHECK(!disjoint_systems(pc, t1, t1).disjoint);
}

TEST_CASE("the class-3 anomaly: printed tuples are not disjoint there") {
    // The order law holds at k=3 (3^8) but the printed T2 has mixed type
    // [3,3,3,9] and the two Sigma sets meet in 3 elements, under either
    // conjugation convention. Frozen here as computed facts.
    auto [pc, xyz] = index3_quotient(3);
    REQUIRE(pc.order_exponent() == 8);
    for (auto cc : {ConjConvention::RightAction, ConjConvention::LeftAction}) {
        auto [t1, t2] = paper_tuples("thm-main", pc, xyz, cc);
        CHECK(system_type(pc, t1) == std::vector<long>{3, 3, 3, 9});
        CHECK(system_type(pc, t2) == std::vector<long>{3, 3, 3, 9});
        auto cert = disjoint_systems(pc, t1, t2);
        CHECK(!cert.disjoint);
        CHECK(cert.intersection_size == 3);
    }
}

TEST_CASE("beauville pattern in the rank-2 elementary abelian group") {
    PcGroup pc = c7c7();
    std::vector<PcElement> gens = {pc.gen(0), pc.gen(1)};
    auto [t1, t2] = paper_tuples("T2-pair", pc, gens);
    REQUIRE(t1.size() == 3);
    REQUIRE(t2.size() == 3);
    CHECK(is_spherical_system(pc, t1).ok);
    CHECK(is_spherical_system(pc, t2).ok);
    auto cert = disjoint_systems(pc, t1, t2);
    CHECK(cert.disjoint);

    // abelian case oracle: disjointness reduces to membership in the unions
    // of cyclic subgroups
    auto cyclic_union = [&](const std::vector<PcElement>& t) {
        std::set<std::uint64_t> u;
        for (const auto& g : t) {
            PcElement acc = g;
            while (!pc.is_identity(acc)) {
                u.insert(pc.rank(acc));
                acc = pc.mul(std::move(acc), g);
            }
        }
        return u;
    };
    auto u1 = cyclic_union(t1), u2 = cyclic_union(t2);
    std::vector<std::uint64_t> meet;
    std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(), std::back_inserter(meet));
    CHECK(meet.empty());
    // and the general routine returns exactly that answer
    CHECK(cert.sigma1_size == u1.size() + 1);
    CHECK(cert.sigma2_size == u2.size() + 1);

    CHECK_THROWS_AS(paper_tuples("nope", pc, gens), domain_error);
    CHECK_THROWS_AS(paper_tuples("T2-pair", pc, {pc.gen(0)}), domain_error);
}

TEST_CASE("search: elementary abelian of order 49 has structures of type (7,7,7)") {
    PcGroup pc = c7c7();
    SearchOptions opt;
    opt.max_results = 4;
    auto res = search_structures(pc, {7, 7, 7}, {7, 7, 7}, opt);
    CHECK(res.structures.size() >= 1);
    for (const auto& rs : res.structures) {
        CHECK(rs.type1 == std::vector<long>{7, 7, 7});
        CHECK(rs.type2 == std::vector<long>{7, 7, 7});
        // independent re-verification
        auto again = verify_structure(pc, rs.t1, rs.t2);
        CHECK(again.has_value());
    }
}

TEST_CASE("search: the four-element group admits nothing") {
    Presentation z2z2;
    z2z2.generators = {"a", "b"};
    z2z2.relators = {Word({1, 1}), Word({2, 2}), Word({1, 2, -1, -2})};
    auto q = p_quotient(z2z2, 2, 1);
    REQUIRE(q.pc.order_exponent() == 2);
    for (auto ty : std::vector<std::vector<long>>{{2, 2}, {2, 2, 2}, {2, 2, 2, 2}}) {
        auto res = search_structures(q.pc, ty, ty, SearchOptions{});
        CHECK(res.structures.empty());
        CHECK(res.exhausted); // definitive: full enumeration, nothing truncated
    }
}

TEST_CASE("search on the class-2 quotient finds structures; determinism") {
    auto [pc, xyz] = index3_quotient(2);
    SearchOptions opt;
    opt.max_results = 2;
    opt.max_candidates = 100;
    opt.budget = 2000000;
    auto res = search_structures(pc, {3, 3, 3, 3}, {3, 3, 3, 3}, opt);
    CHECK(res.structures.size() == 2);
    for (const auto& rs : res.structures) {
        auto again = verify_structure(pc, rs.t1, rs.t2);
        CHECK(again.has_value());
    }
    // same options, same worker count vs single worker: identical output
    auto res1 = search_structures(pc, {3, 3, 3, 3}, {3, 3, 3, 3}, opt);
    SearchOptions opt1 = opt;
    opt1.workers = 1;
    auto res2 = search_structures(pc, {3, 3, 3, 3}, {3, 3, 3, 3}, opt1);
    REQUIRE(res1.structures.size() == res.structures.size());
    REQUIRE(res2.structures.size() == res.structures.size());
    for (size_t i = 0; i < res.structures.size(); ++i) {
        CHECK(res1.structures[i].t1 == res.structures[i].t1);
        CHECK(res1.structures[i].t2 == res.structures[i].t2);
        CHECK(res2.structures[i].t1 == res.structures[i].t1);
        CHECK(res2.structures[i].t2 == res.structures[i].t2);
    }

    // randomized strategy: deterministic for a fixed seed
    SearchOptions ropt;
    ropt.strategy = SearchStrategy::Randomized;
    ropt.seed = 42;
    ropt.budget = 4000;
    ropt.max_candidates = 150;
    ropt.max_results = 2;
    auto r1 = search_structures(pc, {3, 3, 3, 3}, {3, 3, 3, 3}, ropt);
    auto r2 = search_structures(pc, {3, 3, 3, 3}, {3, 3, 3, 3}, ropt);
    CHECK(r1.structures.size() == 2);
    REQUIRE(r1.structures.size() == r2.structures.size());
    for (size_t i = 0; i < r1.structures.size(); ++i) {
        CHECK(r1.structures[i].t1 == r2.structures[i].t1);
        CHECK(r1.structures[i].t2 == r2.structures[i].t2);
    }
}

TEST_CASE("dense cap refusal") {
    auto [pc, xyz] = index3_quotient(2);
    CHECK_THROWS_AS(sigma_set(pc, xyz, 100), budget_error);
    SearchOptions opt;
    opt.dense_cap = 100;
    CHECK_THROWS_AS(search_structures(pc, {3, 3, 3}, {3, 3, 3}, opt), budget_error);
}
