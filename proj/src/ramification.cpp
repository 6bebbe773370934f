#include "cgt/ramification.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cgt/fpmat.hpp"

namespace cgt {

void ElementSet::resize(std::uint64_t n) {
    universe = n;
    bits.assign((n + 63) / 64, 0);
}

std::uint64_t ElementSet::count() const {
    std::uint64_t c = 0;
    for (auto w : bits) c += std::uint64_t(__builtin_popcountll(w));
    return c;
}

std::uint64_t ElementSet::intersection_count(const ElementSet& o) const {
    if (universe != o.universe) throw domain_error("ElementSet: universe mismatch");
    std::uint64_t c = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        c += std::uint64_t(__builtin_popcountll(bits[i] & o.bits[i]));
    return c;
}

SphericalCheck is_spherical_system(const PcGroup& pc, const std::vector<PcElement>& tuple) {
    SphericalCheck out;
    if (tuple.empty()) {
        out.diagnosis = "tuple is empty";
        return out;
    }
    for (size_t i = 0; i < tuple.size(); ++i)
        if (pc.is_identity(tuple[i])) {
            out.diagnosis = "entry " + std::to_string(i) + " is the identity";
            return out;
        }
    PcElement prod = pc.id();
    for (const auto& g : tuple) prod = pc.mul(std::move(prod), g);
    if (!pc.is_identity(prod)) {
        out.diagnosis = "product of the tuple is not the identity";
        return out;
    }
    // Generation: images must span the weight-1 layer (Burnside basis theorem
    // reduces generation to generation modulo the Frattini subgroup).
    int d1 = 0;
    for (int w : pc.weights())
        if (w == 1) ++d1;
    FpMatrix m(pc.p(), int(tuple.size()), d1);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < d1; ++c) m.at(r, c) = tuple[r].e[c];
    if (fp_echelon(m).rank() != d1) {
        out.diagnosis = "tuple does not generate (weight-1 span deficient)";
        return out;
    }
    out.ok = true;
    return out;
}

std::vector<long> system_type(const PcGroup& pc, const std::vector<PcElement>& tuple) {
    std::vector<long> t;
    for (const auto& g : tuple) t.push_back(pc.element_order(g));
    std::sort(t.begin(), t.end());
    return t;
}

namespace {

void check_dense(const PcGroup& pc, std::uint64_t dense_cap) {
    std::uint64_t order = 1;
    for (int i = 0; i < pc.ngens(); ++i) {
        order *= std::uint64_t(pc.p());
        if (order > dense_cap)
            throw budget_error("dense cap " + std::to_string(dense_cap) +
                               " exceeded (group order p^" + std::to_string(pc.ngens()) + ")");
    }
}

// Conjugacy orbit of one element under generator conjugation.
std::vector<PcElement> conjugacy_orbit(const PcGroup& pc, const PcElement& x) {
    std::set<PcElement> seen{x};
    std::vector<PcElement> stack{x}, out{x};
    while (!stack.empty()) {
        PcElement cur = stack.back();
        stack.pop_back();
        for (int g = 0; g < pc.ngens(); ++g) {
            PcElement y = pc.conj_by_gen(cur, g);
            if (seen.insert(y).second) {
                stack.push_back(y);
                out.push_back(y);
            }
        }
    }
    return out;
}

} // namespace

ElementSet sigma_set(const PcGroup& pc, const std::vector<PcElement>& tuple,
                     std::uint64_t dense_cap) {
    check_dense(pc, dense_cap);
    ElementSet s;
    s.resize(pc.order_u64());
    s.insert(pc.rank(pc.id()));
    // Conjugates of powers are powers of conjugates, so Sigma is the union of
    // the cyclic subgroups generated by the conjugacy orbits of the entries.
    for (const auto& g : tuple)
        for (const auto& c : conjugacy_orbit(pc, g)) {
            PcElement acc = c;
            while (!pc.is_identity(acc)) {
                s.insert(pc.rank(acc));
                acc = pc.mul(std::move(acc), c);
            }
        }
    return s;
}

DisjointnessCertificate disjoint_systems(const PcGroup& pc, const std::vector<PcElement>& t1,
                                         const std::vector<PcElement>& t2,
                                         std::uint64_t dense_cap) {
    ElementSet s1 = sigma_set(pc, t1, dense_cap);
    ElementSet s2 = sigma_set(pc, t2, dense_cap);
    DisjointnessCertificate cert;
    cert.sigma1_size = s1.count();
    cert.sigma2_size = s2.count();
    cert.intersection_size = s1.intersection_count(s2);
    cert.disjoint = cert.intersection_size == 1; // the identity only
    return cert;
}

std::optional<RamificationStructure> verify_structure(const PcGroup& pc,
                                                      const std::vector<PcElement>& t1,
                                                      const std::vector<PcElement>& t2,
                                                      std::uint64_t dense_cap) {
    if (!is_spherical_system(pc, t1).ok || !is_spherical_system(pc, t2).ok) return std::nullopt;
    auto cert = disjoint_systems(pc, t1, t2, dense_cap);
    if (!cert.disjoint) return std::nullopt;
    RamificationStructure rs;
    rs.t1 = t1;
    rs.t2 = t2;
    rs.type1 = system_type(pc, t1);
    rs.type2 = system_type(pc, t2);
    rs.certificate = cert;
    return rs;
}

std::pair<std::vector<PcElement>, std::vector<PcElement>> paper_tuples(
    const std::string& name, const PcGroup& pc, const std::vector<PcElement>& gen_images,
    ConjConvention cc) {
    if (name == "thm-main") {
        if (gen_images.size() != 3)
            throw domain_error("paper_tuples(thm-main): need the three images of x0,x1,x2");
        const PcElement &x0 = gen_images[0], &x1 = gen_images[1], &x2 = gen_images[2];
        PcElement x = pc.inv(pc.mul(pc.mul(x0, x1), x2)); // x2^-1 x1^-1 x0^-1
        PcElement y0 = pc.mul(pc.mul(x0, pc.pow(x1, 2)), pc.pow(x2, 2));
        PcElement y1 = pc.mul(pc.mul(pc.pow(x0, 2), x1), pc.pow(x2, 2));
        PcElement x2c = cc == ConjConvention::RightAction ? pc.conj(x2, x0)
                                                          : pc.mul(pc.mul(x0, x2), pc.inv(x0));
        PcElement y2 = pc.mul(pc.mul(x1, pc.inv(x2)), x2c);
        PcElement y = pc.inv(pc.mul(pc.mul(y0, y1), y2));
        return {{x0, x1, x2, x}, {y0, y1, y2, y}};
    }
    if (name == "T2-pair") {
        if (gen_images.size() != 2)
            throw domain_error("paper_tuples(T2-pair): need two generator images");
        const PcElement &a = gen_images[0], &b = gen_images[1];
        std::vector<PcElement> t1{a, b, pc.inv(pc.mul(a, b))};
        PcElement u = pc.mul(a, pc.pow(b, 2));
        PcElement v = pc.mul(a, pc.pow(b, 3));
        std::vector<PcElement> t2{u, v, pc.inv(pc.mul(u, v))};
        return {t1, t2};
    }
    throw domain_error("paper_tuples: unknown name " + name);
}

namespace {

struct CandidateGen {
    const PcGroup& pc;
    std::vector<long> type; // sorted ascending
    long max_candidates;
    std::uint64_t dense_cap;
    // pools of element ranks by order
    std::map<long, std::vector<std::uint64_t>> pools;

    CandidateGen(const PcGroup& g, std::vector<long> ty, long maxc, std::uint64_t cap)
        : pc(g), type(std::move(ty)), max_candidates(maxc), dense_cap(cap) {
        std::sort(type.begin(), type.end());
        check_dense(pc, dense_cap);
        std::set<long> needed(type.begin(), type.end());
        std::uint64_t order = pc.order_u64();
        for (std::uint64_t r = 1; r < order; ++r) {
            PcElement x = pc.unrank(r);
            long o = pc.element_order(x);
            if (needed.count(o)) pools[o].push_back(r);
        }
    }

    int weight1_dim() const {
        int d = 0;
        for (int w : pc.weights())
            if (w == 1) ++d;
        return d;
    }

    // rank of the weight-1 projections of the chosen prefix entries
    int prefix_rank(const std::vector<PcElement>& cur, int d1) const {
        if (d1 == 0) return 0;
        FpMatrix m(pc.p(), int(cur.size()), d1);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < d1; ++c) m.at(r, c) = cur[r].e[c];
        return fp_echelon(m).rank();
    }

    // Searching with entries in sorted-type order is complete for existence:
    // braid moves reorder a spherical system by conjugating entries, which
    // preserves orders, generation and both Sigma-sets.
    std::vector<std::vector<PcElement>> exhaustive(bool first_up_to_conjugacy) {
        std::vector<std::vector<PcElement>> out;
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<PcElement> cur;
        std::vector<std::uint64_t> first_pool = pools.count(type[0]) ? pools[type[0]]
                                                                     : std::vector<std::uint64_t>{};
        if (first_up_to_conjugacy) {
            std::vector<std::uint64_t> reps;
            std::set<std::uint64_t> covered;
            for (auto r : first_pool) {
                if (covered.count(r)) continue;
                reps.push_back(r);
                for (const auto& c : conjugacy_orbit(pc, pc.unrank(r)))
                    covered.insert(pc.rank(c));
            }
            first_pool = std::move(reps);
        }
        dfs(out, seen, cur, pc.id(), 0, first_pool);
        return out;
    }

    void dfs(std::vector<std::vector<PcElement>>& out, std::set<std::vector<std::uint64_t>>& seen,
             std::vector<PcElement>& cur, PcElement prefix, size_t pos,
             const std::vector<std::uint64_t>& first_pool) {
        if (long(out.size()) >= max_candidates) return;
        const size_t r = type.size();
        const int d1 = weight1_dim();
        // generation pre-filter: the forced last projection lies in the span
        // of the earlier ones, so the r-1 free entries must already reach d1
        int free_left = int(r) - 1 - int(pos);
        if (prefix_rank(cur, d1) + free_left < d1) return;
        if (pos == r - 1) {
            PcElement last = pc.inv(prefix);
            if (pc.is_identity(last)) return;
            if (pc.element_order(last) != type[pos]) return;
            cur.push_back(last);
            finish(out, seen, cur);
            cur.pop_back();
            return;
        }
        const auto& pool = pos == 0 ? first_pool : pools[type[pos]];
        for (auto rk : pool) {
            if (long(out.size()) >= max_candidates) return;
            PcElement g = pc.unrank(rk);
            cur.push_back(g);
            dfs(out, seen, cur, pc.mul(prefix, g), pos + 1, first_pool);
            cur.pop_back();
        }
    }

    void finish(std::vector<std::vector<PcElement>>& out,
                std::set<std::vector<std::uint64_t>>& seen, std::vector<PcElement>& cur) {
        if (!is_spherical_system(pc, cur).ok) return;
        std::vector<std::uint64_t> key;
        for (const auto& g : cur) key.push_back(pc.rank(g));
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return; // same up to reordering
        out.push_back(cur);
    }

    std::vector<std::vector<PcElement>> randomized(std::uint64_t seed, long samples) {
        std::vector<std::vector<PcElement>> out;
        std::set<std::vector<std::uint64_t>> seen;
        std::mt19937_64 rng(seed);
        for (long s = 0; s < samples && long(out.size()) < max_candidates; ++s) {
            std::vector<PcElement> cur;
            PcElement prefix = pc.id();
            bool ok = true;
            for (size_t pos = 0; pos + 1 < type.size(); ++pos) {
                auto& pool = pools[type[pos]];
                if (pool.empty()) { ok = false; break; }
                std::uint64_t rk = pool[rng() % pool.size()];
                PcElement g = pc.unrank(rk);
                prefix = pc.mul(prefix, g);
                cur.push_back(std::move(g));
            }
            if (!ok) continue;
            PcElement last = pc.inv(prefix);
            if (pc.is_identity(last) || pc.element_order(last) != type.back()) continue;
            cur.push_back(last);
            finish(out, seen, cur);
        }
        return out;
    }
};

} // namespace

namespace {

// Second-side search against a fixed Sigma(T1): entries are drawn only from
// elements whose whole cyclic subgroup misses Sigma(T1)\{1}; conjugation
// invariance of Sigma(T1) makes that filter exact, so every spherical system
// found here is automatically disjoint from T1.
struct SecondSide {
    const PcGroup& pc;
    const std::vector<long>& type; // sorted
    const ElementSet& avoid;
    long node_budget;
    long nodes = 0;
    bool truncated = false;
    std::vector<std::vector<std::uint64_t>> pools; // per position
    std::vector<std::vector<PcElement>> found;
    long max_found;
    std::set<std::vector<std::uint64_t>> seen;
    int d1 = 0;

    SecondSide(const PcGroup& g, const std::vector<long>& ty, const ElementSet& av,
               const std::map<long, std::vector<std::uint64_t>>& base_pools, long budget,
               long maxf)
        : pc(g), type(ty), avoid(av), node_budget(budget), max_found(maxf) {
        for (int w : pc.weights())
            if (w == 1) ++d1;
        for (long o : type) {
            std::vector<std::uint64_t> filtered;
            auto it = base_pools.find(o);
            const std::vector<std::uint64_t> empty;
            for (auto r : it == base_pools.end() ? empty : it->second) {
                PcElement x = pc.unrank(r);
                PcElement acc = x;
                bool ok = true;
                while (!pc.is_identity(acc)) {
                    if (avoid.contains(pc.rank(acc))) { ok = false; break; }
                    acc = pc.mul(std::move(acc), x);
                }
                if (ok) filtered.push_back(r);
            }
            pools.push_back(std::move(filtered));
        }
    }

    int prefix_rank(const std::vector<PcElement>& cur) const {
        if (d1 == 0) return 0;
        FpMatrix m(pc.p(), int(cur.size()), d1);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < d1; ++c) m.at(r, c) = cur[r].e[c];
        return fp_echelon(m).rank();
    }

    void dfs(std::vector<PcElement>& cur, PcElement prefix, size_t pos) {
        if (long(found.size()) >= max_found || truncated) return;
        if (++nodes > node_budget) {
            truncated = true;
            return;
        }
        const size_t r = type.size();
        if (prefix_rank(cur) + (int(r) - 1 - int(pos)) < d1) return;
        if (pos == r - 1) {
            PcElement last = pc.inv(prefix);
            if (pc.is_identity(last)) return;
            if (pc.element_order(last) != type[pos]) return;
            // the forced entry must respect the avoidance filter too
            PcElement acc = last;
            while (!pc.is_identity(acc)) {
                if (avoid.contains(pc.rank(acc))) return;
                acc = pc.mul(std::move(acc), last);
            }
            cur.push_back(last);
            if (is_spherical_system(pc, cur).ok) {
                std::vector<std::uint64_t> key;
                for (const auto& g : cur) key.push_back(pc.rank(g));
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) found.push_back(cur);
            }
            cur.pop_back();
            return;
        }
        for (auto rk : pools[pos]) {
            if (long(found.size()) >= max_found || truncated) return;
            PcElement g = pc.unrank(rk);
            cur.push_back(g);
            dfs(cur, pc.mul(prefix, g), pos + 1);
            cur.pop_back();
        }
    }

    void run() {
        std::vector<PcElement> cur;
        dfs(cur, pc.id(), 0);
    }
};

} // namespace

SearchResult search_structures(const PcGroup& pc, const std::vector<long>& typeA,
                               const std::vector<long>& typeB, const SearchOptions& opt) {
    if (opt.budget <= 0) throw domain_error("search_structures: budget must be positive");
    SearchResult res;
    CandidateGen genA(pc, typeA, opt.max_candidates, opt.dense_cap);
    CandidateGen genB(pc, typeB, opt.max_candidates, opt.dense_cap);
    std::vector<long> typeB_sorted = typeB;
    std::sort(typeB_sorted.begin(), typeB_sorted.end());

    pc.warm_caches(); // the lazy memo fill is not synchronized

    if (opt.strategy == SearchStrategy::Randomized) {
        // sample both sides, then test sampled pairs
        auto candA = genA.randomized(opt.seed, opt.budget);
        auto candB = genB.randomized(opt.seed + 0x9e3779b97f4a7c15ULL, opt.budget);
        std::vector<ElementSet> sigA, sigB;
        for (const auto& c : candA) sigA.push_back(sigma_set(pc, c, opt.dense_cap));
        for (const auto& c : candB) sigB.push_back(sigma_set(pc, c, opt.dense_cap));
        for (size_t i = 0; i < candA.size(); ++i)
            for (size_t j = 0; j < candB.size(); ++j) {
                if (res.pairs_tested >= opt.budget) return res;
                ++res.pairs_tested;
                if (sigA[i].intersection_count(sigB[j]) != 1) continue;
                auto rs = verify_structure(pc, candA[i], candB[j], opt.dense_cap);
                if (!rs)
                    throw internal_error("search_structures: candidate failed re-verification");
                res.structures.push_back(std::move(*rs));
                if (long(res.structures.size()) >= opt.max_results) return res;
            }
        return res;
    }

    auto candA = genA.exhaustive(opt.t1_up_to_conjugacy);
    bool candA_complete = long(candA.size()) < opt.max_candidates;

    // Fan candA out across workers; merging in candA order keeps the result
    // independent of scheduling. Each slot gets a fixed node budget.
    const long per_slot_budget = std::max<long>(1, opt.budget / std::max<size_t>(candA.size(), 1));
    std::vector<std::vector<RamificationStructure>> slot_results(candA.size());
    std::vector<char> slot_truncated(candA.size(), 0);
    std::vector<long> slot_nodes(candA.size(), 0);

    int workers = opt.workers > 0 ? opt.workers : int(std::max(1u, std::thread::hardware_concurrency()));
    workers = int(std::min<size_t>(size_t(workers), candA.size() ? candA.size() : 1));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= candA.size()) break;
            ElementSet sig = sigma_set(pc, candA[i], opt.dense_cap);
            SecondSide side(pc, typeB_sorted, sig, genB.pools, per_slot_budget, opt.max_results);
            side.run();
            slot_nodes[i] = side.nodes;
            slot_truncated[i] = side.truncated ? 1 : 0;
            for (auto& t2 : side.found) {
                auto rs = verify_structure(pc, candA[i], t2, opt.dense_cap);
                if (!rs)
                    throw internal_error("search_structures: candidate failed re-verification");
                slot_results[i].push_back(std::move(*rs));
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    bool any_truncated = false;
    for (size_t i = 0; i < candA.size(); ++i) {
        any_truncated = any_truncated || slot_truncated[i];
        res.pairs_tested += slot_nodes[i];
        for (auto& rs : slot_results[i]) {
            if (long(res.structures.size()) < opt.max_results)
                res.structures.push_back(std::move(rs));
        }
    }
    bool hit_result_cap = long(res.structures.size()) >= opt.max_results;
    res.exhausted = candA_complete && !any_truncated && !hit_result_cap;
    return res;
}

} // namespace cgt
