#include "cgt/pquotient.hpp"

#include <algorithm>

#include "cgt/fpmat.hpp"

namespace cgt {

namespace {

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; long(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct TailSlot {
    PcDefKind kind;
    int a, b;   // Power: a; Comm: (a, b) with a > b; Image: fp gen a
    int weight; // weight of the relation carrying the tail
};

// Class-1 quotient: GF(p) row space of the abelianized relation matrix.
PQuotient class_one(const Presentation& pres, int p) {
    const int n = int(pres.generators.size());
    FpMatrix m(p, int(pres.relators.size()), n);
    for (int r = 0; r < m.rows; ++r)
        for (int l : pres.relators[r].letters) {
            int g = std::abs(l) - 1;
            m.set_mod(r, g, m.at(r, g) + (l > 0 ? 1 : -1));
        }
    Echelon ech = fp_echelon(m);
    std::vector<char> is_pivot(n, 0);
    for (int c : ech.pivots) is_pivot[c] = 1;

    PcGroup pc(p, 1);
    std::vector<int> gen_of_fp(n, -1);
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) gen_of_fp[c] = pc.append_generator(1, {PcDefKind::Image, c, -1});

    std::vector<PcElement> images(n, pc.id());
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) images[c] = pc.gen(gen_of_fp[c]);
    for (size_t r = 0; r < ech.pivots.size(); ++r) {
        int pc_col = ech.pivots[r];
        PcElement img = pc.id();
        for (int c = 0; c < n; ++c) {
            if (is_pivot[c] || ech.rref.at(int(r), c) == 0) continue;
            img.e[gen_of_fp[c]] = (p - ech.rref.at(int(r), c)) % p;
        }
        images[pc_col] = img;
    }
    if (pc.ngens() == 0) pc.set_class(0); // trivial p-quotient
    return PQuotient(std::move(pc), std::move(images));
}

// One covering step: returns false when the series has stabilized.
bool lift(PQuotient& q, const Presentation& pres, const PQuotientOptions& opt) {
    PcGroup& pc = q.pc;
    const int p = pc.p();
    const int n_old = pc.ngens();
    const int L = pc.pclass() + 1;

    std::vector<char> def_power(n_old, 0);
    std::vector<std::vector<char>> def_comm(n_old, std::vector<char>(n_old, 0));
    std::vector<char> def_image(pres.generators.size(), 0);
    for (int i = 0; i < n_old; ++i) {
        const auto& d = pc.definitions()[i];
        if (d.kind == PcDefKind::Power) def_power[d.a] = 1;
        if (d.kind == PcDefKind::Comm) def_comm[d.a][d.b] = 1;
        if (d.kind == PcDefKind::Image) def_image[d.a] = 1;
    }

    // Tail slots ordered by relation weight ascending, then kind, then index.
    // Non-exact-weight tails sit leftmost so elimination prefers them; a tail
    // that survives must sit on a relation of weight exactly L.
    std::vector<TailSlot> slots;
    for (int w = 1; w <= L; ++w) {
        for (size_t x = 0; x < pres.generators.size(); ++x)
            if (!def_image[x] && w == 1) slots.push_back({PcDefKind::Image, int(x), -1, 1});
        for (int i = 0; i < n_old; ++i)
            if (!def_power[i] && pc.weights()[i] + 1 == w)
                slots.push_back({PcDefKind::Power, i, -1, w});
        for (int j = 0; j < n_old; ++j)
            for (int i = 0; i < j; ++i)
                if (!def_comm[j][i] && pc.weights()[j] + pc.weights()[i] == w)
                    slots.push_back({PcDefKind::Comm, j, i, w});
    }
    const int T = int(slots.size());
    if (n_old + T > opt.max_gens)
        throw budget_error("p_quotient: generator guardrail (" + std::to_string(opt.max_gens) +
                           ") exceeded");

    // Extended pcp: tails become central weight-L generators with trivial
    // power and commutator relations, appended to their carrier relations.
    PcGroup ext = pc;
    std::vector<int> slot_gen(T);
    for (int t = 0; t < T; ++t) slot_gen[t] = ext.append_generator(L, {PcDefKind::None, -1, -1});
    std::vector<PcElement> images = q.images;
    for (auto& im : images) im.e.resize(ext.ngens(), 0);
    for (int t = 0; t < T; ++t) {
        const TailSlot& s = slots[t];
        if (s.kind == PcDefKind::Power) {
            PcElement v = ext.power_relation(s.a);
            v.e[slot_gen[t]] = 1;
            ext.set_power(s.a, std::move(v));
        } else if (s.kind == PcDefKind::Comm) {
            PcElement v = ext.comm_relation(s.a, s.b);
            v.e[slot_gen[t]] = 1;
            ext.set_comm(s.a, s.b, std::move(v));
        } else {
            images[s.a].e[slot_gen[t]] = 1;
        }
    }
    ext.set_class(L);

    // Collect the defining equation system over the tail space.
    std::vector<std::vector<int>> equations;
    auto add_equation = [&](const PcElement& lhs, const PcElement& rhs, const char* what) {
        for (int i = 0; i < n_old; ++i)
            if (lhs.e[i] != rhs.e[i])
                throw internal_error(std::string("p_quotient: ") + what +
                                     " differs outside the tail space");
        std::vector<int> row(T, 0);
        bool nonzero = false;
        for (int t = 0; t < T; ++t) {
            int d = (lhs.e[slot_gen[t]] - rhs.e[slot_gen[t]]) % p;
            if (d < 0) d += p;
            row[t] = d;
            nonzero = nonzero || d != 0;
        }
        if (nonzero) equations.push_back(std::move(row));
    };

    const auto& w = ext.weights();
    auto in_filter = [&](int wsum) { return opt.full_consistency || wsum <= L; };
    for (int k = 0; k < n_old; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                if (!in_filter(w[k] + w[j] + w[i])) continue;
                PcElement lhs = ext.mul(ext.gen(k), ext.mul(ext.gen(j), ext.gen(i)));
                PcElement rhs = ext.mul(ext.mul(ext.gen(k), ext.gen(j)), ext.gen(i));
                add_equation(lhs, rhs, "associativity check");
            }
    for (int j = 0; j < n_old; ++j)
        for (int i = 0; i < j; ++i) {
            if (!in_filter(w[j] + w[i] + 1)) continue;
            PcElement jm1 = ext.id();
            jm1.e[j] = p - 1;
            add_equation(ext.mul(ext.power_relation(j), ext.gen(i)),
                         ext.mul(jm1, ext.mul(ext.gen(j), ext.gen(i))), "power overlap");
            PcElement im1 = ext.id();
            im1.e[i] = p - 1;
            add_equation(ext.mul(ext.gen(j), ext.power_relation(i)),
                         ext.mul(ext.mul(ext.gen(j), ext.gen(i)), im1), "power overlap");
        }
    for (int i = 0; i < n_old; ++i) {
        if (!in_filter(2 * w[i] + 1)) continue;
        add_equation(ext.mul(ext.gen(i), ext.power_relation(i)),
                     ext.mul(ext.power_relation(i), ext.gen(i)), "power overlap");
    }
    for (const auto& rel : pres.relators)
        add_equation(ext.eval_word(rel, images), ext.id(), "relator image");

    // Solve: pivot tails are eliminated, free tails survive as new generators.
    FpMatrix eqm(p, int(equations.size()), T);
    for (int r = 0; r < eqm.rows; ++r)
        for (int t = 0; t < T; ++t) eqm.at(r, t) = equations[r][t];
    Echelon ech = fp_echelon(eqm);
    std::vector<int> pivot_row(T, -1);
    for (size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = int(r);

    std::vector<int> survivor_index(T, -1);
    int survivors = 0;
    for (int t = 0; t < T; ++t)
        if (pivot_row[t] < 0) survivor_index[t] = survivors++;
    if (survivors == 0) {
        q.stabilized_at = pc.pclass();
        return false;
    }

    // Rewrite a tail segment through the elimination and compact the vector.
    auto compact = [&](const PcElement& v) {
        PcElement out;
        out.e.assign(n_old + survivors, 0);
        for (int i = 0; i < n_old; ++i) out.e[i] = v.e[i];
        for (int t = 0; t < T; ++t) {
            int c = v.e[slot_gen[t]];
            if (c == 0) continue;
            if (pivot_row[t] < 0) {
                out.e[n_old + survivor_index[t]] = (out.e[n_old + survivor_index[t]] + c) % p;
            } else {
                // t = -(sum of free columns in its pivot row)
                const int r = pivot_row[t];
                for (int u = 0; u < T; ++u) {
                    if (u == t || ech.rref.at(r, u) == 0) continue;
                    if (pivot_row[u] >= 0)
                        throw internal_error("p_quotient: rref row touches two pivots");
                    int add = (p - ech.rref.at(r, u)) % p * c % p;
                    int& slot = out.e[n_old + survivor_index[u]];
                    slot = (slot + add) % p;
                }
            }
        }
        return out;
    };

    PcGroup next(p, L);
    for (int i = 0; i < n_old; ++i)
        next.append_generator(pc.weights()[i], pc.definitions()[i]);
    for (int t = 0; t < T; ++t) {
        if (pivot_row[t] >= 0) continue;
        const TailSlot& s = slots[t];
        if (s.weight != L)
            throw internal_error("p_quotient: surviving tail sits on a relation of weight " +
                                 std::to_string(s.weight) + " != class " + std::to_string(L));
        next.append_generator(L, {s.kind, s.a, s.b});
    }
    for (int i = 0; i < n_old; ++i) next.set_power(i, compact(ext.power_relation(i)));
    for (int j = 0; j < n_old; ++j)
        for (int i = 0; i < j; ++i) next.set_comm(j, i, compact(ext.comm_relation(j, i)));
    std::vector<PcElement> next_images;
    next_images.reserve(images.size());
    for (const auto& im : images) next_images.push_back(compact(im));

    q.pc = std::move(next);
    q.images = std::move(next_images);
    return true;
}

} // namespace

void PQuotient::verify_epimorphism(const Presentation& p) const {
    for (const auto& rel : p.relators)
        if (!pc.is_identity(pc.eval_word(rel, images)))
            throw internal_error("PQuotient: relator image is not the identity");
}

PQuotient p_quotient(const Presentation& pres, int prime, int k, const PQuotientOptions& opt) {
    pres.validate();
    if (!is_prime_int(prime)) throw domain_error("p_quotient: p must be prime");
    if (k < 1) throw domain_error("p_quotient: class must be >= 1");
    if (k > opt.max_class)
        throw budget_error("p_quotient: class " + std::to_string(k) + " exceeds the bound " +
                           std::to_string(opt.max_class));
    PQuotient q = class_one(pres, prime);
    if (q.pc.ngens() == 0) {
        q.stabilized_at = 0;
        q.verify_epimorphism(pres);
        return q;
    }
    while (q.pc.pclass() < k) {
        if (!lift(q, pres, opt)) break;
    }
    q.verify_epimorphism(pres);
    return q;
}

bool check_map_on_quotient(const Presentation& src, const std::vector<Word>& images,
                           const Presentation& target, int prime, int k,
                           const PQuotientOptions& opt) {
    src.validate();
    if (images.size() != src.generators.size())
        throw domain_error("check_map_on_quotient: need one image word per source generator");
    for (const auto& w : images)
        if (w.max_generator() >= int(target.generators.size()))
            throw domain_error("check_map_on_quotient: image uses undeclared target generator");
    for (int j = 1; j <= k; ++j) {
        auto q = p_quotient(target, prime, j, opt);
        for (const auto& rel : src.relators) {
            PcElement e = q.pc.id();
            for (int l : rel.letters) {
                const Word& im = images[std::abs(l) - 1];
                Word part = l > 0 ? im : im.inverse();
                e = q.pc.mul(std::move(e), q.pc.eval_word(part, q.images));
            }
            if (!q.pc.is_identity(e)) return false;
        }
        if (q.stabilized_at > 0 && q.pc.pclass() < j) break; // series stationary
    }
    return true;
}

std::vector<PcElement> enumerate_elements(const PcGroup& pc, std::uint64_t cap) {
    std::uint64_t order = 1;
    for (int i = 0; i < pc.ngens(); ++i) {
        order *= std::uint64_t(pc.p());
        if (order > cap)
            throw budget_error("enumerate_elements: cap " + std::to_string(cap) + " exceeded");
    }
    std::vector<PcElement> out;
    out.reserve(order);
    for (std::uint64_t r = 0; r < order; ++r) out.push_back(pc.unrank(r));
    return out;
}

} // namespace cgt
