#include "cgt/fingerprint.hpp"

#include <sstream>

#include "cgt/fpmat.hpp"
#include "cgt/intmat.hpp"

namespace cgt {

bool Fingerprint::operator==(const Fingerprint& o) const {
    return p == o.p && order_exponent == o.order_exponent && pclass == o.pclass &&
           layer_sizes == o.layer_sizes && abelian_invariants == o.abelian_invariants &&
           exponent_exp == o.exponent_exp && power_rank_profile == o.power_rank_profile &&
           conjugacy_classes == o.conjugacy_classes;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " order=" << p << "^" << order_exponent << " class=" << pclass
       << " layers=[";
    for (size_t i = 0; i < layer_sizes.size(); ++i) os << (i ? "," : "") << layer_sizes[i];
    os << "] ab=(";
    for (size_t i = 0; i < abelian_invariants.size(); ++i)
        os << (i ? "," : "") << abelian_invariants[i];
    os << ") exp=" << (exponent_exp < 0 ? std::string("skipped")
                                        : std::to_string(p) + "^" + std::to_string(exponent_exp));
    os << " pow-profile=[";
    for (size_t i = 0; i < power_rank_profile.size(); ++i)
        os << (i ? "," : "") << power_rank_profile[i];
    os << "] classes=" << (conjugacy_classes < 0 ? std::string("skipped")
                                                 : std::to_string(conjugacy_classes));
    return os.str();
}

AbelianInvariants pc_abelian_invariants(const PcGroup& pc) {
    const int n = pc.ngens();
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> row(n, 0);
        row[i] = pc.p();
        const auto& t = pc.power_relation(i);
        for (int k = 0; k < n; ++k) row[k] -= t.e[k];
        rows.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const auto& t = pc.comm_relation(j, i);
            std::vector<std::int64_t> row(n, 0);
            for (int k = 0; k < n; ++k) row[k] = t.e[k];
            rows.push_back(std::move(row));
        }
    IntMatrix m(int(rows.size()), n);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
    auto snf = smith_normal_form(m);
    AbelianInvariants out;
    out.free_rank = snf.free_rank;
    for (auto d : snf.factors)
        if (d > 1) out.torsion.push_back(d);
    if (out.free_rank != 0)
        throw internal_error("pc_abelian_invariants: finite p-group with free abelian part");
    return out;
}

namespace {

// Index range [first, last) of generators of a given weight; numbering is
// weight-monotone.
std::pair<int, int> layer_span(const PcGroup& pc, int w) {
    int first = -1, last = -1;
    for (int i = 0; i < pc.ngens(); ++i) {
        if (pc.weights()[i] == w) {
            if (first < 0) first = i;
            last = i + 1;
        }
    }
    if (first < 0) return {0, 0};
    return {first, last};
}

std::vector<int> coords_in_layer(const PcGroup& pc, const PcElement& x, int w) {
    auto [a, b] = layer_span(pc, w);
    std::vector<int> out;
    for (int i = a; i < b; ++i) out.push_back(x.e[i]);
    return out;
}

std::vector<int> power_profile(const PcGroup& pc) {
    std::vector<int> prof;
    for (int w = 1; w < pc.pclass(); ++w) {
        auto [a, b] = layer_span(pc, w);
        auto [c, d] = layer_span(pc, w + 1);
        int dim_next = d - c;
        std::vector<std::vector<int>> vecs;
        for (int i = a; i < b; ++i)
            vecs.push_back(coords_in_layer(pc, pc.power_relation(i), w + 1));
        if (pc.p() == 2) {
            // squaring is not linear on the layer at p=2; squares of products
            // of two section generators complete the generating set
            for (int i = a; i < b; ++i)
                for (int j = i + 1; j < b; ++j) {
                    PcElement x = pc.mul(pc.gen(i), pc.gen(j));
                    vecs.push_back(coords_in_layer(pc, pc.mul(x, x), w + 1));
                }
        }
        if (dim_next == 0 || vecs.empty()) {
            prof.push_back(0);
            continue;
        }
        FpMatrix m(pc.p(), int(vecs.size()), dim_next);
        for (int r = 0; r < m.rows; ++r)
            for (int cidx = 0; cidx < dim_next; ++cidx) m.at(r, cidx) = vecs[r][cidx];
        prof.push_back(fp_echelon(m).rank());
    }
    return prof;
}

} // namespace

Fingerprint fingerprint(const PcGroup& pc, std::uint64_t dense_cap) {
    Fingerprint f;
    f.p = pc.p();
    f.order_exponent = pc.order_exponent();
    f.pclass = pc.pclass();
    f.layer_sizes = pc.layer_sizes();
    f.abelian_invariants = pc_abelian_invariants(pc).torsion;
    f.power_rank_profile = power_profile(pc);

    bool dense_ok = true;
    std::uint64_t order = 1;
    for (int i = 0; i < pc.ngens(); ++i) {
        order *= std::uint64_t(pc.p());
        if (order > dense_cap) { dense_ok = false; break; }
    }
    if (dense_ok && pc.ngens() > 0) {
        int maxexp = 0;
        for (std::uint64_t r = 0; r < order; ++r)
            maxexp = std::max(maxexp, pc.element_order_exp(pc.unrank(r)));
        f.exponent_exp = maxexp;

        std::vector<char> seen(order, 0);
        long classes = 0;
        std::vector<std::uint64_t> stack;
        for (std::uint64_t r = 0; r < order; ++r) {
            if (seen[r]) continue;
            ++classes;
            seen[r] = 1;
            stack.push_back(r);
            while (!stack.empty()) {
                std::uint64_t cur = stack.back();
                stack.pop_back();
                PcElement x = pc.unrank(cur);
                for (int g = 0; g < pc.ngens(); ++g) {
                    PcElement y = pc.conj_by_gen(x, g);
                    std::uint64_t yr = pc.rank(y);
                    if (!seen[yr]) {
                        seen[yr] = 1;
                        stack.push_back(yr);
                    }
                }
            }
        }
        f.conjugacy_classes = classes;
    } else if (pc.ngens() == 0) {
        f.exponent_exp = 0;
        f.conjugacy_classes = 1;
    }
    return f;
}

} // namespace cgt
