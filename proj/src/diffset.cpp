#include "cgt/diffset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cgt/gf.hpp"

namespace cgt {

DifferenceCheck is_perfect_difference_set(const std::vector<int>& residues, int m) {
    DifferenceCheck out;
    if (m < 2) throw domain_error("is_perfect_difference_set: modulus too small");
    out.multiplicity.assign(m, 0);
    for (int a : residues)
        for (int b : residues) {
            if (a == b) continue;
            int d = ((a - b) % m + m) % m;
            ++out.multiplicity[d];
        }
    out.perfect = true;
    for (int d = 1; d < m; ++d)
        if (out.multiplicity[d] != 1) { out.perfect = false; break; }
    return out;
}

namespace {

// q = p^e for prime p, or 0 if q is not a prime power.
std::pair<int, int> prime_power_split(int q) {
    for (int p = 2; p <= q; ++p) {
        bool prime = p >= 2;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        int v = q, e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (v == 1) return {p, e};
        if (q % p == 0) return {0, 0};
    }
    return {0, 0};
}

} // namespace

DifferenceSet singer_difference_set(int q) {
    auto [p, e] = prime_power_split(q);
    if (p == 0) throw domain_error("singer_difference_set: q = " + std::to_string(q) + " is not a prime power");
    const int m = q * q + q + 1;
    if (e > 4) throw domain_error("singer_difference_set: q too large for desk scale");

    // F = GF(q^3) as GF(p^{3e}); K = the subfield of order q sits inside F^x
    // as the powers of g^m.
    auto F = FieldSpec::make(p, 3 * e);
    FieldElement g = primitive_element(F);
    auto logs = discrete_log_table(g);

    std::vector<FieldElement> K;
    K.push_back(FieldElement::zero(F));
    FieldElement gm = g.pow(m);
    FieldElement acc = FieldElement::one(F);
    for (int i = 0; i < q - 1; ++i) {
        K.push_back(acc);
        acc = acc * gm;
    }

    // Line = K-span of {1, g}; its nonzero vectors fall into q+1 classes mod K^x.
    std::set<int> res;
    for (const auto& a : K)
        for (const auto& b : K) {
            if (a.is_zero() && b.is_zero()) continue;
            FieldElement v = a + b * g;
            long lg = logs[v.index()];
            res.insert(int(lg % m));
        }
    if (int(res.size()) != q + 1)
        throw internal_error("singer_difference_set: line did not give q+1 residues");

    // q is a multiplier of the set and fixes some translate; return the
    // first fixed translate so the relator machine built on the result is
    // rotation-coherent (the bundled residue sets are of this kind).
    for (int s = 0; s < m; ++s) {
        std::set<int> shifted, scaled;
        for (int a : res) {
            int v = (a + s) % m;
            shifted.insert(v);
            scaled.insert(v * q % m);
        }
        if (shifted == scaled) {
            DifferenceSet d;
            d.m = m;
            d.residues.assign(shifted.begin(), shifted.end());
            return d;
        }
    }
    throw internal_error("singer_difference_set: no multiplier-fixed translate found");
}

std::vector<int> canonical_translate(const DifferenceSet& d) {
    std::vector<int> best;
    for (int s = 0; s < d.m; ++s) {
        std::vector<int> t;
        t.reserve(d.residues.size());
        for (int a : d.residues) t.push_back((a + s) % d.m);
        std::sort(t.begin(), t.end());
        if (best.empty() || t < best) best = t;
    }
    return best;
}

bool difference_sets_equivalent(const DifferenceSet& a, const DifferenceSet& b) {
    if (a.m != b.m || a.residues.size() != b.residues.size()) return false;
    std::vector<int> sb = b.residues;
    std::sort(sb.begin(), sb.end());
    for (int u = 1; u < a.m; ++u) {
        if (std::gcd(u, a.m) != 1) continue;
        for (int s = 0; s < a.m; ++s) {
            std::vector<int> t;
            t.reserve(a.residues.size());
            for (int x : a.residues) t.push_back((x * u + s) % a.m);
            std::sort(t.begin(), t.end());
            if (t == sb) return true;
        }
    }
    return false;
}

} // namespace cgt
