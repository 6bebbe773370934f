#include "cgt/abelian.hpp"

#include <sstream>

#include "cgt/cosets.hpp"

namespace cgt {

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << ")";
    if (free_rank > 0) os << " + Z^" << free_rank;
    return os.str();
}

std::int64_t AbelianInvariants::order() const {
    if (free_rank > 0) throw domain_error("AbelianInvariants::order: group is infinite");
    std::int64_t o = 1;
    for (auto d : torsion) o *= d;
    return o;
}

IntMatrix relation_matrix(const Presentation& p) {
    p.validate();
    IntMatrix m(int(p.relators.size()), int(p.generators.size()));
    for (int r = 0; r < m.rows; ++r)
        for (int l : p.relators[r].letters) {
            int g = std::abs(l) - 1;
            m.at(r, g) += l > 0 ? 1 : -1;
        }
    return m;
}

AbelianInvariants abelianization(const Presentation& p) {
    auto snf = smith_normal_form(relation_matrix(p));
    AbelianInvariants out;
    out.free_rank = snf.free_rank;
    for (auto d : snf.factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

SubgroupSpec derived_subgroup_spec(const Presentation& p, long max_cosets, int max_rounds) {
    auto ab = abelianization(p);
    if (ab.free_rank != 0)
        throw domain_error("derived_subgroup_spec: abelianization is infinite");
    const std::int64_t target = ab.order();
    if (target > max_cosets)
        throw budget_error("derived_subgroup_spec: |G^ab| exceeds the coset budget");

    const int n = int(p.generators.size());
    std::vector<Word> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Word a = Word::gen(i), b = Word::gen(j);
            gens.push_back(a.inverse() * b.inverse() * a * b);
        }
    // all words lie in [G,G], so the enumerated index can only be too large;
    // equality with |G^ab| certifies that the words generate the kernel
    for (int round = 0; round < max_rounds; ++round) {
        try {
            auto table = coset_enumerate(p, gens, max_cosets);
            if (table.index() == target) {
                SubgroupSpec s;
                s.parent = p;
                s.parent_name = p.provenance;
                s.generators = gens;
                s.provenance = "derived subgroup (index " + std::to_string(target) + ")";
                return s;
            }
        } catch (const budget_error&) {
            // fall through to augmentation
        }
        std::vector<Word> more;
        for (const auto& w : gens)
            for (int g = 0; g < n; ++g) more.push_back(w.conj(Word::gen(g)));
        gens.insert(gens.end(), more.begin(), more.end());
    }
    throw budget_error("derived_subgroup_spec: augmentation rounds exhausted");
}

} // namespace cgt
