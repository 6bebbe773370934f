#include "cgt/howie.hpp"

namespace cgt {

Presentation howie_presentation(int q, const DifferenceSet& d) {
    const int m = q * q + q + 1;
    if (d.m != m)
        throw domain_error("howie_presentation: difference set modulus does not match q^2+q+1");
    if (int(d.residues.size()) != q + 1)
        throw domain_error("howie_presentation: difference set must have q+1 residues");
    if (!is_perfect_difference_set(d.residues, m).perfect)
        throw domain_error("howie_presentation: set is not a perfect difference set");
    Presentation p;
    p.provenance = "howie(q=" + std::to_string(q) + ")";
    for (int i = 0; i < m; ++i) p.generators.push_back("x" + std::to_string(i));
    for (int lambda : d.residues)
        for (int i = 0; i < m; ++i) {
            int a = i;
            int b = (i + lambda) % m;
            int c = (i + lambda + q * lambda) % m;
            p.relators.push_back(Word({a + 1, b + 1, c + 1}));
        }
    p.validate();
    return p;
}

Presentation howie_presentation_deduped(int q, const DifferenceSet& d) {
    return dedup_cyclic_relators(howie_presentation(q, d));
}

} // namespace cgt
