#pragma once

// Abelianization of a finitely presented group: Smith normal form of the
// exponent-sum relation matrix.

#include "cgt/intmat.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

struct AbelianInvariants {
    std::vector<std::int64_t> torsion; // nontrivial invariant factors d_1 | d_2 | ...
    int free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    std::string to_string() const;
    /// |A| for finite A; throws domain_error if free rank > 0.
    std::int64_t order() const;
};

/// Exponent-sum matrix (one row per relator).
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

/// Subgroup spec for the derived subgroup (the abelianization kernel):
/// coset enumeration over pairwise generator commutators, augmented with
/// conjugates round by round until the enumerated index equals |G^ab|.
/// Requires a finite abelianization; throws budget_error when max_cosets or
/// the round limit is hit first.
SubgroupSpec derived_subgroup_spec(const Presentation& p, long max_cosets = 200000,
                                   int max_rounds = 6);

} // namespace cgt
