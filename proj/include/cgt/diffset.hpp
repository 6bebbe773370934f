#pragma once

// Perfect difference sets mod m = q^2 + q + 1 and the Singer construction
// from GF(q^3).

#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

struct DifferenceSet {
    int m = 0;                 // modulus q^2 + q + 1
    std::vector<int> residues; // sorted, reduced mod m
};

struct DifferenceCheck {
    bool perfect = false;
    std::vector<int> multiplicity; // multiplicity[d] for d = 1..m-1 at index d
};

/// True iff every nonzero residue mod m occurs exactly once as a difference
/// a_i - a_j. The multiplicity table is returned for diagnostics.
DifferenceCheck is_perfect_difference_set(const std::vector<int>& residues, int m);

/// Singer difference set for PG(2,q): discrete logs of the GF(q)-span of
/// {1, g} inside GF(q^3)^x, taken mod m, with g the fixed primitive element.
/// Deterministic for a fixed modulus choice. q must be a prime power with
/// GF(q^3) constructible here.
DifferenceSet singer_difference_set(int q);

/// Translation representative with smallest lexicographic residue list; used
/// for display only, equality elsewhere is plain set equality.
std::vector<int> canonical_translate(const DifferenceSet& d);

/// Equivalence under translation and multiplication by units mod m.
bool difference_sets_equivalent(const DifferenceSet& a, const DifferenceSet& b);

} // namespace cgt
