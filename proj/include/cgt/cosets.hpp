#pragma once

// Todd-Coxeter coset enumeration, HLT strategy with relator filling and
// standard coincidence processing. Coset numbering is deterministic
// (first-undefined, lowest first); the subgroup is coset 0.

#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

struct CosetTable {
    Presentation parent;
    std::vector<Word> subgroup_generators;
    /// tab[coset][2g] = coset * generator g, tab[coset][2g+1] = coset * g^-1.
    std::vector<std::vector<int>> tab;
    bool complete = false;

    int index() const { return int(tab.size()); }
    int ngens() const { return int(parent.generators.size()); }

    /// Action of a signed letter (+-(g+1)) on a coset.
    int act(int coset, int letter) const;
    /// Action of a word; -1 if it runs off an undefined entry.
    int act_word(int coset, const Word& w) const;
};

/// Enumerate cosets of <subgroup_generators> in the presented group.
/// Throws budget_error if more than max_cosets cosets would be defined.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_generators,
                           long max_cosets = 100000);

CosetTable coset_enumerate(const SubgroupSpec& s, long max_cosets = 100000);

} // namespace cgt
