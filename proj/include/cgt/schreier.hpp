#pragma once

// Reidemeister-Schreier: subgroup presentation on Schreier generators from a
// complete coset table, with Reidemeister rewriting of arbitrary subgroup
// elements. Optional light Tietze simplification eliminates generators via
// length-1/2 relators only; the raw form is always retained.

#include "cgt/cosets.hpp"

namespace cgt {

struct SubgroupPresentation {
    CosetTable table;
    Presentation raw;        // one generator per non-tree (coset, generator) pair
    Presentation simplified; // light Tietze applied (may equal raw)
    std::vector<Word> raw_to_simplified;          // per raw generator
    std::vector<std::pair<int, int>> schreier_pairs; // raw gen -> (coset, parent gen)

    /// Rewrite a parent-group word lying in the subgroup into raw Schreier
    /// generators. Throws domain_error if the word does not fix coset 0.
    Word rewrite_raw(const Word& parent_word) const;
    /// Same, expressed over the simplified presentation's generators.
    Word rewrite(const Word& parent_word) const;
};

SubgroupPresentation reidemeister_schreier(const CosetTable& table, bool simplify = true);

} // namespace cgt
