#pragma once

// The p-quotient engine: class-1 quotient from the mod-p relation matrix,
// then repeated p-covering steps (central exponent-p tails on non-defining
// relations and images, consistency plus relator enforcement by GF(p)
// elimination) down to the maximal p-quotient of the requested class.

#include "cgt/pcgroup.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

struct PQuotientOptions {
    int max_gens = 512;            // memory guardrail
    int max_class = 8;             // configured class bound (raise explicitly)
    bool full_consistency = false; // debug mode: check all triples, no weight filter
};

struct PQuotient {
    PcGroup pc;
    std::vector<PcElement> images; // epimorphism image of each fp generator
    /// Class at which the lower exponent-p central series stabilized, or 0
    /// if the requested class was reached while the series was still growing.
    int stabilized_at = 0;

    PQuotient(PcGroup g, std::vector<PcElement> im) : pc(std::move(g)), images(std::move(im)) {}

    /// Every source relator must map to the identity.
    void verify_epimorphism(const Presentation& p) const;
};

/// Maximal p-quotient of p-class <= k with its epimorphism.
PQuotient p_quotient(const Presentation& p, int prime, int k,
                     const PQuotientOptions& opt = {});

/// Necessary condition for a homomorphism claim: true iff every relator of
/// src, with its generators substituted by the image words, maps to the
/// identity of the target's class-j p-quotient for every j <= k.
bool check_map_on_quotient(const Presentation& src, const std::vector<Word>& images,
                           const Presentation& target, int prime, int k,
                           const PQuotientOptions& opt = {});

/// All p^n elements, exactly once, in lexicographic exponent-vector order.
/// Refuses above the cap.
std::vector<PcElement> enumerate_elements(const PcGroup& pc,
                                          std::uint64_t cap = std::uint64_t(1) << 24);

} // namespace cgt
