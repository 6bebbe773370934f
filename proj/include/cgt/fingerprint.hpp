#pragma once

// Isomorphism-invariant record of a finite p-group given by a consistent pcp.
// Equality of fingerprints is a necessary condition for isomorphism, not a
// sufficient one.

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/abelian.hpp"
#include "cgt/pcgroup.hpp"

namespace cgt {

struct Fingerprint {
    int p = 0;
    int order_exponent = 0;
    int pclass = 0;
    std::vector<int> layer_sizes;
    std::vector<std::int64_t> abelian_invariants;
    /// log_p of the group exponent; -1 when the dense cap skipped it.
    int exponent_exp = -1;
    /// Per weight-layer w: dimension of the subgroup generated by p-th powers
    /// of layer-w section elements inside layer w+1.
    std::vector<int> power_rank_profile;
    /// Conjugacy class count; -1 when the dense cap skipped it.
    long conjugacy_classes = -1;

    bool operator==(const Fingerprint& o) const;
    std::string to_string() const;
};

/// dense_cap bounds the exhaustive parts (exponent, conjugacy classes); above
/// it those fields are recorded as skipped, deterministically.
Fingerprint fingerprint(const PcGroup& pc, std::uint64_t dense_cap = std::uint64_t(1) << 14);

/// Abelianization read off the pc relations.
AbelianInvariants pc_abelian_invariants(const PcGroup& pc);

} // namespace cgt
