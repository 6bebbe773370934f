#pragma once

// Spherical systems of generators, their Sigma-sets (union of all conjugates
// of the cyclic subgroups), disjointness certificates, the bundled tuple
// constructions, and search for unmixed ramification structures.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/pcgroup.hpp"

namespace cgt {

struct SphericalCheck {
    bool ok = false;
    std::string diagnosis; // empty when ok
};

/// Nontriviality, product-one, and generation (weight-1 span, equivalent to
/// full generation for p-groups by the Burnside basis theorem).
SphericalCheck is_spherical_system(const PcGroup& pc, const std::vector<PcElement>& tuple);

/// Orders of the entries, sorted ascending.
std::vector<long> system_type(const PcGroup& pc, const std::vector<PcElement>& tuple);

/// Dense element set as a bitset over lexicographic ranks.
struct ElementSet {
    std::uint64_t universe = 0;
    std::vector<std::uint64_t> bits;

    void resize(std::uint64_t n);
    void insert(std::uint64_t r) { bits[r >> 6] |= std::uint64_t(1) << (r & 63); }
    bool contains(std::uint64_t r) const {
        return (bits[r >> 6] >> (r & 63)) & 1;
    }
    std::uint64_t count() const;
    /// Size of the intersection.
    std::uint64_t intersection_count(const ElementSet& o) const;
};

/// Sigma(T): all conjugates of all powers of the entries, identity included.
/// Exact; refuses above the dense cap.
ElementSet sigma_set(const PcGroup& pc, const std::vector<PcElement>& tuple,
                     std::uint64_t dense_cap = std::uint64_t(1) << 24);

struct DisjointnessCertificate {
    bool disjoint = false;
    std::uint64_t sigma1_size = 0;
    std::uint64_t sigma2_size = 0;
    std::uint64_t intersection_size = 0; // includes the identity
};

DisjointnessCertificate disjoint_systems(const PcGroup& pc, const std::vector<PcElement>& t1,
                                         const std::vector<PcElement>& t2,
                                         std::uint64_t dense_cap = std::uint64_t(1) << 24);

struct RamificationStructure {
    std::vector<PcElement> t1, t2;
    std::vector<long> type1, type2;
    DisjointnessCertificate certificate;
};

/// Full verification of a candidate pair.
std::optional<RamificationStructure> verify_structure(const PcGroup& pc,
                                                      const std::vector<PcElement>& t1,
                                                      const std::vector<PcElement>& t2,
                                                      std::uint64_t dense_cap = std::uint64_t(1)
                                                                                << 24);

/// The bundled tuple constructions.
///  - "thm-main": T1 = (x0,x1,x2,x), T2 = (y0,y1,y2,y) from images of the
///    index-3 subgroup generators (images must be given in order x0,x1,x2).
///  - "T2-pair": T1 = [g0,g1,(g0 g1)^-1], T2 = [g0 g1^2, g0 g1^3, (...)^-1]
///    from two designated generator images (the rank-2 abelian pattern, where
///    product-one forces the third entries).
std::pair<std::vector<PcElement>, std::vector<PcElement>> paper_tuples(
    const std::string& name, const PcGroup& pc, const std::vector<PcElement>& gen_images,
    ConjConvention cc = ConjConvention::RightAction);

enum class SearchStrategy { Exhaustive, Randomized };

struct SearchOptions {
    SearchStrategy strategy = SearchStrategy::Exhaustive;
    std::uint64_t seed = 1;
    long budget = 1000000;       // candidate pair evaluations
    long max_results = 16;
    long max_candidates = 20000; // per-side tuple cap
    std::uint64_t dense_cap = std::uint64_t(1) << 24;
    int workers = 0;             // 0 = hardware concurrency
    bool t1_up_to_conjugacy = true; // fix first entry up to conjugacy (sound for existence)
};

struct SearchResult {
    std::vector<RamificationStructure> structures;
    bool exhausted = false; // false when a budget or cap truncated the search
    long pairs_tested = 0;
};

/// Deterministic given (strategy, seed); every returned structure passes
/// verify_structure on an independent code path.
SearchResult search_structures(const PcGroup& pc, const std::vector<long>& typeA,
                               const std::vector<long>& typeB, const SearchOptions& opt = {});

} // namespace cgt
