#pragma once

// Numerical invariants of the surface (C_{T1} x C_{T2})/G attached to an
// unmixed ramification structure. Exact rational arithmetic throughout; no
// floating point anywhere.

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

/// Minimal exact rational on checked 64-bit integers.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool is_integral() const { return den == 1; }
    std::int64_t as_int() const;
    std::string to_string() const;
};

/// g(C_T) = 1 + (|G|/2) (r - 2 - sum 1/m_l). Exact rational; integral
/// whenever every order divides |G| (asserted in that case; a non-integral
/// result for divisor-consistent input signals bad type data).
Rat curve_genus(std::int64_t group_order, const std::vector<long>& type);

struct SurfaceInvariants {
    std::int64_t genus1 = 0;
    std::int64_t genus2 = 0;
    std::int64_t chi = 0;
    std::int64_t euler = 0; // e = 4 chi
    std::int64_t ksq = 0;   // K^2 = 8 chi
    std::int64_t pg = 0;    // chi = 1 + pg - q with q = 0
    std::int64_t q = 0;
    bool isogenous_to_higher_product = false; // both genera >= 2
};

/// Invariants from |G| and the two types. Throws domain_error when chi fails
/// to be integral for divisor-consistent input; the genus >= 2 condition is a
/// flag, not an error.
SurfaceInvariants surface_invariants(std::int64_t group_order, const std::vector<long>& typeA,
                                     const std::vector<long>& typeB);

} // namespace cgt
