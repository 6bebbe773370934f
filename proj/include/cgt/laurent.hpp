#pragma once

// Sparse Laurent polynomials in one variable Y over GF(p^n). Canonical form:
// sorted exponents, no stored zero coefficients. Equality is representation
// equality after canonicalization.

#include <map>
#include <string>

#include "cgt/gf.hpp"

namespace cgt {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(FieldSpecPtr field) : field_(std::move(field)) {}

    static LaurentPoly zero(const FieldSpecPtr& f) { return LaurentPoly(f); }
    static LaurentPoly constant(const FieldElement& c);
    static LaurentPoly monomial(const FieldElement& c, int exp);
    /// c * Y^exp with c an integer lifted into the field.
    static LaurentPoly monomial(const FieldSpecPtr& f, long c, int exp);

    const FieldSpecPtr& field() const { return field_; }
    const std::map<int, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Units of GF(q)[Y, 1/Y] are the nonzero monomials.
    bool is_unit() const { return terms_.size() == 1 && !terms_.begin()->second.is_zero(); }

    int min_degree() const; // throws on zero
    int max_degree() const; // throws on zero

    FieldElement coeff(int exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scalar_mul(const FieldElement& c) const;
    LaurentPoly shift(int by) const; // multiply by Y^by

    /// Inverse of a unit monomial; throws domain_error otherwise.
    LaurentPoly unit_inv() const;

    /// Exact division; throws domain_error if the division has a remainder.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    /// Apply the field Frobenius x -> x^p to every coefficient.
    LaurentPoly frobenius_coeffs() const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "Y", const std::string& cvar = "t") const;

private:
    void put(int exp, const FieldElement& c); // adds, dropping zeros
    void check_field(const LaurentPoly& o) const;
    FieldSpecPtr field_;
    std::map<int, FieldElement> terms_;
};

} // namespace cgt
