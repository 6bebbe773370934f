#pragma once

// Exact arithmetic in GF(p^n), with p a small prime. Elements are coefficient
// vectors over GF(p) reduced modulo a fixed monic irreducible polynomial.
// Everything is immutable after construction and safe to share across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Description of GF(p^n): prime p, degree n, monic modulus of degree n.
/// The modulus is stored low-to-high without the leading 1, so x^n = -modulus(x).
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Explicit modulus; coeffs are the n low-order coefficients of a monic
    /// degree-n polynomial over GF(p). Throws if the polynomial is reducible.
    static FieldSpecPtr make(int p, int n, std::vector<int> modulus_low_coeffs);

    /// Default modulus for GF(p^n). GF(27) is fixed to x^3 - x - 1 (so the
    /// canonical generator t satisfies t^3 = t + 1); other fields get the
    /// first irreducible monic polynomial in lexicographic coefficient order.
    static FieldSpecPtr make(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    long order() const { return order_; } // p^n
    const std::vector<int>& modulus() const { return mod_; }

    bool same(const FieldSpec& other) const;
    std::string describe() const;

private:
    FieldSpec(int p, int n, std::vector<int> mod);
    int p_, n_;
    long order_;
    std::vector<int> mod_; // low n coefficients of the monic modulus
};

/// Element of GF(p^n): coefficient vector of length n over GF(p), low first.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldSpecPtr spec, std::vector<int> coeffs);

    static FieldElement zero(const FieldSpecPtr& spec);
    static FieldElement one(const FieldSpecPtr& spec);
    /// The class of x in GF(p)[x]/(modulus); generates the extension as a
    /// field (it need not generate the multiplicative group).
    static FieldElement gen(const FieldSpecPtr& spec);
    /// Element from an integer 0..p^n-1 read as base-p digits (low first).
    static FieldElement from_index(const FieldSpecPtr& spec, long index);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<int>& coeffs() const { return c_; }
    long index() const; // inverse of from_index

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const; // throws domain_error on zero
    FieldElement pow(long e) const;
    FieldElement frobenius() const; // x -> x^p

    /// Multiplicative order (element must be nonzero).
    long mult_order() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "t") const;

private:
    void check_same(const FieldElement& o) const;
    FieldSpecPtr spec_;
    std::vector<int> c_;
};

/// First primitive element in from_index order. Deterministic.
FieldElement primitive_element(const FieldSpecPtr& spec);

/// Discrete log table base g over all of GF(p^n)^x: maps element index -> k
/// with g^k = element. g must be primitive.
std::vector<long> discrete_log_table(const FieldElement& g);

} // namespace cgt
