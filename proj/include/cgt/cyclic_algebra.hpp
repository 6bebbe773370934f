#pragma once

// The 9-dimensional cyclic algebra A over GF(3)(Y): A = GF(27)-Laurent
// combinations of 1, s, s^2 where the symbol s satisfies s^3 = Y - 1 and
// s t s^-1 = t^3 for t the canonical generator of GF(27) (t^3 = t + 1).
// Elements are written over the basis t^i s^j, i,j in {0,1,2}, in the order
// 1, t, t^2, s, t s, t^2 s, s^2, t s^2, t^2 s^2.

#include <array>

#include "cgt/laurent.hpp"
#include "cgt/matrix.hpp"

namespace cgt {

class CyclicAlgebra; // shared context

class AlgebraElement {
public:
    AlgebraElement() = default;
    /// Coefficients of s^0, s^1, s^2, each a Laurent polynomial over GF(27).
    std::array<LaurentPoly, 3> sigma_coeff;

    bool operator==(const AlgebraElement& o) const { return sigma_coeff == o.sigma_coeff; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    std::string to_string() const;
};

class CyclicAlgebra {
public:
    CyclicAlgebra();

    const FieldSpecPtr& f27() const { return f27_; }
    const FieldSpecPtr& f3() const { return f3_; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement theta(long power = 1) const;       // t^power
    AlgebraElement sigma() const;                     // s
    AlgebraElement y_const(const LaurentPoly& c) const; // central Laurent scalar
    /// c * t^tpow * s^spow with s-powers >= 3 absorbed into (Y-1) factors.
    AlgebraElement term(const LaurentPoly& c, long tpow, int spow) const;

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scalar(const AlgebraElement& a, const LaurentPoly& c) const;

    bool is_zero(const AlgebraElement& a) const;
    bool is_one(const AlgebraElement& a) const;
    /// Commutes with both t and s.
    bool is_central(const AlgebraElement& a) const;

    /// alpha_k = t^-k (1 + s) t^k = 1 + t^{2k} s and its inverse
    /// (1/Y)(1 - t^{2k} s + t^{8k} s^2).
    AlgebraElement alpha(int k) const;
    AlgebraElement alpha_inv(int k) const;

    /// Direct conjugate alpha_k z alpha_k^-1.
    AlgebraElement conj_by_alpha(const AlgebraElement& z, int k) const;

    /// The displayed four-term closed form for alpha_k t^i s^j alpha_k^-1.
    AlgebraElement conj_formula(int i, int j, int k) const;

    /// True iff the closed form equals the directly computed conjugate.
    bool conj_formula_check(int i, int j, int k) const;

    /// 9x9 matrix over GF(3)-Laurent entries of z -> alpha_k z alpha_k^-1 in
    /// the basis above (columns are images of basis elements).
    Matrix<LaurentPoly> conj_matrix(int k) const;

    /// Matrix of z -> t^-1 z t (the theta-conjugation).
    Matrix<LaurentPoly> theta_conj_matrix() const;

    /// Basis coordinates: 9 GF(3)-Laurent polynomials.
    std::array<LaurentPoly, 9> coords(const AlgebraElement& a) const;

private:
    LaurentPoly frob_pow(const LaurentPoly& c, int times) const;
    FieldSpecPtr f27_;
    FieldSpecPtr f3_;
};

} // namespace cgt
