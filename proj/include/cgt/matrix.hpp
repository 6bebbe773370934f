#pragma once

// Square matrices over an exact coefficient ring (GF(p^n) elements or Laurent
// polynomials). Determinants use fraction-free Bareiss elimination, inverses
// the adjugate, so no fraction field is ever needed; over a Laurent ring the
// inverse exists in the ring iff the determinant is a unit.

#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/gf.hpp"
#include "cgt/laurent.hpp"

namespace cgt {

namespace detail {

inline FieldElement ring_zero(const FieldElement& like) { return FieldElement::zero(like.spec()); }
inline FieldElement ring_one(const FieldElement& like) { return FieldElement::one(like.spec()); }
inline FieldElement ring_exact_div(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
inline bool ring_is_unit(const FieldElement& a) { return !a.is_zero(); }
inline FieldElement ring_unit_inv(const FieldElement& a) { return a.inv(); }

inline LaurentPoly ring_zero(const LaurentPoly& like) { return LaurentPoly::zero(like.field()); }
inline LaurentPoly ring_one(const LaurentPoly& like) {
    return LaurentPoly::monomial(FieldElement::one(like.field()), 0);
}
inline LaurentPoly ring_exact_div(const LaurentPoly& a, const LaurentPoly& b) { return a.exact_div(b); }
inline bool ring_is_unit(const LaurentPoly& a) { return a.is_unit(); }
inline LaurentPoly ring_unit_inv(const LaurentPoly& a) { return a.unit_inv(); }

} // namespace detail

template <class R>
class Matrix {
public:
    Matrix(int dim, R zero) : n_(dim), e_(size_t(dim) * dim, zero) {
        if (dim <= 0) throw domain_error("Matrix: dimension must be positive");
    }

    static Matrix identity(int dim, const R& like) {
        Matrix m(dim, detail::ring_zero(like));
        for (int i = 0; i < dim; ++i) m.at(i, i) = detail::ring_one(like);
        return m;
    }

    int dim() const { return n_; }
    R& at(int i, int j) { return e_[size_t(i) * n_ + j]; }
    const R& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_identity() const {
        R zero = detail::ring_zero(e_[0]);
        R one = detail::ring_one(e_[0]);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? one : zero)) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (n_ != o.n_) throw domain_error("Matrix: dimension mismatch");
        Matrix r(n_, detail::ring_zero(e_[0]));
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const R& a = at(i, k);
                if (a == detail::ring_zero(a)) continue;
                for (int j = 0; j < n_; ++j)
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (n_ != o.n_) throw domain_error("Matrix: dimension mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }

    Matrix pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Matrix acc = identity(n_, e_[0]);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    /// Fraction-free Bareiss determinant.
    R det() const {
        Matrix m = *this;
        R prev = detail::ring_one(e_[0]);
        R zero = detail::ring_zero(e_[0]);
        bool neg = false;
        for (int k = 0; k < n_ - 1; ++k) {
            int piv = -1;
            for (int r = k; r < n_; ++r)
                if (m.at(r, k) != zero) { piv = r; break; }
            if (piv < 0) return zero;
            if (piv != k) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(k, j));
                neg = !neg;
            }
            for (int i = k + 1; i < n_; ++i) {
                for (int j = k + 1; j < n_; ++j)
                    m.at(i, j) = detail::ring_exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
                m.at(i, k) = zero;
            }
            prev = m.at(k, k);
        }
        R d = m.at(n_ - 1, n_ - 1);
        if (neg) {
            R z = detail::ring_zero(d);
            d = z - d;
        }
        return d;
    }

    /// Minor with row i, column j removed.
    Matrix minor_at(int i, int j) const {
        if (n_ == 1) throw domain_error("Matrix: 1x1 has no minors");
        Matrix m(n_ - 1, detail::ring_zero(e_[0]));
        for (int r = 0, mr = 0; r < n_; ++r) {
            if (r == i) continue;
            for (int c = 0, mc = 0; c < n_; ++c) {
                if (c == j) continue;
                m.at(mr, mc) = at(r, c);
                ++mc;
            }
            ++mr;
        }
        return m;
    }

    /// Inverse via adjugate over the ring. Requires the determinant to be a
    /// unit of the ring; throws domain_error otherwise.
    Matrix inverse() const {
        R d = det();
        if (!detail::ring_is_unit(d))
            throw domain_error("Matrix::inverse: determinant is not a unit of the ring");
        R dinv = detail::ring_unit_inv(d);
        Matrix r(n_, detail::ring_zero(e_[0]));
        if (n_ == 1) {
            r.at(0, 0) = dinv;
            return r;
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                R c = minor_at(j, i).det(); // adjugate transposes indices
                if ((i + j) % 2 == 1) c = detail::ring_zero(c) - c;
                r.at(i, j) = c * dinv;
            }
        return r;
    }

private:
    int n_;
    std::vector<R> e_;
};

using FieldMatrix = Matrix<FieldElement>;
using LaurentMatrix = Matrix<LaurentPoly>;

} // namespace cgt
