#include "cgt/cyclic_algebra.hpp"

#include <sstream>

namespace cgt {

std::string AlgebraElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < 3; ++j) {
        if (sigma_coeff[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << sigma_coeff[j].to_string("Y", "t") << ")";
        if (j == 1) os << "*s";
        if (j == 2) os << "*s^2";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclicAlgebra::CyclicAlgebra()
    : f27_(FieldSpec::make(3, 3)), f3_(FieldSpec::make(3, 1)) {}

AlgebraElement CyclicAlgebra::zero() const {
    AlgebraElement a;
    for (auto& c : a.sigma_coeff) c = LaurentPoly::zero(f27_);
    return a;
}

AlgebraElement CyclicAlgebra::one() const {
    AlgebraElement a = zero();
    a.sigma_coeff[0] = LaurentPoly::constant(FieldElement::one(f27_));
    return a;
}

AlgebraElement CyclicAlgebra::theta(long power) const {
    AlgebraElement a = zero();
    a.sigma_coeff[0] = LaurentPoly::constant(FieldElement::gen(f27_).pow(power));
    return a;
}

AlgebraElement CyclicAlgebra::sigma() const {
    AlgebraElement a = zero();
    a.sigma_coeff[1] = LaurentPoly::constant(FieldElement::one(f27_));
    return a;
}

AlgebraElement CyclicAlgebra::y_const(const LaurentPoly& c) const {
    AlgebraElement a = zero();
    a.sigma_coeff[0] = c;
    return a;
}

AlgebraElement CyclicAlgebra::term(const LaurentPoly& c, long tpow, int spow) const {
    if (spow < 0) throw domain_error("CyclicAlgebra::term: negative s power");
    LaurentPoly coeff = c.scalar_mul(FieldElement::gen(f27_).pow(tpow));
    // absorb s^3 = Y - 1
    LaurentPoly ym1 = LaurentPoly::monomial(f27_, 1, 1) - LaurentPoly::monomial(f27_, 1, 0);
    while (spow >= 3) {
        coeff = coeff * ym1;
        spow -= 3;
    }
    AlgebraElement a = zero();
    a.sigma_coeff[spow] = coeff;
    return a;
}

AlgebraElement CyclicAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r;
    for (int j = 0; j < 3; ++j) r.sigma_coeff[j] = a.sigma_coeff[j] + b.sigma_coeff[j];
    return r;
}

AlgebraElement CyclicAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r;
    for (int j = 0; j < 3; ++j) r.sigma_coeff[j] = a.sigma_coeff[j] - b.sigma_coeff[j];
    return r;
}

LaurentPoly CyclicAlgebra::frob_pow(const LaurentPoly& c, int times) const {
    LaurentPoly r = c;
    for (int i = 0; i < times; ++i) r = r.frobenius_coeffs();
    return r;
}

AlgebraElement CyclicAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    // (c s^u)(d s^v) = c F^u(d) s^{u+v},  s^3 = Y-1
    LaurentPoly ym1 = LaurentPoly::monomial(f27_, 1, 1) - LaurentPoly::monomial(f27_, 1, 0);
    AlgebraElement r = zero();
    for (int u = 0; u < 3; ++u) {
        if (a.sigma_coeff[u].is_zero()) continue;
        for (int v = 0; v < 3; ++v) {
            if (b.sigma_coeff[v].is_zero()) continue;
            LaurentPoly c = a.sigma_coeff[u] * frob_pow(b.sigma_coeff[v], u);
            int s = u + v;
            if (s >= 3) {
                c = c * ym1;
                s -= 3;
            }
            r.sigma_coeff[s] = r.sigma_coeff[s] + c;
        }
    }
    return r;
}

AlgebraElement CyclicAlgebra::scalar(const AlgebraElement& a, const LaurentPoly& c) const {
    AlgebraElement r;
    for (int j = 0; j < 3; ++j) r.sigma_coeff[j] = a.sigma_coeff[j] * c;
    return r;
}

bool CyclicAlgebra::is_zero(const AlgebraElement& a) const {
    return a.sigma_coeff[0].is_zero() && a.sigma_coeff[1].is_zero() && a.sigma_coeff[2].is_zero();
}

bool CyclicAlgebra::is_one(const AlgebraElement& a) const {
    return a.sigma_coeff[0].is_one() && a.sigma_coeff[1].is_zero() && a.sigma_coeff[2].is_zero();
}

bool CyclicAlgebra::is_central(const AlgebraElement& a) const {
    AlgebraElement t = theta(), s = sigma();
    return mul(a, t) == mul(t, a) && mul(a, s) == mul(s, a);
}

AlgebraElement CyclicAlgebra::alpha(int k) const {
    // t^-k (1+s) t^k = 1 + t^{2k} s
    return add(one(), term(LaurentPoly::monomial(f27_, 1, 0), 2L * k, 1));
}

AlgebraElement CyclicAlgebra::alpha_inv(int k) const {
    // (1/Y)(1 - t^{2k} s + t^{8k} s^2)
    LaurentPoly invY = LaurentPoly::monomial(f27_, 1, -1);
    AlgebraElement r = one();
    r = sub(r, term(LaurentPoly::monomial(f27_, 1, 0), 2L * k, 1));
    r = add(r, term(LaurentPoly::monomial(f27_, 1, 0), 8L * k, 2));
    return scalar(r, invY);
}

AlgebraElement CyclicAlgebra::conj_by_alpha(const AlgebraElement& z, int k) const {
    return mul(mul(alpha(k), z), alpha_inv(k));
}

AlgebraElement CyclicAlgebra::conj_formula(int i, int j, int k) const {
    // alpha_k t^i s^j alpha_k^-1 =
    //     t^i s^j / Y
    //   + (t^{3i+2k} - t^{i+2*3^j k}) s^{j+1} / Y
    //   + (t^{i+8*3^j k} - t^{3i+2k+2*3^{j+1} k}) s^{j+2} / Y
    //   + t^{3i+2k+8*3^{j+1} k} s^j (Y-1)/Y
    const long p3j = j == 0 ? 1 : (j == 1 ? 3 : 9);
    const long p3j1 = 3 * p3j;
    LaurentPoly invY = LaurentPoly::monomial(f27_, 1, -1);
    LaurentPoly ym1_overY = LaurentPoly::monomial(f27_, 1, 0) - LaurentPoly::monomial(f27_, 1, -1);
    AlgebraElement r = term(invY, i, j);
    r = add(r, sub(term(invY, 3L * i + 2L * k, j + 1), term(invY, i + 2L * p3j * k, j + 1)));
    r = add(r, sub(term(invY, i + 8L * p3j * k, j + 2),
                   term(invY, 3L * i + 2L * k + 2L * p3j1 * k, j + 2)));
    r = add(r, term(ym1_overY, 3L * i + 2L * k + 8L * p3j1 * k, j));
    return r;
}

bool CyclicAlgebra::conj_formula_check(int i, int j, int k) const {
    AlgebraElement direct = conj_by_alpha(term(LaurentPoly::monomial(f27_, 1, 0), i, j), k);
    return direct == conj_formula(i, j, k);
}

std::array<LaurentPoly, 9> CyclicAlgebra::coords(const AlgebraElement& a) const {
    std::array<LaurentPoly, 9> out;
    for (auto& c : out) c = LaurentPoly::zero(f3_);
    for (int j = 0; j < 3; ++j)
        for (const auto& [exp, fc] : a.sigma_coeff[j].terms())
            for (int i = 0; i < 3; ++i) {
                int digit = fc.coeffs()[i];
                if (digit == 0) continue;
                out[3 * j + i] =
                    out[3 * j + i] + LaurentPoly::monomial(f3_, digit, exp);
            }
    return out;
}

Matrix<LaurentPoly> CyclicAlgebra::conj_matrix(int k) const {
    Matrix<LaurentPoly> m(9, LaurentPoly::zero(f3_));
    for (int col = 0; col < 9; ++col) {
        int i = col % 3, j = col / 3;
        auto c = coords(conj_by_alpha(term(LaurentPoly::monomial(f27_, 1, 0), i, j), k));
        for (int row = 0; row < 9; ++row) m.at(row, col) = c[row];
    }
    return m;
}

Matrix<LaurentPoly> CyclicAlgebra::theta_conj_matrix() const {
    Matrix<LaurentPoly> m(9, LaurentPoly::zero(f3_));
    AlgebraElement t = theta(), tinv = theta(-1);
    for (int col = 0; col < 9; ++col) {
        int i = col % 3, j = col / 3;
        AlgebraElement z = term(LaurentPoly::monomial(f27_, 1, 0), i, j);
        auto c = coords(mul(mul(tinv, z), t));
        for (int row = 0; row < 9; ++row) m.at(row, col) = c[row];
    }
    return m;
}

} // namespace cgt
