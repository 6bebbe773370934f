#include "cgt/gf.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

namespace {

int norm_mod(long v, int p) {
    long r = v % p;
    return int(r < 0 ? r + p : r);
}

// Dense polynomial helpers over GF(p); vectors low-to-high, no trailing zeros.
using Poly = std::vector<int>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = norm_mod(r[i + j] + long(a[i]) * b[j], p);
    poly_trim(r);
    return r;
}

// Remainder of a modulo monic divisor d.
Poly poly_rem(Poly a, const Poly& d, int p) {
    poly_trim(a);
    const size_t dd = d.size() - 1; // degree of monic d
    while (a.size() >= d.size()) {
        int lead = a.back();
        size_t shift = a.size() - d.size();
        if (lead != 0)
            for (size_t i = 0; i < dd; ++i)
                a[shift + i] = norm_mod(a[shift + i] - long(lead) * d[i], p);
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dd) break;
    }
    return a;
}

bool poly_is_irreducible(const Poly& monic, int p) {
    const int n = int(monic.size()) - 1;
    if (n <= 0) return false;
    if (monic[0] == 0) return n == 1; // divisible by x
    // Trial division by all monic polynomials of degree 1..n/2.
    for (int d = 1; 2 * d <= n; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            long v = idx;
            for (int i = 0; i < d; ++i) { div[i] = int(v % p); v /= p; }
            div[d] = 1;
            Poly r = poly_rem(monic, div, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; long(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec::FieldSpec(int p, int n, std::vector<int> mod)
    : p_(p), n_(n), mod_(std::move(mod)) {
    order_ = 1;
    for (int i = 0; i < n_; ++i) order_ *= p_;
}

FieldSpecPtr FieldSpec::make(int p, int n, std::vector<int> modulus_low_coeffs) {
    if (!is_prime(p)) throw domain_error("FieldSpec: p must be prime, got " + std::to_string(p));
    if (n < 1) throw domain_error("FieldSpec: extension degree must be >= 1");
    if (int(modulus_low_coeffs.size()) != n)
        throw domain_error("FieldSpec: modulus must have exactly n low coefficients");
    for (int& c : modulus_low_coeffs) c = norm_mod(c, p);
    if (n >= 1) {
        Poly monic = modulus_low_coeffs;
        monic.push_back(1);
        if (n > 1 && !poly_is_irreducible(monic, p))
            throw domain_error("FieldSpec: modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    return FieldSpecPtr(new FieldSpec(p, n, std::move(modulus_low_coeffs)));
}

FieldSpecPtr FieldSpec::make(int p, int n) {
    if (n == 1) return make(p, 1, {0});
    if (p == 3 && n == 3) return make(3, 3, {2, 2, 0}); // x^3 - x - 1: t^3 = t + 1
    long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        Poly low(n, 0);
        long v = idx;
        for (int i = 0; i < n; ++i) { low[i] = int(v % p); v /= p; }
        Poly monic = low;
        monic.push_back(1);
        if (poly_is_irreducible(monic, p)) return make(p, n, low);
    }
    throw internal_error("FieldSpec: no irreducible modulus found"); // unreachable
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && n_ == other.n_ && mod_ == other.mod_;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(" << order_ << ")";
    if (n_ > 1) {
        os << " = GF(" << p_ << ")[t]/(t^" << n_;
        for (int i = n_ - 1; i >= 0; --i)
            if (mod_[i] != 0) os << " + " << mod_[i] << (i ? "*t^" + std::to_string(i) : "");
        os << ")";
    }
    return os.str();
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<int> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
    if (!spec_) throw domain_error("FieldElement: null spec");
    c_.resize(spec_->n(), 0);
    for (int& v : c_) v = norm_mod(v, spec_->p());
}

FieldElement FieldElement::zero(const FieldSpecPtr& spec) {
    return FieldElement(spec, std::vector<int>(spec->n(), 0));
}

FieldElement FieldElement::one(const FieldSpecPtr& spec) {
    std::vector<int> c(spec->n(), 0);
    c[0] = 1;
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::gen(const FieldSpecPtr& spec) {
    if (spec->n() < 2) throw domain_error("FieldElement::gen: prime field has no extension generator");
    std::vector<int> c(spec->n(), 0);
    c[1] = 1;
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::from_index(const FieldSpecPtr& spec, long index) {
    if (index < 0 || index >= spec->order())
        throw domain_error("FieldElement::from_index: index out of range");
    std::vector<int> c(spec->n(), 0);
    for (int i = 0; i < spec->n(); ++i) { c[i] = int(index % spec->p()); index /= spec->p(); }
    return FieldElement(spec, std::move(c));
}

long FieldElement::index() const {
    long v = 0;
    for (int i = spec_->n() - 1; i >= 0; --i) v = v * spec_->p() + c_[i];
    return v;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](int v) { return v == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!spec_ || !o.spec_ || !spec_->same(*o.spec_))
        throw domain_error("FieldElement: operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = norm_mod(c_[i] + o.c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = norm_mod(c_[i] - o.c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = norm_mod(-c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    Poly prod = poly_mul(c_, o.c_, spec_->p());
    Poly monic = spec_->modulus();
    monic.push_back(1);
    Poly r = poly_rem(std::move(prod), monic, spec_->p());
    r.resize(spec_->n(), 0);
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement base = *this, acc = one(spec_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw domain_error("FieldElement::inv: zero is not invertible");
    return pow(spec_->order() - 2); // Fermat in GF(q)
}

FieldElement FieldElement::frobenius() const {
    return pow(spec_->p());
}

long FieldElement::mult_order() const {
    if (is_zero()) throw domain_error("mult_order of zero");
    FieldElement acc = *this;
    long ord = 1;
    while (!acc.is_one()) {
        acc = acc * *this;
        ++ord;
        if (ord > spec_->order())
            throw internal_error("mult_order: did not terminate");
    }
    return ord;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return spec_ && o.spec_ && spec_->same(*o.spec_) && c_ == o.c_;
}

std::string FieldElement::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < int(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElement primitive_element(const FieldSpecPtr& spec) {
    const long q = spec->order();
    for (long idx = 1; idx < q; ++idx) {
        FieldElement e = FieldElement::from_index(spec, idx);
        if (e.mult_order() == q - 1) return e;
    }
    throw internal_error("primitive_element: none found"); // unreachable for a field
}

std::vector<long> discrete_log_table(const FieldElement& g) {
    const auto& spec = g.spec();
    const long q = spec->order();
    if (g.mult_order() != q - 1) throw domain_error("discrete_log_table: base is not primitive");
    std::vector<long> table(q, -1);
    FieldElement acc = FieldElement::one(spec);
    for (long k = 0; k < q - 1; ++k) {
        table[acc.index()] = k;
        acc = acc * g;
    }
    return table;
}

} // namespace cgt
