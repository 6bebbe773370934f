#include "cgt/laurent.hpp"

#include <sstream>

namespace cgt {

LaurentPoly LaurentPoly::constant(const FieldElement& c) {
    return monomial(c, 0);
}

LaurentPoly LaurentPoly::monomial(const FieldElement& c, int exp) {
    LaurentPoly r(c.spec());
    r.put(exp, c);
    return r;
}

LaurentPoly LaurentPoly::monomial(const FieldSpecPtr& f, long c, int exp) {
    long q = f->p();
    long v = ((c % q) + q) % q;
    FieldElement e = FieldElement::from_index(f, v);
    return monomial(e, exp);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw domain_error("LaurentPoly: degree of zero");
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw domain_error("LaurentPoly: degree of zero");
    return terms_.rbegin()->first;
}

FieldElement LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    if (it == terms_.end()) return FieldElement::zero(field_);
    return it->second;
}

void LaurentPoly::put(int exp, const FieldElement& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exp, c);
    } else {
        FieldElement s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

void LaurentPoly::check_field(const LaurentPoly& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw domain_error("LaurentPoly: operands over different fields");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_field(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_field(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_field(o);
    LaurentPoly r(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.put(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scalar_mul(const FieldElement& c) const {
    LaurentPoly r(field_);
    for (const auto& [e, v] : terms_) r.put(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shift(int by) const {
    LaurentPoly r(field_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + by, v);
    return r;
}

LaurentPoly LaurentPoly::unit_inv() const {
    if (!is_unit()) throw domain_error("LaurentPoly::unit_inv: not a unit");
    const auto& [e, c] = *terms_.begin();
    return monomial(c.inv(), -e);
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    check_field(d);
    if (d.is_zero()) throw domain_error("LaurentPoly::exact_div: division by zero");
    if (is_zero()) return LaurentPoly(field_);
    // Shift both to ordinary polynomials and do long division from the top.
    LaurentPoly num = *this, den = d;
    int sn = num.min_degree(), sd = den.min_degree();
    num = num.shift(-sn);
    den = den.shift(-sd);
    LaurentPoly q(field_);
    FieldElement dlc = den.terms().rbegin()->second;
    int dtop = den.max_degree();
    while (!num.is_zero() && num.max_degree() >= dtop) {
        int e = num.max_degree() - dtop;
        FieldElement c = num.terms().rbegin()->second * dlc.inv();
        LaurentPoly t = monomial(c, e);
        q = q + t;
        num = num - t * den;
    }
    if (!num.is_zero()) throw domain_error("LaurentPoly::exact_div: remainder is nonzero");
    return q.shift(sn - sd);
}

LaurentPoly LaurentPoly::frobenius_coeffs() const {
    LaurentPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.frobenius());
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_)) return false;
    return terms_ == o.terms_;
}

std::string LaurentPoly::to_string(const std::string& var, const std::string& cvar) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        std::string cs = c.to_string(cvar);
        bool composite = cs.find('+') != std::string::npos;
        if (e == 0) {
            os << cs;
        } else {
            if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace cgt
