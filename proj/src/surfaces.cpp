#include "cgt/surfaces.hpp"

#include <numeric>
#include <sstream>

namespace cgt {

namespace {

std::int64_t cmul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw budget_error("Rat: 64-bit overflow");
    return r;
}
std::int64_t cadd(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw budget_error("Rat: 64-bit overflow");
    return r;
}

} // namespace

Rat::Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw domain_error("Rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(cadd(cmul(num, o.den), cmul(o.num, den)), cmul(den, o.den));
}
Rat Rat::operator-(const Rat& o) const {
    return Rat(cadd(cmul(num, o.den), -cmul(o.num, den)), cmul(den, o.den));
}
Rat Rat::operator*(const Rat& o) const { return Rat(cmul(num, o.num), cmul(den, o.den)); }
Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw domain_error("Rat: division by zero");
    return Rat(cmul(num, o.den), cmul(den, o.num));
}

std::int64_t Rat::as_int() const {
    if (!is_integral()) throw domain_error("Rat: not an integer: " + to_string());
    return num;
}

std::string Rat::to_string() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

Rat curve_genus(std::int64_t group_order, const std::vector<long>& type) {
    if (group_order < 1) throw domain_error("curve_genus: group order must be >= 1");
    if (type.empty()) throw domain_error("curve_genus: empty type");
    bool divisor_consistent = true;
    Rat sum(0);
    for (long m : type) {
        if (m < 2) throw domain_error("curve_genus: orders must be >= 2");
        sum = sum + Rat(1, m);
        if (group_order % m != 0) divisor_consistent = false;
    }
    Rat r = Rat(1) + Rat(group_order, 2) * (Rat(std::int64_t(type.size()) - 2) - sum);
    if (divisor_consistent && !r.is_integral())
        throw domain_error("curve_genus: non-integral genus " + r.to_string() +
                           " for divisor-consistent input (bad type data)");
    return r;
}

SurfaceInvariants surface_invariants(std::int64_t group_order, const std::vector<long>& typeA,
                                     const std::vector<long>& typeB) {
    SurfaceInvariants out;
    Rat g1 = curve_genus(group_order, typeA);
    Rat g2 = curve_genus(group_order, typeB);
    Rat chi = (g1 - Rat(1)) * (g2 - Rat(1)) / Rat(group_order);
    if (!g1.is_integral() || !g2.is_integral() || !chi.is_integral())
        throw domain_error("surface_invariants: non-integral genus or chi");
    out.genus1 = g1.as_int();
    out.genus2 = g2.as_int();
    out.chi = chi.as_int();
    out.euler = 4 * out.chi;
    out.ksq = 8 * out.chi;
    out.q = 0;
    out.pg = out.chi - 1; // chi = 1 + pg - q, regular case
    out.isogenous_to_higher_product = out.genus1 >= 2 && out.genus2 >= 2;
    return out;
}

} // namespace cgt
