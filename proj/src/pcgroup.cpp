#include "cgt/pcgroup.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

std::vector<int> PcGroup::layer_sizes() const {
    std::vector<int> out(cls_ + 1, 0);
    for (int w : weight_) {
        if (w < 1 || w > cls_) throw internal_error("PcGroup: weight out of range");
        ++out[w];
    }
    return std::vector<int>(out.begin() + 1, out.end());
}

int PcGroup::append_generator(int weight, PcDefinition def) {
    drop_caches();
    weight_.push_back(weight);
    defs_.push_back(def);
    int idx = ngens() - 1;
    // extend stored relations; new generator starts central with trivial power
    for (auto& pw : power_) pw.e.resize(ngens(), 0);
    for (auto& row : comm_)
        for (auto& c : row) c.e.resize(ngens(), 0);
    power_.push_back(id());
    comm_.emplace_back();
    comm_.back().resize(idx, id());
    return idx;
}

void PcGroup::set_power(int i, PcElement v) {
    drop_caches();
    check_elem(v);
    power_[i] = std::move(v);
}

void PcGroup::set_comm(int j, int i, PcElement v) {
    if (j <= i) throw internal_error("PcGroup::set_comm: need j > i");
    drop_caches();
    check_elem(v);
    comm_[j][i] = std::move(v);
}

const PcElement& PcGroup::conj1(int i, int g) const {
    const size_t n = size_t(ngens());
    if (conj1_memo_.size() != n * n) {
        conj1_memo_.assign(n * n, PcElement{});
        conj1_have_.assign(n * n, 0);
    }
    size_t key = size_t(i) * n + size_t(g);
    if (!conj1_have_[key]) {
        conj1_have_[key] = 1; // set first: the recursion only touches higher indices
        conj1_memo_[key] = mul(gen(i), comm_[i][g]);
    }
    return conj1_memo_[key];
}

void PcGroup::check_elem(const PcElement& u) const {
    if (int(u.e.size()) != ngens()) throw internal_error("PcGroup: element size mismatch");
}

PcElement PcGroup::gen(int i) const {
    PcElement x = id();
    x.e[i] = 1;
    return x;
}

bool PcGroup::is_identity(const PcElement& x) const {
    return std::all_of(x.e.begin(), x.e.end(), [](int v) { return v == 0; });
}

// a_i conjugated by a_g^e for i > g, returned in normal form.
PcElement PcGroup::conj_gen_by_gen(int i, int g, int e) const {
    PcElement x = gen(i);
    for (int rep = 0; rep < e; ++rep) {
        // conjugate each letter of x by a_g: a_t ^ a_g = a_t * [a_t, a_g]
        PcElement out = id();
        for (int t = 0; t < ngens(); ++t) {
            int c = x.e[t];
            if (c == 0) continue;
            if (t <= g) throw internal_error("PcGroup: conjugation descended below pivot");
            const PcElement& base = conj1(t, g);
            for (int k = 0; k < c; ++k) out = mul(std::move(out), base);
        }
        x = std::move(out);
    }
    return x;
}

PcElement PcGroup::mul_gen(PcElement u, int g, int e) const {
    check_elem(u);
    if (e <= 0 || e >= p_) throw internal_error("PcGroup::mul_gen: exponent out of range");
    int top = -1;
    for (int i = ngens() - 1; i > g; --i)
        if (u.e[i] != 0) { top = i; break; }
    if (top < 0) {
        u.e[g] += e;
        if (u.e[g] >= p_) {
            u.e[g] -= p_;
            if (!is_identity(power_[g])) u = mul(std::move(u), power_[g]);
        }
        return u;
    }
    // strip the suffix above g, multiply, then push the conjugated suffix back
    std::vector<std::pair<int, int>> suffix;
    for (int i = g + 1; i < ngens(); ++i)
        if (u.e[i] != 0) {
            suffix.emplace_back(i, u.e[i]);
            u.e[i] = 0;
        }
    u = mul_gen(std::move(u), g, e);
    for (auto [i, c] : suffix) {
        PcElement x = conj_gen_by_gen(i, g, e);
        for (int k = 0; k < c; ++k) u = mul(std::move(u), x);
    }
    return u;
}

PcElement PcGroup::mul(PcElement u, const PcElement& v) const {
    check_elem(u);
    check_elem(v);
    for (int i = 0; i < ngens(); ++i)
        if (v.e[i] != 0) u = mul_gen(std::move(u), i, v.e[i]);
    return u;
}

PcElement PcGroup::inv(const PcElement& u) const {
    check_elem(u);
    PcElement w = id();
    PcElement cur = u;
    for (int i = 0; i < ngens(); ++i) {
        int e = cur.e[i];
        if (e == 0) continue;
        int k = p_ - e;
        w = mul_gen(std::move(w), i, k);
        cur = mul_gen(std::move(cur), i, k);
    }
    if (!is_identity(cur)) throw internal_error("PcGroup::inv: residue after sweep");
    return w;
}

PcElement PcGroup::pow(const PcElement& u, long e) const {
    if (e < 0) return pow(inv(u), -e);
    PcElement acc = id();
    PcElement base = u;
    while (e > 0) {
        if (e & 1) acc = mul(std::move(acc), base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

PcElement PcGroup::conj(const PcElement& x, const PcElement& h) const {
    return mul(mul(inv(h), x), h);
}

const PcElement& PcGroup::gen_inverse(int g) const {
    const size_t n = size_t(ngens());
    if (invgen_memo_.size() != n) {
        invgen_memo_.assign(n, PcElement{});
        invgen_have_.assign(n, 0);
    }
    if (!invgen_have_[g]) {
        invgen_memo_[g] = inv(gen(g));
        invgen_have_[g] = 1;
    }
    return invgen_memo_[g];
}

PcElement PcGroup::conj_by_gen(const PcElement& x, int g) const {
    return mul(mul(gen_inverse(g), x), gen(g));
}

PcElement PcGroup::commutator(const PcElement& x, const PcElement& y) const {
    return mul(inv(mul(y, x)), mul(x, y));
}

PcElement PcGroup::eval_word(const Word& w, const std::vector<PcElement>& images) const {
    PcElement acc = id();
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        if (g >= int(images.size())) throw domain_error("eval_word: image missing");
        acc = mul(std::move(acc), l > 0 ? images[g] : inv(images[g]));
    }
    return acc;
}

PcElement PcGroup::collect_word(const Word& w) const {
    PcElement acc = id();
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        if (g >= ngens()) throw domain_error("collect_word: generator out of range");
        acc = mul_gen(std::move(acc), g, l > 0 ? 1 : p_ - 1);
        if (l < 0 && !is_identity(power_[g])) {
            // a_g^-1 = a_g^{p-1} (a_g^p)^-1
            acc = mul(std::move(acc), inv(power_[g]));
        }
    }
    return acc;
}

int PcGroup::element_order_exp(const PcElement& x) const {
    PcElement cur = x;
    int t = 0;
    while (!is_identity(cur)) {
        cur = pow(cur, p_);
        ++t;
        if (t > ngens()) throw internal_error("element_order: exceeded group exponent bound");
    }
    return t;
}

long PcGroup::element_order(const PcElement& x) const {
    int t = element_order_exp(x);
    long o = 1;
    for (int i = 0; i < t; ++i) {
        if (o > (1L << 60) / p_) throw budget_error("element_order: overflow");
        o *= p_;
    }
    return o;
}

std::uint64_t PcGroup::order_u64() const {
    std::uint64_t o = 1;
    for (int i = 0; i < ngens(); ++i) {
        if (o > (std::uint64_t(1) << 62) / std::uint64_t(p_))
            throw budget_error("PcGroup: order exceeds 2^62");
        o *= std::uint64_t(p_);
    }
    return o;
}

std::uint64_t PcGroup::rank(const PcElement& x) const {
    std::uint64_t r = 0;
    for (int i = 0; i < ngens(); ++i) r = r * std::uint64_t(p_) + std::uint64_t(x.e[i]);
    return r;
}

PcElement PcGroup::unrank(std::uint64_t r) const {
    PcElement x = id();
    for (int i = ngens() - 1; i >= 0; --i) {
        x.e[i] = int(r % std::uint64_t(p_));
        r /= std::uint64_t(p_);
    }
    return x;
}

std::string PcGroup::consistency_failure(bool full) const {
    const int n = ngens();
    const int L = cls_;
    auto wsum_ok = [&](int w) { return full || w <= L; };
    auto fail = [&](const std::string& what, const PcElement& a, const PcElement& b) {
        if (a == b) return std::string();
        std::ostringstream os;
        os << what << ": ";
        for (int v : a.e) os << v;
        os << " vs ";
        for (int v : b.e) os << v;
        return os.str();
    };
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                if (!wsum_ok(weight_[k] + weight_[j] + weight_[i])) continue;
                PcElement lhs = mul(gen(k), mul(gen(j), gen(i)));
                PcElement rhs = mul(mul(gen(k), gen(j)), gen(i));
                auto msg = fail("assoc(" + std::to_string(k) + "," + std::to_string(j) + "," +
                                    std::to_string(i) + ")",
                                lhs, rhs);
                if (!msg.empty()) return msg;
            }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (!wsum_ok(weight_[j] + weight_[i] + 1)) continue;
            // a_j^p * a_i two ways
            PcElement lhs = mul(power_[j], gen(i));
            PcElement aj_pm1 = id();
            aj_pm1.e[j] = p_ - 1;
            PcElement rhs = mul(aj_pm1, mul(gen(j), gen(i)));
            auto msg = fail("power-left(" + std::to_string(j) + "," + std::to_string(i) + ")",
                            lhs, rhs);
            if (!msg.empty()) return msg;
            // a_j * a_i^p two ways
            PcElement ai_pm1 = id();
            ai_pm1.e[i] = p_ - 1;
            lhs = mul(gen(j), power_[i]);
            rhs = mul(mul(gen(j), gen(i)), ai_pm1);
            msg = fail("power-right(" + std::to_string(j) + "," + std::to_string(i) + ")", lhs,
                       rhs);
            if (!msg.empty()) return msg;
        }
    for (int i = 0; i < n; ++i) {
        if (!wsum_ok(2 * weight_[i] + 1)) continue;
        PcElement lhs = mul(gen(i), power_[i]);
        PcElement rhs = mul(power_[i], gen(i));
        auto msg = fail("power-self(" + std::to_string(i) + ")", lhs, rhs);
        if (!msg.empty()) return msg;
    }
    return std::string();
}

void PcGroup::warm_caches() const {
    for (int j = 1; j < ngens(); ++j)
        for (int g = 0; g < j; ++g) conj1(j, g);
    for (int g = 0; g < ngens(); ++g) gen_inverse(g);
}

std::string PcGroup::describe() const {
    std::ostringstream os;
    os << "pc group: p=" << p_ << " class=" << cls_ << " order=" << p_ << "^" << ngens();
    auto layers = layer_sizes();
    os << " layers=[";
    for (size_t i = 0; i < layers.size(); ++i) os << (i ? "," : "") << layers[i];
    os << "]";
    return os.str();
}

} // namespace cgt
