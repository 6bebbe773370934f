#include "cgt/intmat.hpp"

#include <algorithm>
#include <cstdlib>

#include <gmpxx.h>

namespace cgt {

namespace {

struct overflow_error_tag {};

// Checked 64-bit ops; throw the tag to trigger the GMP restart.
std::int64_t cmul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error_tag{};
    return r;
}
std::int64_t csub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error_tag{};
    return r;
}

template <class T> T t_abs(const T& v) { return v < 0 ? T(-v) : v; }
template <class T> bool t_nonzero(const T& v) { return v != 0; }

template <class T> T t_mul(const T& a, const T& b) { return a * b; }
template <> std::int64_t t_mul(const std::int64_t& a, const std::int64_t& b) { return cmul(a, b); }
template <class T> T t_sub(const T& a, const T& b) { return a - b; }
template <> std::int64_t t_sub(const std::int64_t& a, const std::int64_t& b) { return csub(a, b); }

// Classic row/column reduction to diagonal form, then divisibility fixing.
// Pivot selection is deterministic: smallest nonzero absolute value in the
// remaining block, ties broken by (row, col).
template <class T>
std::vector<T> snf_diagonal(std::vector<T> m, int rows, int cols) {
    auto at = [&](int i, int j) -> T& { return m[size_t(i) * cols + j]; };
    int k = 0;
    const int limit = std::min(rows, cols);
    while (k < limit) {
        // find pivot
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (t_nonzero(at(i, j))) {
                    if (pi < 0 || t_abs(at(i, j)) < t_abs(at(pi, pj))) { pi = i; pj = j; }
                }
        if (pi < 0) break; // rest is zero
        if (pi != k)
            for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(k, j));
        if (pj != k)
            for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, k));

        bool clean = true;
        // clear column k
        for (int i = k + 1; i < rows; ++i) {
            if (!t_nonzero(at(i, k))) continue;
            T q = at(i, k) / at(k, k);
            if (t_nonzero(q))
                for (int j = k; j < cols; ++j) at(i, j) = t_sub(at(i, j), t_mul(q, at(k, j)));
            if (t_nonzero(at(i, k))) clean = false;
        }
        // clear row k
        for (int j = k + 1; j < cols; ++j) {
            if (!t_nonzero(at(k, j))) continue;
            T q = at(k, j) / at(k, k);
            if (t_nonzero(q))
                for (int i = k; i < rows; ++i) at(i, j) = t_sub(at(i, j), t_mul(q, at(i, k)));
            if (t_nonzero(at(k, j))) clean = false;
        }
        if (!clean) continue; // remainder left somewhere; repick pivot
        // ensure pivot divides every remaining entry, else absorb a row
        bool divides = true;
        for (int i = k + 1; i < rows && divides; ++i)
            for (int j = k + 1; j < cols && divides; ++j)
                if (t_nonzero(at(i, j) % at(k, k))) {
                    for (int c = k; c < cols; ++c) at(k, c) = t_sub(at(k, c), t_sub(T(0), at(i, c)));
                    divides = false;
                }
        if (!divides) continue;
        ++k;
    }
    std::vector<T> diag;
    for (int i = 0; i < limit; ++i) {
        T v = t_abs(at(i, i));
        if (t_nonzero(v)) diag.push_back(v);
    }
    return diag;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SmithNormalForm out;
    if (m.rows == 0 || m.cols == 0) {
        out.free_rank = m.cols; // cokernel of the empty map
        return out;
    }
    std::vector<std::int64_t> diag64;
    bool ok64 = true;
    try {
        std::vector<std::int64_t> work(m.e.begin(), m.e.end());
        diag64 = snf_diagonal<std::int64_t>(std::move(work), m.rows, m.cols);
    } catch (const overflow_error_tag&) {
        ok64 = false;
    }
    if (ok64) {
        out.factors = std::move(diag64);
    } else {
        std::vector<mpz_class> work;
        work.reserve(m.e.size());
        for (auto v : m.e) work.emplace_back(static_cast<long>(v));
        auto diag = snf_diagonal<mpz_class>(std::move(work), m.rows, m.cols);
        for (auto& v : diag) {
            if (!v.fits_slong_p())
                throw budget_error("smith_normal_form: invariant factor exceeds 64 bits");
            out.factors.push_back(v.get_si());
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    out.free_rank = m.cols - int(out.factors.size());
    // The reduction above guarantees the chain; verify to fail loudly.
    for (size_t i = 0; i + 1 < out.factors.size(); ++i)
        if (out.factors[i + 1] % out.factors[i] != 0)
            throw internal_error("smith_normal_form: divisibility chain broken");
    return out;
}

} // namespace cgt
