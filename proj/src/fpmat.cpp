#include "cgt/fpmat.hpp"

namespace cgt {

int fp_inv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw domain_error("fp_inv: zero");
    // p is tiny here; brute force keeps this dependency-free.
    for (int x = 1; x < p; ++x)
        if ((long(a) * x) % p == 1) return x;
    throw domain_error("fp_inv: modulus not prime?");
}

Echelon fp_echelon(const FpMatrix& m) {
    Echelon out;
    out.rref = m;
    FpMatrix& a = out.rref;
    const int p = a.p;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int piv = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        int inv = fp_inv(a.at(row, col), p);
        if (inv != 1)
            for (int j = 0; j < a.cols; ++j) a.at(row, j) = int((long(a.at(row, j)) * inv) % p);
        for (int i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            int f = a.at(i, col);
            for (int j = 0; j < a.cols; ++j)
                a.set_mod(i, j, a.at(i, j) - long(f) * a.at(row, j));
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

} // namespace cgt
