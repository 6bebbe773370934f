#pragma once

// Dense matrices over GF(p) for small p, with deterministic reduced row
// echelon form (leftmost pivot column, lowest row index). This is the linear
// algebra backbone of the p-quotient step.

#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

struct FpMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> e; // row-major, entries in [0, p)

    FpMatrix() = default;
    FpMatrix(int p_, int r, int c) : p(p_), rows(r), cols(c), e(size_t(r) * c, 0) {}

    int& at(int i, int j) { return e[size_t(i) * cols + j]; }
    int at(int i, int j) const { return e[size_t(i) * cols + j]; }

    void set_mod(int i, int j, long v) {
        long r = v % p;
        at(i, j) = int(r < 0 ? r + p : r);
    }
};

struct Echelon {
    FpMatrix rref;
    std::vector<int> pivots; // pivot column of each nonzero row, ascending
    int rank() const { return int(pivots.size()); }
};

/// Reduced row echelon form with the leftmost-lowest-index pivot policy.
Echelon fp_echelon(const FpMatrix& m);

/// Modular inverse in GF(p).
int fp_inv(int a, int p);

} // namespace cgt
