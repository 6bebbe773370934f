#pragma once

// Integer matrices and Smith normal form. Elimination runs on
// overflow-checked 64-bit integers and transparently restarts on GMP
// integers if any product would overflow; entries in the relation matrices
// here are tiny but can grow during elimination.

#include <cstdint>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> e; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), e(size_t(r) * c, 0) {}

    std::int64_t& at(int i, int j) { return e[size_t(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return e[size_t(i) * cols + j]; }
};

struct SmithNormalForm {
    /// Nonzero invariant factors d_1 | d_2 | ... | d_r (all positive; 1s kept).
    std::vector<std::int64_t> factors;
    /// Number of zero invariant factors (the free rank of the cokernel).
    int free_rank = 0;
};

/// Deterministic Smith normal form of an integer matrix.
SmithNormalForm smith_normal_form(const IntMatrix& m);

} // namespace cgt
