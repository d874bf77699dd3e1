#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torusband/gf2u.hpp"

namespace torusband {

struct MatrixGF2U {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<PolyGF2U> entries;  // row-major, rows*cols

    MatrixGF2U() = default;
    MatrixGF2U(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    static MatrixGF2U identity(std::size_t n);

    PolyGF2U& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const PolyGF2U& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    friend MatrixGF2U operator*(const MatrixGF2U& a, const MatrixGF2U& b);
    bool operator==(const MatrixGF2U&) const = default;
};

// Diagonal of the Smith normal form: the nonzero invariant factors in
// divisibility order, plus optional unimodular transforms with
// left * M * right equal to the diagonal matrix.
struct SNFResult {
    std::vector<PolyGF2U> diagonal;
    std::size_t rank = 0;
    std::optional<MatrixGF2U> left;
    std::optional<MatrixGF2U> right;
};

// Elimination with degree-minimal pivoting (ties broken by lowest row, then
// column), deterministic for a given input. Transforms are only built when
// requested.
SNFResult snf(const MatrixGF2U& m, bool with_transforms = false);

struct CokernelDecomposition {
    std::size_t free_rank = 0;
    std::vector<PolyGF2U> invariant_factors;  // the non-unit diagonal entries
};

// Structure of F_2[U]^rows / colspan(m).
CokernelDecomposition cokernel_decomposition(const MatrixGF2U& m);

}  // namespace torusband
