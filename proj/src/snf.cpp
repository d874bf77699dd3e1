#include "torusband/snf.hpp"

#include <algorithm>
#include <utility>

namespace torusband {

MatrixGF2U MatrixGF2U::identity(std::size_t n) {
    MatrixGF2U m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PolyGF2U::one();
    return m;
}

MatrixGF2U operator*(const MatrixGF2U& a, const MatrixGF2U& b) {
    if (a.cols != b.rows) throw DomainError("matrix dimension mismatch");
    MatrixGF2U out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

namespace {

// row_dst += f * row_src (addition is subtraction over F_2)
void row_add(MatrixGF2U& m, std::size_t dst, std::size_t src, const PolyGF2U& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (m.at(src, j).is_zero()) continue;
        m.at(dst, j) = m.at(dst, j) + f * m.at(src, j);
    }
}

void col_add(MatrixGF2U& m, std::size_t dst, std::size_t src, const PolyGF2U& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (m.at(i, src).is_zero()) continue;
        m.at(i, dst) = m.at(i, dst) + f * m.at(i, src);
    }
}

void row_swap(MatrixGF2U& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(MatrixGF2U& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

bool find_pivot(const MatrixGF2U& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = k; i < m.rows; ++i)
        for (std::size_t j = k; j < m.cols; ++j) {
            const PolyGF2U& e = m.at(i, j);
            if (e.is_zero()) continue;
            if (!found || e.deg() < best) {
                found = true;
                best = e.deg();
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SNFResult snf(const MatrixGF2U& m, bool with_transforms) {
    MatrixGF2U a = m;
    SNFResult out;
    if (with_transforms) {
        out.left = MatrixGF2U::identity(a.rows);
        out.right = MatrixGF2U::identity(a.cols);
    }

    const std::size_t nmin = std::min(a.rows, a.cols);
    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(a, k, pi, pj)) break;
        row_swap(a, k, pi);
        col_swap(a, k, pj);
        if (with_transforms) {
            row_swap(*out.left, k, pi);
            col_swap(*out.right, k, pj);
        }

        for (;;) {
            bool pivot_changed = false;

            // Clear column k. A nonzero remainder has smaller degree than the
            // pivot and becomes the new pivot.
            for (std::size_t i = k + 1; i < a.rows; ++i) {
                if (a.at(i, k).is_zero()) continue;
                const auto dm = PolyGF2U::divmod(a.at(i, k), a.at(k, k));
                row_add(a, i, k, dm.quot);
                if (with_transforms) row_add(*out.left, i, k, dm.quot);
                if (!dm.rem.is_zero()) {
                    row_swap(a, i, k);
                    if (with_transforms) row_swap(*out.left, i, k);
                    pivot_changed = true;
                }
            }
            if (pivot_changed) continue;

            for (std::size_t j = k + 1; j < a.cols; ++j) {
                if (a.at(k, j).is_zero()) continue;
                const auto dm = PolyGF2U::divmod(a.at(k, j), a.at(k, k));
                col_add(a, j, k, dm.quot);
                if (with_transforms) col_add(*out.right, j, k, dm.quot);
                if (!dm.rem.is_zero()) {
                    col_swap(a, j, k);
                    if (with_transforms) col_swap(*out.right, j, k);
                    pivot_changed = true;
                }
            }
            if (pivot_changed) continue;

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on, so the diagonal forms a
            // divisibility chain.
            bool fixed = false;
            for (std::size_t i = k + 1; i < a.rows && !fixed; ++i)
                for (std::size_t j = k + 1; j < a.cols && !fixed; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (PolyGF2U::divmod(a.at(i, j), a.at(k, k)).rem.is_zero()) continue;
                    row_add(a, k, i, PolyGF2U::one());
                    if (with_transforms) row_add(*out.left, k, i, PolyGF2U::one());
                    fixed = true;
                }
            if (!fixed) break;
        }
    }

    for (std::size_t k = 0; k < nmin; ++k) {
        if (a.at(k, k).is_zero()) break;
        out.diagonal.push_back(a.at(k, k));
    }
    out.rank = out.diagonal.size();
    return out;
}

CokernelDecomposition cokernel_decomposition(const MatrixGF2U& m) {
    const SNFResult s = snf(m);
    CokernelDecomposition out;
    out.free_rank = m.rows - s.rank;
    for (const PolyGF2U& d : s.diagonal)
        if (!d.is_one()) out.invariant_factors.push_back(d);
    return out;
}

}  // namespace torusband
