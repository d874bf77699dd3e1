#pragma once

// Test-only oracles: every route in here recomputes a quantity the library
// produces, by an algorithm independent of the one under test.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "torusband/checked.hpp"
#include "torusband/gf2u.hpp"
#include "torusband/snf.hpp"

namespace oracles {

using torusband::Int;
using torusband::MatrixGF2U;
using torusband::PolyGF2U;

// Exhaustive search for the congruences t*q = -1 (mod p), h*p = 1 (mod q).
inline std::pair<Int, Int> congruence_search(Int p, Int q) {
    Int t = -1, h = -1;
    for (Int cand = 0; cand < p; ++cand)
        if ((cand * q + 1) % p == 0) {
            t = cand;
            break;
        }
    for (Int cand = 0; cand < q; ++cand)
        if ((cand * p - 1) % q == 0) {
            h = cand;
            break;
        }
    return {t, h};
}

// Coefficients c[0..(p-1)(q-1)] of (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)) computed
// by truncated power-series expansion, no polynomial division involved:
// 1/((1-t^p)(1-t^q)) has coefficient #{(i,j) : pi+qj = d} at degree d.
inline std::vector<Int> alexander_series_coeffs(Int p, Int q) {
    const Int top = (p - 1) * (q - 1);
    std::vector<Int> reps(top + 1, 0);
    for (Int i = 0; p * i <= top; ++i)
        for (Int j = 0; p * i + q * j <= top; ++j) ++reps[p * i + q * j];
    std::vector<Int> out(top + 1, 0);
    for (Int d = 0; d <= top; ++d) out[d] = reps[d] - (d > 0 ? reps[d - 1] : 0);
    return out;
}

inline std::vector<std::pair<Int, Int>> coprime_pairs(Int max_q) {
    std::vector<std::pair<Int, Int>> pairs;
    for (Int q = 3; q <= max_q; ++q)
        for (Int p = 2; p < q; ++p)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    return pairs;
}

// ---- F2 linear algebra on bit-packed rows ----

struct F2Matrix {
    std::size_t ncols = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    void add_row() { rows.emplace_back((ncols + 63) / 64, 0); }
    void set(std::size_t r, std::size_t c) { rows[r][c / 64] ^= std::uint64_t{1} << (c % 64); }
};

inline std::size_t f2_rank(F2Matrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.ncols && rank < m.rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows.size() && !(m.rows[pivot][w] & bit)) ++pivot;
        if (pivot == m.rows.size()) continue;
        std::swap(m.rows[rank], m.rows[pivot]);
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (r == rank || !(m.rows[r][w] & bit)) continue;
            for (std::size_t k = 0; k < m.rows[r].size(); ++k) m.rows[r][k] ^= m.rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// ---- rational functions over F2(U), for fraction-field elimination ----

struct RatFunc {
    PolyGF2U num;
    PolyGF2U den = PolyGF2U::one();

    static RatFunc of(const PolyGF2U& p) { return {p, PolyGF2U::one()}; }
    bool is_zero() const { return num.is_zero(); }

    RatFunc reduced() const {
        if (num.is_zero()) return {PolyGF2U{}, PolyGF2U::one()};
        const PolyGF2U g = gcd(num, den);
        return {PolyGF2U::divmod(num, g).quot, PolyGF2U::divmod(den, g).quot};
    }
    RatFunc operator+(const RatFunc& o) const {  // also subtraction over F2
        return RatFunc{num * o.den + o.num * den, den * o.den}.reduced();
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc{num * o.num, den * o.den}.reduced();
    }
    RatFunc operator/(const RatFunc& o) const {
        return RatFunc{num * o.den, den * o.num}.reduced();
    }
};

inline std::size_t fraction_field_rank(const MatrixGF2U& m) {
    std::vector<std::vector<RatFunc>> a(m.rows, std::vector<RatFunc>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = RatFunc::of(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (a[r][col].is_zero()) continue;
            const RatFunc f = a[r][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols; ++j) a[r][j] = a[r][j] + f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Cofactor-expansion determinant (signs are irrelevant in characteristic 2).
inline PolyGF2U determinant(const MatrixGF2U& m) {
    if (m.rows != m.cols) throw torusband::DomainError("determinant of non-square matrix");
    if (m.rows == 0) return PolyGF2U::one();
    if (m.rows == 1) return m.at(0, 0);
    PolyGF2U det;
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (m.at(0, j).is_zero()) continue;
        MatrixGF2U minor(m.rows - 1, m.cols - 1);
        for (std::size_t i = 1; i < m.rows; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        det = det + m.at(0, j) * determinant(minor);
    }
    return det;
}

inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

// gcd of all k x k minors; zero when every such minor vanishes.
inline PolyGF2U determinantal_divisor(const MatrixGF2U& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets_of_size(m.rows, k, row_sets);
    subsets_of_size(m.cols, k, col_sets);
    PolyGF2U g;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            MatrixGF2U sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
            g = gcd(g, determinant(sub));
            if (g.is_one()) return g;
        }
    return g;
}

// Torsion order of F2[U]^rows / colspan(D) without Smith normal form:
// W_e = {x : U^e x in colspan D} is an ascending chain of submodules that
// stabilizes exactly at e = Ord', detected through degree-truncated F2
// linear algebra. B bounds the x-degrees, chosen large enough to see every
// generator of the saturation.
inline Int brute_force_torsion_order(const MatrixGF2U& d) {
    Int total_deg = 0, max_deg = 0;
    for (const PolyGF2U& e : d.entries)
        if (!e.is_zero()) {
            total_deg += e.deg();
            max_deg = std::max(max_deg, e.deg());
        }
    const Int B = 2 * total_deg + 4;

    // dim of {c : Dc = 0, deg c <= C} is e-independent; computed on demand
    // inside dim_w via rank arithmetic.
    auto dim_w = [&](Int e) -> Int {
        const Int C = B + e + total_deg + 2;
        const Int eq_deg = std::max(B + e, C + max_deg);
        const std::size_t nx = d.rows * static_cast<std::size_t>(B + 1);
        const std::size_t nc = d.cols * static_cast<std::size_t>(C + 1);

        F2Matrix full;
        full.ncols = nx + nc;
        for (std::size_t i = 0; i < d.rows; ++i)
            for (Int deg = 0; deg <= eq_deg; ++deg) {
                full.add_row();
                const std::size_t r = full.rows.size() - 1;
                if (deg - e >= 0 && deg - e <= B)
                    full.set(r, i * (B + 1) + static_cast<std::size_t>(deg - e));
                for (std::size_t j = 0; j < d.cols; ++j) {
                    const PolyGF2U& entry = d.at(i, j);
                    if (entry.is_zero()) continue;
                    for (Int a = 0; a <= entry.deg(); ++a) {
                        if (!entry.coeff(a)) continue;
                        const Int b = deg - a;
                        if (b < 0 || b > C) continue;
                        full.set(r, nx + j * (C + 1) + static_cast<std::size_t>(b));
                    }
                }
            }

        F2Matrix conly;
        conly.ncols = nc;
        for (std::size_t i = 0; i < d.rows; ++i)
            for (Int deg = 0; deg <= C + max_deg; ++deg) {
                conly.add_row();
                const std::size_t r = conly.rows.size() - 1;
                for (std::size_t j = 0; j < d.cols; ++j) {
                    const PolyGF2U& entry = d.at(i, j);
                    if (entry.is_zero()) continue;
                    for (Int a = 0; a <= entry.deg(); ++a) {
                        if (!entry.coeff(a)) continue;
                        const Int b = deg - a;
                        if (b < 0 || b > C) continue;
                        conly.set(r, j * (C + 1) + static_cast<std::size_t>(b));
                    }
                }
            }

        // dim proj_x ker(full) = nullity(full) - dim{c : Dc = 0}
        return static_cast<Int>(nx) - static_cast<Int>(f2_rank(std::move(full))) +
               static_cast<Int>(f2_rank(std::move(conly)));
    };

    Int prev = dim_w(0);
    for (Int e = 0; e <= B; ++e) {
        const Int nxt = dim_w(e + 1);
        if (nxt == prev) return e;
        prev = nxt;
    }
    throw torusband::InvariantError("torsion order brute force did not stabilize");
}

// ---- random generators (fixed seeds in the tests keep runs reproducible) ----

inline PolyGF2U random_poly(std::mt19937_64& rng, Int max_deg) {
    PolyGF2U p;
    for (Int e = 0; e <= max_deg; ++e)
        if (rng() & 1) p = p + PolyGF2U::monomial(e);
    return p;
}

inline MatrixGF2U random_matrix(std::mt19937_64& rng, std::size_t max_dim, Int max_deg) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    MatrixGF2U m(dim(rng), dim(rng));
    for (PolyGF2U& e : m.entries) e = random_poly(rng, max_deg);
    return m;
}

}  // namespace oracles
