#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusband/laurent.hpp"
#include "torusband/snf.hpp"

using namespace torusband;

namespace {

IntLaurentPoly lp(Int min_exp, std::vector<Int> coeffs) { return {min_exp, std::move(coeffs)}; }

IntLaurentPoly random_laurent(std::mt19937_64& rng, Int span) {
    std::vector<Int> coeffs(static_cast<std::size_t>(1 + rng() % span));
    for (Int& c : coeffs) c = static_cast<Int>(rng() % 7) - 3;
    return {static_cast<Int>(rng() % 5) - 2, std::move(coeffs)};
}

MatrixGF2U column(std::initializer_list<PolyGF2U> entries) {
    MatrixGF2U m(entries.size(), 1);
    std::size_t i = 0;
    for (const PolyGF2U& e : entries) m.at(i++, 0) = e;
    return m;
}

}  // namespace

TEST_CASE("laurent multiplication") {
    const IntLaurentPoly t_minus_1 = lp(0, {-1, 1});
    CHECK(t_minus_1 * lp(0, {1, 1}) == lp(0, {-1, 0, 1}));
    CHECK((IntLaurentPoly{} * t_minus_1).is_zero());
    CHECK(t_minus_1 * lp(0, {1, 1, 1}) == lp(0, {-1, 0, 0, 1}));
    // negative exponents shift through multiplication
    CHECK(lp(-1, {1}) * lp(1, {1}) == IntLaurentPoly::one());
}

TEST_CASE("laurent exact division") {
    CHECK(exact_div(lp(0, {-1, 0, 1}), lp(0, {-1, 1})) == lp(0, {1, 1}));
    CHECK(exact_div(lp(0, {-1, 0, 0, 1}), lp(0, {-1, 1})) == lp(0, {1, 1, 1}));
    CHECK_THROWS_AS(exact_div(lp(0, {1, 0, 1}), lp(0, {-1, 1})), InexactDivision);
    CHECK_THROWS_AS(exact_div(lp(0, {1}), IntLaurentPoly{}), DivisionByZero);
    CHECK(exact_div(IntLaurentPoly{}, lp(0, {1, 1})).is_zero());
}

TEST_CASE("laurent ring laws on random inputs") {
    std::mt19937_64 rng(987123);
    for (int i = 0; i < 200; ++i) {
        const IntLaurentPoly a = random_laurent(rng, 6);
        const IntLaurentPoly b = random_laurent(rng, 6);
        const IntLaurentPoly c = random_laurent(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("overflow fails loudly") {
    const IntLaurentPoly big = IntLaurentPoly::monomial(Int{1} << 62, 0);
    CHECK_THROWS_AS(big * big, ArithmeticOverflow);
    CHECK_THROWS_AS(big + big, ArithmeticOverflow);
}

TEST_CASE("gf2u divmod") {
    const PolyGF2U u = PolyGF2U::monomial(1);
    SUBCASE("(U^3 + U) / U") {
        const auto dm = PolyGF2U::divmod(PolyGF2U::from_exponents({3, 1}), u);
        CHECK(dm.quot == PolyGF2U::from_exponents({2, 0}));
        CHECK(dm.rem.is_zero());
    }
    SUBCASE("U^2 / (U + 1)") {
        const auto dm = PolyGF2U::divmod(PolyGF2U::monomial(2), PolyGF2U::from_exponents({1, 0}));
        CHECK(dm.quot == PolyGF2U::from_exponents({1, 0}));
        CHECK(dm.rem == PolyGF2U::one());
    }
    SUBCASE("0 / U") {
        const auto dm = PolyGF2U::divmod(PolyGF2U{}, u);
        CHECK(dm.quot.is_zero());
        CHECK(dm.rem.is_zero());
    }
    CHECK_THROWS_AS(PolyGF2U::divmod(u, PolyGF2U{}), DivisionByZero);
}

TEST_CASE("gf2u ring laws and divmod identity on random inputs") {
    std::mt19937_64 rng(555888);
    for (int i = 0; i < 300; ++i) {
        const PolyGF2U a = oracles::random_poly(rng, 9);
        const PolyGF2U b = oracles::random_poly(rng, 9);
        const PolyGF2U c = oracles::random_poly(rng, 9);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + (a + b) == PolyGF2U{});  // characteristic 2
        if (!b.is_zero()) {
            const auto dm = PolyGF2U::divmod(a, b);
            CHECK(dm.quot * b + dm.rem == a);
            CHECK(dm.rem.deg() < b.deg());
        }
    }
}

TEST_CASE("snf on the worked examples") {
    SUBCASE("zero 2x3 matrix") {
        const SNFResult s = snf(MatrixGF2U(2, 3));
        CHECK(s.diagonal.empty());
        CHECK(s.rank == 0);
    }
    SUBCASE("diag(U, U^2) is already in normal form") {
        MatrixGF2U m(2, 2);
        m.at(0, 0) = PolyGF2U::monomial(1);
        m.at(1, 1) = PolyGF2U::monomial(2);
        const SNFResult s = snf(m);
        REQUIRE(s.rank == 2);
        CHECK(s.diagonal[0] == PolyGF2U::monomial(1));
        CHECK(s.diagonal[1] == PolyGF2U::monomial(2));
    }
    SUBCASE("column (U, U)") {
        const SNFResult s = snf(column({PolyGF2U::monomial(1), PolyGF2U::monomial(1)}));
        REQUIRE(s.rank == 1);
        CHECK(s.diagonal[0] == PolyGF2U::monomial(1));
    }
}

TEST_CASE("cokernel decompositions") {
    SUBCASE("zero 2x3 matrix") {
        const CokernelDecomposition c = cokernel_decomposition(MatrixGF2U(2, 3));
        CHECK(c.free_rank == 2);
        CHECK(c.invariant_factors.empty());
    }
    SUBCASE("column (U, U)") {
        const CokernelDecomposition c =
            cokernel_decomposition(column({PolyGF2U::monomial(1), PolyGF2U::monomial(1)}));
        CHECK(c.free_rank == 1);
        REQUIRE(c.invariant_factors.size() == 1);
        CHECK(c.invariant_factors[0] == PolyGF2U::monomial(1));
    }
    SUBCASE("unit 1x1 matrix collapses the quotient") {
        const CokernelDecomposition c = cokernel_decomposition(column({PolyGF2U::one()}));
        CHECK(c.free_rank == 0);
        CHECK(c.invariant_factors.empty());
    }
}

TEST_CASE("snf property suite on random matrices") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const MatrixGF2U m = oracles::random_matrix(rng, 4, 3);
        const SNFResult s = snf(m, /*with_transforms=*/true);
        REQUIRE(s.left.has_value());
        REQUIRE(s.right.has_value());

        // reconstruction: left * M * right equals the diagonal matrix
        const MatrixGF2U recon = (*s.left * m) * *s.right;
        for (std::size_t i = 0; i < recon.rows; ++i)
            for (std::size_t j = 0; j < recon.cols; ++j) {
                const PolyGF2U expect =
                    (i == j && i < s.rank) ? s.diagonal[i] : PolyGF2U{};
                CHECK(recon.at(i, j) == expect);
            }

        // both transforms are unimodular with the only unit as determinant
        CHECK(oracles::determinant(*s.left) == PolyGF2U::one());
        CHECK(oracles::determinant(*s.right) == PolyGF2U::one());

        // divisibility chain
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
            CHECK(PolyGF2U::divmod(s.diagonal[i + 1], s.diagonal[i]).rem.is_zero());

        // product of the first k invariant factors is the gcd of k x k minors
        PolyGF2U prod = PolyGF2U::one();
        for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
            const PolyGF2U dk = oracles::determinantal_divisor(m, k);
            if (k <= s.rank) {
                prod = prod * s.diagonal[k - 1];
                CHECK(prod == dk);
            } else {
                CHECK(dk.is_zero());
            }
        }

        // rank agrees with fraction-field elimination
        CHECK(s.rank == oracles::fraction_field_rank(m));

        // deterministic: a second run reproduces the diagonal
        CHECK(snf(m).diagonal == s.diagonal);
    }
}
