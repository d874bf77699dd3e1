#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "torusband/checked.hpp"
#include "torusband/errors.hpp"

namespace torusband {

// Dense polynomial over F_2 in the variable U, coefficients bit-packed into
// 64-bit words (bit e of word e/64 is the coefficient of U^e). Nonzero
// polynomials are automatically monic, the only unit is 1.
class PolyGF2U {
public:
    PolyGF2U() = default;  // zero

    static PolyGF2U one() { return monomial(0); }
    static PolyGF2U monomial(Int e);
    static PolyGF2U from_exponents(std::initializer_list<Int> exps);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return deg() == 0; }
    Int deg() const;  // -1 for the zero polynomial
    bool coeff(Int e) const;
    bool is_monomial() const;

    PolyGF2U operator+(const PolyGF2U& b) const;  // == subtraction over F_2
    PolyGF2U operator*(const PolyGF2U& b) const;

    struct DivMod;
    static DivMod divmod(const PolyGF2U& a, const PolyGF2U& b);

    friend PolyGF2U gcd(PolyGF2U a, PolyGF2U b);

    bool operator==(const PolyGF2U&) const = default;
    std::string to_string() const;  // "U^3 + U + 1"

private:
    void trim();
    void toggle(Int e);
    // acc ^= src << shift, growing acc as needed
    static void add_shifted(std::vector<std::uint64_t>& acc,
                            const std::vector<std::uint64_t>& src, Int shift);

    std::vector<std::uint64_t> words_;
};

struct PolyGF2U::DivMod {
    PolyGF2U quot;
    PolyGF2U rem;
};

}  // namespace torusband
