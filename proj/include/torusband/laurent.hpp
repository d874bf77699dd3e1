#pragma once

#include <string>
#include <vector>

#include "torusband/checked.hpp"
#include "torusband/errors.hpp"

namespace torusband {

// Dense integer Laurent polynomial. Stored trimmed: the lowest and highest
// stored coefficients are nonzero, and the zero polynomial is empty.
class IntLaurentPoly {
public:
    IntLaurentPoly() = default;  // zero
    IntLaurentPoly(Int min_exp, std::vector<Int> coeffs);

    static IntLaurentPoly one() { return monomial(1, 0); }
    static IntLaurentPoly monomial(Int coeff, Int exp);

    bool is_zero() const { return coeffs_.empty(); }
    Int min_exp() const { return min_exp_; }
    Int max_exp() const { return min_exp_ + static_cast<Int>(coeffs_.size()) - 1; }
    Int coeff(Int exp) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntLaurentPoly shifted(Int dexp) const;  // multiply by t^dexp
    Int eval_at_one() const;

    friend IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b);
    friend IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b);
    friend IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b);

    bool operator==(const IntLaurentPoly&) const = default;
    std::string to_string() const;  // "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4"

private:
    void trim();

    Int min_exp_ = 0;
    std::vector<Int> coeffs_;
};

// Quotient of an exact division; throws InexactDivision when b does not
// divide a (nonzero remainder or a non-integral quotient coefficient).
IntLaurentPoly exact_div(const IntLaurentPoly& a, const IntLaurentPoly& b);

}  // namespace torusband
