#pragma once

#include <string>
#include <vector>

#include "torusband/checked.hpp"
#include "torusband/errors.hpp"
#include "torusband/torus_knot.hpp"

namespace torusband {

// (p,q) with p odd. When both entries are odd the smaller comes first, so
// q < p can only happen when q is even.
struct OddFirstPair {
    Int p = 1;
    Int q = 1;
    bool operator==(const OddFirstPair&) const = default;
};

// The tuple {n, q0, p1, eps, m} encoding a pinch sequence through the stage
// recurrences
//   q_1 = q0*p1 - 2*eps_1,
//   p_k = m_{k-1}*p_{k-1} - eps_{k-1}*eps_k*p_{k-2}   (p_0 = 1, k >= 2),
// and the analogous q recurrence. In bijection with the parameter pair.
struct PinchDataSet {
    Int n = 0;
    Int q0 = 0;
    Int p1 = 3;
    std::vector<int> eps;  // n signs, each +1 or -1; eps[0] is eps_1
    std::vector<Int> m;    // n-1 positive even integers

    bool operator==(const PinchDataSet&) const = default;
};

struct CFTerm {
    int sign = 1;  // sign of the numerator sitting above `value`
    Int value = 0;
    bool operator==(const CFTerm&) const = default;
};

// q/p = a0 + (2 s_1)/(v_1 + (s_2)/(v_2 + ... + (s_n)/v_n)). The numerator
// above the first term has magnitude 2, all later ones magnitude 1; v_1 is
// odd >= 3 and every later v_k is a positive even integer.
struct ContinuedFraction {
    Int a0 = 0;
    std::vector<CFTerm> terms;
    bool operator==(const ContinuedFraction&) const = default;
};

// Reduced fraction with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n, Int d);  // reduces; throws ZeroDenominator when d == 0

    bool operator==(const Rational&) const = default;
    std::string to_string() const;  // "11/5", "3"
};

OddFirstPair odd_first(const TorusKnot& k);

// Throws ConstraintViolation unless ds satisfies all of: n >= 1, q0 >= 0,
// p1 odd >= 3, signs in {+1,-1} with eps_1 = -1 when q0 <= 1, and n-1
// positive even m's.
void validate_dataset(const PinchDataSet& ds);

PinchDataSet extract_dataset(const TorusKnot& k);
OddFirstPair dataset_to_params(const PinchDataSet& ds);
ContinuedFraction dataset_to_cf(const PinchDataSet& ds);
Rational eval_cf(const ContinuedFraction& cf);
ContinuedFraction cf_of_knot(const TorusKnot& k);

// "3 - 2/(3 - 1/2)"
std::string to_nested_string(const ContinuedFraction& cf);

}  // namespace torusband
