#pragma once

#include <vector>

#include "torusband/contfrac.hpp"
#include "torusband/laurent.hpp"
#include "torusband/snf.hpp"
#include "torusband/torus_knot.hpp"

namespace torusband {

// Symmetric-normalized Alexander polynomial with its support. For a torus
// knot the nonzero coefficients strictly alternate +1/-1 starting from +1 at
// the top exponent, which equals the genus (p-1)(q-1)/2.
struct AlexanderData {
    IntLaurentPoly poly;
    std::vector<Int> exponents;  // strictly decreasing, 2N+1 entries
    Int genus = 0;
};

// Consecutive exponent gaps of the Alexander support: the U-weights of the
// arrows in the collapsed complex, alternating horizontal/vertical.
struct Staircase {
    std::vector<Int> steps;  // 2N positive integers summing to 2*genus
    std::size_t N() const { return steps.size() / 2; }
};

// HFK' as free rank plus U-power torsion exponents; ord is the smallest n
// with U^n killing every torsion summand.
struct HFKPrime {
    Int free_rank = 0;
    std::vector<Int> torsion_exponents;  // ascending (divisibility order)
    Int ord = 0;
};

// The certified chain ord <= band unknotting number <= pinch number, with
// all three equal for torus knots.
struct UnknottingCertificate {
    TorusKnot knot;
    Int ord = 0;
    Int pinch_number = 0;
    Int band_unknotting_number = 0;
    ContinuedFraction cf;
};

AlexanderData alexander(const TorusKnot& k);
Staircase staircase(const TorusKnot& k);

// The (N+1) x N presentation matrix of the collapsed staircase differential:
// column i carries U^{s_{2i-1}} in row i-1 and U^{s_{2i}} in row i (1-based),
// i.e. each odd generator maps to U-weighted sums of its two neighbors.
MatrixGF2U unoriented_complex(const Staircase& st);

HFKPrime hfk_prime(const TorusKnot& k);
Int torsion_order(const TorusKnot& k);

// Whether the torsion order drops by exactly one across a pinch move.
bool pinch_drop_check(const TorusKnot& k);

UnknottingCertificate band_unknotting_number(const TorusKnot& k);

}  // namespace torusband
