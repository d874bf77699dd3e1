#pragma once

#include <string>
#include <vector>

#include "torusband/checked.hpp"
#include "torusband/errors.hpp"

namespace torusband {

// Coprime parameter pair of a torus knot, size-ordered, with a single
// sentinel for the unknot. T(1,k), T(1,1) and the T(q,p) = T(p,q) symmetry
// all collapse under normalization.
class TorusKnot {
public:
    TorusKnot() = default;  // the unknot
    static TorusKnot unknot() { return TorusKnot(); }
    static TorusKnot normalize(Int a, Int b);

    bool is_unknot() const { return unknot_; }
    Int p() const { return p_; }  // 2 <= p < q when not the unknot
    Int q() const { return q_; }

    bool operator==(const TorusKnot&) const = default;
    std::string to_string() const;  // "T(5,7)" or "unknot"

private:
    TorusKnot(Int p, Int q) : p_(p), q_(q), unknot_(false) {}

    Int p_ = 1;
    Int q_ = 1;
    bool unknot_ = true;
};

// Least positive x with a*x = 1 (mod n). Throws NoInverse when gcd(a,n) != 1.
Int mod_inverse(Int a, Int n);

// One pinch move T(p,q) -> T(r,s), r = |p-2t|, s = |q-2h|, where
// t = -q^{-1} (mod p) and h = p^{-1} (mod q), both taken in {0,...,mod-1}.
struct PinchStep {
    TorusKnot source;
    Int t = 0;
    Int h = 0;
    Int r = 0;
    Int s = 0;
    TorusKnot target;

    // Sign(p - 2t), recorded for inspection alongside the fitted signs of the
    // data set; 0 exactly when r = 0.
    int sign_p_minus_2t() const;

    bool operator==(const PinchStep&) const = default;
};

struct PinchSequence {
    std::vector<PinchStep> steps;  // steps[i].target == steps[i+1].source
    Int pinch_number() const { return static_cast<Int>(steps.size()); }
};

PinchStep pinch(const TorusKnot& k);
PinchSequence pinch_sequence(const TorusKnot& k);
Int pinch_number(const TorusKnot& k);

}  // namespace torusband
