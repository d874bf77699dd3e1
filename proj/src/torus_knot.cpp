#include "torusband/torus_knot.hpp"

#include <algorithm>
#include <numeric>

namespace torusband {

TorusKnot TorusKnot::normalize(Int a, Int b) {
    if (a < 1 || b < 1) throw DomainError("torus knot parameters must be positive");
    if (a > b) std::swap(a, b);
    if (a == 1) return unknot();
    if (std::gcd(a, b) != 1) throw NotCoprime("parameters not coprime");
    return TorusKnot(a, b);
}

std::string TorusKnot::to_string() const {
    if (unknot_) return "unknot";
    return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

Int mod_inverse(Int a, Int n) {
    if (n < 2) throw DomainError("modulus must be at least 2");
    a %= n;
    if (a < 0) a += n;
    // extended Euclid, tracking only the coefficient of a
    Int r0 = a, r1 = n;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        const Int quot = r0 / r1;
        r0 = std::exchange(r1, r0 - quot * r1);
        s0 = std::exchange(s1, s0 - quot * s1);
    }
    if (r0 != 1) throw NoInverse("no inverse: gcd(" + std::to_string(a) + "," + std::to_string(n) + ") != 1");
    s0 %= n;
    if (s0 < 0) s0 += n;
    return s0;
}

int PinchStep::sign_p_minus_2t() const {
    const Int d = source.p() - 2 * t;
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

PinchStep pinch(const TorusKnot& k) {
    if (k.is_unknot()) throw UnknotInput("unknot has no pinch move");
    const Int p = k.p();
    const Int q = k.q();

    PinchStep step;
    step.source = k;
    step.t = p - mod_inverse(q, p);  // -q^{-1} mod p, lands in {1,...,p-1}
    step.h = mod_inverse(p, q);      //  p^{-1} mod q, lands in {1,...,q-1}
    step.r = std::abs(checked_sub(p, checked_mul(2, step.t)));
    step.s = std::abs(checked_sub(q, checked_mul(2, step.h)));

    // Soundness of the congruences and the strict parameter decrease are
    // re-derived on every emitted step.
    if ((checked_add(checked_mul(step.t, q), 1)) % p != 0)
        throw InvariantError("pinch: t*q + 1 not divisible by p for " + k.to_string());
    if ((checked_sub(checked_mul(step.h, p), 1)) % q != 0)
        throw InvariantError("pinch: h*p - 1 not divisible by q for " + k.to_string());
    if (step.r > p - 2 || step.s > q - 2)
        throw InvariantError("pinch failed to shrink parameters of " + k.to_string());
    if (std::gcd(step.r, step.s) != 1)
        throw InvariantError("pinch produced a non-coprime pair from " + k.to_string());

    if (step.r == 0 || std::min(step.r, step.s) == 1) {
        step.target = TorusKnot::unknot();
    } else {
        step.target = TorusKnot::normalize(step.r, step.s);
    }
    return step;
}

PinchSequence pinch_sequence(const TorusKnot& k) {
    PinchSequence seq;
    if (k.is_unknot()) return seq;
    const Int bound = k.p();  // each move gives r <= p-2, so at most min(p,q) moves
    TorusKnot cur = k;
    while (!cur.is_unknot()) {
        if (static_cast<Int>(seq.steps.size()) >= bound)
            throw InvariantError("pinch sequence of " + k.to_string() + " exceeded min(p,q) moves");
        seq.steps.push_back(pinch(cur));
        cur = seq.steps.back().target;
    }
    return seq;
}

Int pinch_number(const TorusKnot& k) { return pinch_sequence(k).pinch_number(); }

}  // namespace torusband
