#include "torusband/contfrac.hpp"

#include <numeric>
#include <utility>

namespace torusband {

Rational::Rational(Int n, Int d) {
    if (d == 0) throw ZeroDenominator("rational with zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    const Int g = std::gcd(n, d);
    num = (g == 0) ? 0 : n / g;
    den = (g == 0) ? 1 : d / g;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

OddFirstPair odd_first(const TorusKnot& k) {
    if (k.is_unknot()) throw UnknotInput("unknot has no odd-first labeling");
    // p < q already; p odd covers both-odd (smaller first) and odd/even.
    if (k.p() % 2 == 1) return {k.p(), k.q()};
    return {k.q(), k.p()};
}

void validate_dataset(const PinchDataSet& ds) {
    if (ds.n < 1) throw ConstraintViolation("data set needs n >= 1");
    if (ds.q0 < 0) throw ConstraintViolation("q0 must be nonnegative");
    if (ds.p1 < 3 || ds.p1 % 2 == 0) throw ConstraintViolation("p1 must be odd and at least 3");
    if (static_cast<Int>(ds.eps.size()) != ds.n) throw ConstraintViolation("eps must have n entries");
    for (const int e : ds.eps)
        if (e != 1 && e != -1) throw ConstraintViolation("signs must be +1 or -1");
    if (ds.q0 <= 1 && ds.eps[0] != -1) throw ConstraintViolation("q0 in {0,1} forces eps_1 = -1");
    if (static_cast<Int>(ds.m.size()) != ds.n - 1) throw ConstraintViolation("m must have n-1 entries");
    for (const Int mk : ds.m)
        if (mk <= 0 || mk % 2 != 0) throw ConstraintViolation("every m_k must be a positive even integer");
}

PinchDataSet extract_dataset(const TorusKnot& k) {
    if (k.is_unknot()) throw UnknotInput("unknot has no pinch data set");
    const PinchSequence seq = pinch_sequence(k);
    const Int n = seq.pinch_number();

    // Stage pairs (p_i, q_i), i = n..1, are the odd-first labels of the
    // knots in the sequence; stage 0 comes from the raw (r,s) of the last
    // step, whose entries are 1 and q0 (or (0,1) which labels as (1,0)).
    std::vector<Int> P(n + 1), Q(n + 1);
    for (Int i = 1; i <= n; ++i) {
        const OddFirstPair st = odd_first(seq.steps[n - i].source);
        P[i] = st.p;
        Q[i] = st.q;
    }
    const PinchStep& last = seq.steps.back();
    P[0] = 1;
    Q[0] = (last.r == 1) ? last.s : last.r;

    PinchDataSet ds;
    ds.n = n;
    ds.q0 = Q[0];
    ds.p1 = P[1];
    ds.eps.resize(n);
    ds.m.resize(n - 1);

    const Int twice_eps1 = checked_sub(checked_mul(Q[0], P[1]), Q[1]);
    if (twice_eps1 != 2 && twice_eps1 != -2)
        throw FitFailure("q1 = q0*p1 - 2*eps1 has no unit sign solution for " + k.to_string());
    ds.eps[0] = static_cast<int>(twice_eps1 / 2);

    for (Int i = 2; i <= n; ++i) {
        // Fit sigma = eps_{i-1}*eps_i from the p recurrence and cross-check
        // against the q recurrence; exactly one sign may validate.
        int hits = 0;
        int sigma_fit = 0;
        Int m_fit = 0;
        for (const int sigma : {+1, -1}) {
            const Int numer = checked_add(P[i], sigma * P[i - 2]);
            if (numer % P[i - 1] != 0) continue;
            const Int cand = numer / P[i - 1];
            if (cand <= 0 || cand % 2 != 0) continue;
            if (Q[i] != checked_sub(checked_mul(cand, Q[i - 1]), sigma * Q[i - 2])) continue;
            ++hits;
            sigma_fit = sigma;
            m_fit = cand;
        }
        if (hits != 1)
            throw FitFailure("stage " + std::to_string(i) + " of " + k.to_string() + ": " +
                             std::to_string(hits) + " sign solutions fit the recurrences");
        ds.m[i - 2] = m_fit;
        ds.eps[i - 1] = sigma_fit * ds.eps[i - 2];
    }

    validate_dataset(ds);
    return ds;
}

OddFirstPair dataset_to_params(const PinchDataSet& ds) {
    validate_dataset(ds);
    Int p_prev2 = 1;        // p_0
    Int q_prev2 = ds.q0;    // q_0
    Int p_prev = ds.p1;
    Int q_prev = checked_sub(checked_mul(ds.q0, ds.p1), 2 * static_cast<Int>(ds.eps[0]));
    for (Int i = 2; i <= ds.n; ++i) {
        const Int sigma = static_cast<Int>(ds.eps[i - 2]) * static_cast<Int>(ds.eps[i - 1]);
        const Int pk = checked_sub(checked_mul(ds.m[i - 2], p_prev), sigma * p_prev2);
        const Int qk = checked_sub(checked_mul(ds.m[i - 2], q_prev), sigma * q_prev2);
        if (pk <= p_prev || qk <= 0)
            throw ConstraintViolation("recurrence degenerated at stage " + std::to_string(i));
        p_prev2 = std::exchange(p_prev, pk);
        q_prev2 = std::exchange(q_prev, qk);
    }
    if (p_prev % 2 == 0 || p_prev < 3 || q_prev < 2 || std::gcd(p_prev, q_prev) != 1)
        throw ConstraintViolation("recurrence did not reach a valid parameter pair");
    return {p_prev, q_prev};
}

ContinuedFraction dataset_to_cf(const PinchDataSet& ds) {
    validate_dataset(ds);
    ContinuedFraction cf;
    cf.a0 = ds.q0;
    cf.terms.reserve(ds.n);
    cf.terms.push_back({-ds.eps[0], ds.p1});
    for (Int i = 1; i < ds.n; ++i)
        cf.terms.push_back({-ds.eps[i - 1] * ds.eps[i], ds.m[i - 1]});
    return cf;
}

Rational eval_cf(const ContinuedFraction& cf) {
    if (cf.terms.empty()) return Rational(cf.a0, 1);
    // Bottom-up over the nested tails; every divide checks the tail first.
    Rational f(cf.terms.back().value, 1);
    for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
        if (f.num == 0) throw ZeroDenominator("continued fraction tail evaluates to zero");
        f = Rational(checked_add(checked_mul(cf.terms[i].value, f.num),
                                 static_cast<Int>(cf.terms[i + 1].sign) * f.den),
                     f.num);
    }
    if (f.num == 0) throw ZeroDenominator("continued fraction tail evaluates to zero");
    return Rational(checked_add(checked_mul(cf.a0, f.num),
                                2 * static_cast<Int>(cf.terms[0].sign) * f.den),
                    f.num);
}

ContinuedFraction cf_of_knot(const TorusKnot& k) {
    const ContinuedFraction cf = dataset_to_cf(extract_dataset(k));
    const OddFirstPair op = odd_first(k);
    if (eval_cf(cf) != Rational(op.q, op.p))
        throw CFMismatch("expansion of " + k.to_string() + " evaluates to " +
                         eval_cf(cf).to_string() + ", expected " + Rational(op.q, op.p).to_string());
    return cf;
}

std::string to_nested_string(const ContinuedFraction& cf) {
    std::string out = std::to_string(cf.a0);
    std::string closing;
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        out += cf.terms[i].sign > 0 ? " + " : " - ";
        out += (i == 0) ? "2/" : "1/";
        if (i + 1 < cf.terms.size()) {
            out += "(" + std::to_string(cf.terms[i].value);
            closing += ")";
        } else {
            out += std::to_string(cf.terms[i].value);
        }
    }
    return out + closing;
}

}  // namespace torusband
