#include "torusband/floer.hpp"

#include <algorithm>

namespace torusband {

namespace {

// Dense computation keeps (p-1)(q-1)+1 coefficients in memory; refuse sizes
// where that stops being a desk-scale object.
constexpr Int kMaxDenseDegree = 10'000'000;

}  // namespace

AlexanderData alexander(const TorusKnot& k) {
    AlexanderData out;
    if (k.is_unknot()) {
        out.poly = IntLaurentPoly::one();
        out.exponents = {0};
        out.genus = 0;
        return out;
    }

    const Int p = k.p();
    const Int q = k.q();
    if (checked_mul(p, q) > kMaxDenseDegree)
        throw DomainError("parameters too large for the dense Alexander computation");

    // (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) = (sum_{i<q} t^{pi}) / (sum_{j<q} t^j)
    std::vector<Int> num(static_cast<std::size_t>(p * (q - 1) + 1), 0);
    for (Int i = 0; i < q; ++i) num[static_cast<std::size_t>(p * i)] = 1;
    const IntLaurentPoly quotient =
        exact_div(IntLaurentPoly(0, std::move(num)),
                  IntLaurentPoly(0, std::vector<Int>(static_cast<std::size_t>(q), 1)));

    out.genus = (p - 1) * (q - 1) / 2;
    out.poly = quotient.shifted(-out.genus);

    for (Int e = out.poly.max_exp(); e >= out.poly.min_exp(); --e)
        if (out.poly.coeff(e) != 0) out.exponents.push_back(e);

    // The staircase reading depends on every one of these facts, so they are
    // re-derived per computation rather than assumed.
    const std::size_t terms = out.exponents.size();
    if (terms % 2 == 0) throw MalformedAlexander("even support size for " + k.to_string());
    if (out.exponents.front() != out.genus)
        throw MalformedAlexander("top exponent differs from genus for " + k.to_string());
    for (std::size_t j = 0; j < terms; ++j) {
        if (out.poly.coeff(out.exponents[j]) != (j % 2 == 0 ? 1 : -1))
            throw MalformedAlexander("coefficients do not alternate +1/-1 for " + k.to_string());
        if (out.exponents[j] != -out.exponents[terms - 1 - j])
            throw MalformedAlexander("support not symmetric for " + k.to_string());
    }
    if (out.poly.eval_at_one() != 1)
        throw MalformedAlexander("value at t=1 is not 1 for " + k.to_string());
    return out;
}

Staircase staircase(const TorusKnot& k) {
    const AlexanderData ad = alexander(k);
    Staircase st;
    st.steps.reserve(ad.exponents.size() - 1);
    for (std::size_t j = 1; j < ad.exponents.size(); ++j) {
        const Int step = ad.exponents[j - 1] - ad.exponents[j];
        if (step <= 0) throw MalformedAlexander("non-positive staircase step for " + k.to_string());
        st.steps.push_back(step);
    }
    return st;
}

MatrixGF2U unoriented_complex(const Staircase& st) {
    const std::size_t n = st.N();
    MatrixGF2U d(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) {
        d.at(i, i) = PolyGF2U::monomial(st.steps[2 * i]);
        d.at(i + 1, i) = PolyGF2U::monomial(st.steps[2 * i + 1]);
    }
    return d;
}

HFKPrime hfk_prime(const TorusKnot& k) {
    const MatrixGF2U d = unoriented_complex(staircase(k));
    const SNFResult s = snf(d);

    // Even generators are cycles and the odd ones must inject: a kernel
    // contribution or extra free rank would falsify the model, not tune it.
    if (s.rank != d.cols)
        throw StructureViolation("staircase differential of " + k.to_string() +
                                 " does not have full column rank");
    HFKPrime out;
    out.free_rank = static_cast<Int>(d.rows - s.rank);
    if (out.free_rank != 1)
        throw StructureViolation("free rank of HFK' of " + k.to_string() + " is " +
                                 std::to_string(out.free_rank) + ", expected 1");
    for (const PolyGF2U& f : s.diagonal) {
        if (f.is_one()) continue;
        if (!f.is_monomial())
            throw StructureViolation("invariant factor " + f.to_string() + " of " +
                                     k.to_string() + " is not a power of U");
        out.torsion_exponents.push_back(f.deg());
    }
    out.ord = out.torsion_exponents.empty() ? 0 : out.torsion_exponents.back();
    return out;
}

Int torsion_order(const TorusKnot& k) { return hfk_prime(k).ord; }

bool pinch_drop_check(const TorusKnot& k) {
    if (k.is_unknot()) throw UnknotInput("unknot has no pinch move");
    return torsion_order(pinch(k).target) == torsion_order(k) - 1;
}

UnknottingCertificate band_unknotting_number(const TorusKnot& k) {
    UnknottingCertificate cert;
    cert.knot = k;
    cert.ord = torsion_order(k);
    cert.pinch_number = torusband::pinch_number(k);
    if (!k.is_unknot()) cert.cf = cf_of_knot(k);
    const Int cf_terms = static_cast<Int>(cert.cf.terms.size());
    if (cert.ord != cert.pinch_number || cf_terms != cert.pinch_number)
        throw TheoremViolation("equality chain broken for " + k.to_string() + ": Ord' = " +
                               std::to_string(cert.ord) + ", P = " +
                               std::to_string(cert.pinch_number) + ", cf terms = " +
                               std::to_string(cf_terms));
    cert.band_unknotting_number = cert.pinch_number;
    return cert;
}

}  // namespace torusband
