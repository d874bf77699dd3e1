#include "torusband/laurent.hpp"

#include <algorithm>

namespace torusband {

IntLaurentPoly::IntLaurentPoly(Int min_exp, std::vector<Int> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    trim();
}

IntLaurentPoly IntLaurentPoly::monomial(Int coeff, Int exp) {
    if (coeff == 0) return {};
    return IntLaurentPoly(exp, {coeff});
}

void IntLaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    coeffs_.erase(coeffs_.begin() + hi, coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lo);
    min_exp_ += static_cast<Int>(lo);
}

Int IntLaurentPoly::coeff(Int exp) const {
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

IntLaurentPoly IntLaurentPoly::shifted(Int dexp) const {
    if (is_zero()) return {};
    return IntLaurentPoly(checked_add(min_exp_, dexp), coeffs_);
}

Int IntLaurentPoly::eval_at_one() const {
    Int sum = 0;
    for (const Int c : coeffs_) sum = checked_add(sum, c);
    return sum;
}

IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Int lo = std::min(a.min_exp(), b.min_exp());
    const Int hi = std::max(a.max_exp(), b.max_exp());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
    for (Int e = lo; e <= hi; ++e)
        out[static_cast<std::size_t>(e - lo)] = checked_add(a.coeff(e), b.coeff(e));
    return IntLaurentPoly(lo, std::move(out));
}

IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (b.is_zero()) return a;
    const Int lo = std::min(a.is_zero() ? b.min_exp() : a.min_exp(), b.min_exp());
    const Int hi = std::max(a.is_zero() ? b.max_exp() : a.max_exp(), b.max_exp());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
    for (Int e = lo; e <= hi; ++e)
        out[static_cast<std::size_t>(e - lo)] = checked_sub(a.coeff(e), b.coeff(e));
    return IntLaurentPoly(lo, std::move(out));
}

IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Int> out(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(ca[i], cb[j]));
    }
    return IntLaurentPoly(checked_add(a.min_exp(), b.min_exp()), std::move(out));
}

IntLaurentPoly exact_div(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("laurent division by zero");
    if (a.is_zero()) return {};

    std::vector<Int> rem = a.coeffs();
    const auto& div = b.coeffs();
    if (rem.size() < div.size()) throw InexactDivision("dividend degree span below divisor");
    const Int lead = div.back();
    std::vector<Int> quot(rem.size() - div.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Int top = rem[k + div.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw InexactDivision("non-integral quotient coefficient");
        const Int c = top / lead;
        quot[k] = c;
        for (std::size_t j = 0; j < div.size(); ++j)
            rem[k + j] = checked_sub(rem[k + j], checked_mul(c, div[j]));
    }
    for (const Int c : rem)
        if (c != 0) throw InexactDivision("nonzero remainder");
    return IntLaurentPoly(checked_sub(a.min_exp(), b.min_exp()), std::move(quot));
}

std::string IntLaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (Int e = max_exp(); e >= min_exp_; --e) {
        const Int c = coeff(e);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Int mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e != 0) out += (e == 1) ? "t" : "t^" + std::to_string(e);
    }
    return out;
}

}  // namespace torusband
