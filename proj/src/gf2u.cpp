#include "torusband/gf2u.hpp"

#include <bit>

namespace torusband {

PolyGF2U PolyGF2U::monomial(Int e) {
    PolyGF2U p;
    p.toggle(e);
    return p;
}

PolyGF2U PolyGF2U::from_exponents(std::initializer_list<Int> exps) {
    PolyGF2U p;
    for (const Int e : exps) p.toggle(e);
    p.trim();
    return p;
}

void PolyGF2U::toggle(Int e) {
    if (e < 0) throw DomainError("negative exponent");
    const std::size_t w = static_cast<std::size_t>(e / 64);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (e % 64);
}

void PolyGF2U::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Int PolyGF2U::deg() const {
    if (words_.empty()) return -1;
    return static_cast<Int>(words_.size() - 1) * 64 + (63 - std::countl_zero(words_.back()));
}

bool PolyGF2U::coeff(Int e) const {
    if (e < 0) return false;
    const std::size_t w = static_cast<std::size_t>(e / 64);
    if (w >= words_.size()) return false;
    return (words_[w] >> (e % 64)) & 1;
}

bool PolyGF2U::is_monomial() const {
    int bits = 0;
    for (const std::uint64_t w : words_) bits += std::popcount(w);
    return bits == 1;
}

PolyGF2U PolyGF2U::operator+(const PolyGF2U& b) const {
    PolyGF2U out;
    out.words_.resize(std::max(words_.size(), b.words_.size()), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i];
    for (std::size_t i = 0; i < b.words_.size(); ++i) out.words_[i] ^= b.words_[i];
    out.trim();
    return out;
}

void PolyGF2U::add_shifted(std::vector<std::uint64_t>& acc,
                           const std::vector<std::uint64_t>& src, Int shift) {
    const std::size_t ws = static_cast<std::size_t>(shift / 64);
    const int bs = static_cast<int>(shift % 64);
    const std::size_t need = src.size() + ws + 1;
    if (acc.size() < need) acc.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) acc[i + ws] ^= src[i];
    } else {
        for (std::size_t i = 0; i < src.size(); ++i) {
            acc[i + ws] ^= src[i] << bs;
            acc[i + ws + 1] ^= src[i] >> (64 - bs);
        }
    }
}

PolyGF2U PolyGF2U::operator*(const PolyGF2U& b) const {
    if (is_zero() || b.is_zero()) return {};
    PolyGF2U out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int bit = std::countr_zero(bits);
            bits &= bits - 1;
            add_shifted(out.words_, b.words_, static_cast<Int>(w) * 64 + bit);
        }
    }
    out.trim();
    return out;
}

PolyGF2U::DivMod PolyGF2U::divmod(const PolyGF2U& a, const PolyGF2U& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    DivMod out;
    out.rem = a;
    const Int db = b.deg();
    Int dr = out.rem.deg();
    while (dr >= db) {
        const Int shift = dr - db;
        out.quot.toggle(shift);
        add_shifted(out.rem.words_, b.words_, shift);
        out.rem.trim();
        dr = out.rem.deg();
    }
    out.quot.trim();
    return out;
}

PolyGF2U gcd(PolyGF2U a, PolyGF2U b) {
    while (!b.is_zero()) {
        PolyGF2U r = PolyGF2U::divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string PolyGF2U::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (Int e = deg(); e >= 0; --e) {
        if (!coeff(e)) continue;
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "U";
        else
            out += "U^" + std::to_string(e);
    }
    return out;
}

}  // namespace torusband
