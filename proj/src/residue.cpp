#include "iwasawa/residue.hpp"

#include <string>

namespace iwasawa {

Residue::Residue(std::uint64_t p, std::uint32_t r, std::int64_t value) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    modulus_ = detail::checked_pow(p, r);
    value_ = detail::mod_reduce(value, modulus_);
}

void Residue::require_same(const Residue& o) const {
    if (p_ != o.p_ || r_ != o.r_)
        throw precision_mismatch("residue arithmetic at (p=" + std::to_string(p_) + ", r=" +
                                 std::to_string(r_) + ") vs (p=" + std::to_string(o.p_) +
                                 ", r=" + std::to_string(o.r_) + ")");
}

Residue Residue::operator+(const Residue& o) const {
    require_same(o);
    Residue out = *this;
    out.value_ = (value_ + o.value_) % modulus_;
    return out;
}

Residue Residue::operator-(const Residue& o) const {
    require_same(o);
    Residue out = *this;
    out.value_ = (value_ + modulus_ - o.value_) % modulus_;
    return out;
}

Residue Residue::operator*(const Residue& o) const {
    require_same(o);
    Residue out = *this;
    out.value_ = detail::mul_mod(value_, o.value_, modulus_);
    return out;
}

Residue Residue::operator-() const {
    Residue out = *this;
    out.value_ = value_ == 0 ? 0 : modulus_ - value_;
    return out;
}

Residue Residue::operator*(std::int64_t n) const {
    Residue out = *this;
    out.value_ = detail::mul_mod(value_, detail::mod_reduce(n, modulus_), modulus_);
    return out;
}

Residue Residue::pow(std::uint64_t e) const {
    Residue out = *this;
    out.value_ = detail::pow_mod(value_, e, modulus_);
    return out;
}

Residue Residue::reduce(std::uint32_t r_new) const {
    if (r_new > r_)
        throw precision_exhausted("cannot reduce level " + std::to_string(r_) + " to higher level " +
                                      std::to_string(r_new),
                                  r_new);
    if (r_new == r_) return *this;
    return {p_, r_new, static_cast<std::int64_t>(value_)};
}

Residue binom_residue(const Residue& a, std::uint64_t n, std::uint32_t target_r) {
    if (target_r < 1) throw std::invalid_argument("target precision must be >= 1");
    std::uint64_t boost = legendre_valuation(n, a.p());
    std::uint64_t needed = target_r + boost;
    if (a.level() < needed)
        throw precision_exhausted("binomial at output level " + std::to_string(target_r) +
                                      " needs input level " + std::to_string(needed) + ", got " +
                                      std::to_string(a.level()),
                                  static_cast<std::uint32_t>(needed));
    std::uint64_t target_mod = detail::checked_pow(a.p(), target_r);
    std::uint64_t c = detail::binomial_mod(a.value(), n, target_mod);
    return {a.p(), target_r, static_cast<std::int64_t>(c)};
}

}  // namespace iwasawa
