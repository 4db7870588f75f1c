#pragma once

#include <cstdint>

#include "iwasawa/errors.hpp"
#include "iwasawa/numeric.hpp"

namespace iwasawa {

/// An integer mod p^r with explicit precision. The scalar of the whole
/// library: the coefficient ring Lambda_r = Z/p^r Z at a declared level.
///
/// Every binary operation demands identical (p, r) on both sides and the
/// value is always kept reduced into [0, p^r). All arithmetic is exact.
class Residue {
public:
    Residue(std::uint64_t p, std::uint32_t r, std::int64_t value);

    static Residue zero(std::uint64_t p, std::uint32_t r) { return {p, r, 0}; }
    static Residue one(std::uint64_t p, std::uint32_t r) { return {p, r, 1}; }

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t value() const { return value_; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;

    /// Scale by an arbitrary signed integer.
    Residue operator*(std::int64_t n) const;

    Residue pow(std::uint64_t e) const;

    /// Image under Z/p^r -> Z/p^r' for r' <= r.
    Residue reduce(std::uint32_t r_new) const;

    /// Unit in Z/p^r, i.e. not divisible by p.
    bool is_unit() const { return value_ % p_ != 0; }

    bool operator==(const Residue& o) const {
        return p_ == o.p_ && r_ == o.r_ && value_ == o.value_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint64_t modulus_;  // p^r
    std::uint64_t value_;    // in [0, p^r)

    void require_same(const Residue& o) const;
};

/// C(a, n) at precision target_r. The input must carry at least
/// target_r + v_p(n!) digits: representatives of a differing by
/// p^{target_r + v_p(n!)} change C(a, n) by a multiple of p^{target_r},
/// so the result is well defined exactly under that contract.
Residue binom_residue(const Residue& a, std::uint64_t n, std::uint32_t target_r);

}  // namespace iwasawa
