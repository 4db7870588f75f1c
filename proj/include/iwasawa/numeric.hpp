#pragma once

#include <cstdint>
#include <vector>

namespace iwasawa {

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// v_p(n!) = sum_{i>=1} floor(n / p^i).
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

namespace detail {

/// p^r, throwing std::invalid_argument once the result leaves [2, 2^62).
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t r);

/// Reduce a signed integer into [0, m).
std::uint64_t mod_reduce(std::int64_t v, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// n! mod m by straight accumulation (products commute with reduction).
std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m);

/// C(a, n) mod m through exact big-integer arithmetic; no modular division.
std::uint64_t binomial_mod(std::uint64_t a, std::uint64_t n, std::uint64_t m);

/// Minimal exact nonnegative big integer: just enough for binomials.
/// Little-endian base-2^32 limbs, no leading zero limb.
class BigNat {
public:
    explicit BigNat(std::uint64_t v);

    void mul_u64(std::uint64_t f);
    /// Divide by d asserting zero remainder.
    void div_exact_u64(std::uint64_t d);
    std::uint64_t mod_u64(std::uint64_t m) const;
    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    /// Throws std::overflow_error beyond 64 bits.
    std::uint64_t to_u64() const;

private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

}  // namespace detail
}  // namespace iwasawa
