#include "iwasawa/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace iwasawa {

namespace detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t m) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % m;
    std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v| without overflow
    std::uint64_t rem = mag % m;
    return rem == 0 ? 0 : m - rem;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t r) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        if (acc > kLimit / p)
            throw std::invalid_argument("modulus p^r exceeds the 64-bit exact range");
        acc *= p;
    }
    return acc;
}

std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    for (std::uint64_t t = 2; t <= n; ++t) acc = mul_mod(acc, t % m, m);
    return acc;
}

BigNat::BigNat(std::uint64_t v) {
    if (v > 0) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::mul_u64(std::uint64_t f) {
    if (f == 0 || limbs_.empty()) {
        limbs_.clear();
        return;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
}

void BigNat::div_exact_u64(std::uint64_t d) {
    assert(d > 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    assert(rem == 0 && "division expected to be exact");
    trim();
}

std::uint64_t BigNat::mod_u64(std::uint64_t m) const {
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % m;
    }
    return static_cast<std::uint64_t>(rem);
}

std::uint64_t BigNat::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::uint64_t binomial_mod(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    if (n == 0) return 1 % m;
    if (a < n) return 0;
    if (a <= 61) {
        // C(61, k) < 2^59, so the running binomial stays exact in 64 bits.
        unsigned __int128 acc = 1;
        for (std::uint64_t t = 0; t < n; ++t) {
            acc *= a - t;
            acc /= t + 1;
        }
        return static_cast<std::uint64_t>(acc % m);
    }
    BigNat acc(1);
    for (std::uint64_t t = 0; t < n; ++t) {
        acc.mul_u64(a - t);
        acc.div_exact_u64(t + 1);
    }
    return acc.mod_u64(m);
}

}  // namespace detail

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; ) {
        total += n / q;
        if (q > n / p) break;  // next power would pass n
        q *= p;
    }
    return total;
}

}  // namespace iwasawa
