#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace iwasawa {

/// Seeded generator for the randomized suites: std::mt19937_64 with modulo
/// reduction. The engine's output sequence is fixed by the standard, and
/// avoiding std:: distributions keeps draws byte-identical across library
/// implementations.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform-enough draw in [0, bound), bound >= 1.
    std::uint64_t next(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("draw from an empty range");
        return engine_() % bound;
    }

    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

/// FNV-1a, used to derive one independent stream per named suite.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace iwasawa
