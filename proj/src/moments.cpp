#include "iwasawa/moments.hpp"

#include <stdexcept>
#include <string>

namespace iwasawa {

PowerSeriesTrunc::PowerSeriesTrunc(std::uint64_t p, std::uint32_t r,
                                   std::vector<std::int64_t> coeffs)
    : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
    modulus_ = detail::checked_pow(p, r);
    coeffs_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) coeffs_.push_back(detail::mod_reduce(c, modulus_));
}

bool PowerSeriesTrunc::operator==(const PowerSeriesTrunc& o) const {
    return p_ == o.p_ && r_ == o.r_ && coeffs_ == o.coeffs_;
}

PowerSeriesTrunc series_mul(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
    if (a.p() != b.p() || a.level() != b.level())
        throw precision_mismatch("series product across distinct (p, r)");
    if (a.size() != b.size()) throw shape_mismatch("series product across distinct truncations");
    std::uint64_t m = a.modulus();
    std::vector<std::int64_t> out(a.size(), 0);
    for (std::size_t n = 0; n < out.size(); ++n) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i <= n; ++i)
            acc = (acc + detail::mul_mod(a.coefficient(i), b.coefficient(n - i), m)) % m;
        out[n] = static_cast<std::int64_t>(acc);
    }
    return {a.p(), a.level(), out};
}

GammaElement mom_k(const FiniteMeasure& mu, std::uint32_t k) {
    GammaElement out(mu.p(), mu.level(), mu.dim(), k);
    std::uint64_t m = out.modulus();
    for (const auto& [key, c] : mu.entries()) {
        std::vector<std::int64_t> coords(key.begin(), key.end());
        GammaElement term = divided_power_of_vector(Point(mu.p(), mu.level(), coords), k);
        for (const auto& [i, e] : term.terms()) out.add_raw(i, detail::mul_mod(e, c, m));
    }
    return out;
}

GammaSeries mom_hat(const FiniteMeasure& mu, std::uint32_t cutoff) {
    GammaSeries out(mu.p(), mu.level(), mu.dim(), cutoff);
    for (std::uint32_t k = 0; k <= cutoff; ++k) out.set_component(mom_k(mu, k));
    return out;
}

PowerSeriesTrunc amice(const Measure& M, std::uint32_t n_max, std::uint32_t target_r) {
    if (M.top().dim() != 1) throw shape_mismatch("the Amice transform takes one-variable measures");
    if (target_r < 1) throw std::invalid_argument("target precision must be >= 1");
    std::uint64_t p = M.top().p();
    std::uint64_t worst = target_r + legendre_valuation(n_max, p);
    if (worst > M.working_level())
        throw precision_exhausted(
            "amice with n_max = " + std::to_string(n_max) + " at precision " +
                std::to_string(target_r) + " needs working level " + std::to_string(worst) +
                ", got " + std::to_string(M.working_level()),
            static_cast<std::uint32_t>(worst));

    std::uint64_t target_mod = detail::checked_pow(p, target_r);
    std::vector<std::int64_t> coeffs(n_max + 1, 0);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        std::uint32_t lvl = target_r + static_cast<std::uint32_t>(legendre_valuation(n, p));
        FiniteMeasure layer = M.at_level(lvl);
        std::uint64_t acc = 0;
        for (const auto& [key, c] : layer.entries()) {
            std::uint64_t b = detail::binomial_mod(key[0], n, target_mod);
            acc = (acc + detail::mul_mod(b, c % target_mod, target_mod)) % target_mod;
        }
        coeffs[n] = static_cast<std::int64_t>(acc);
    }
    return {p, target_r, coeffs};
}

std::vector<Residue> laplace(const FiniteMeasure& mu, std::uint32_t cutoff) {
    if (mu.dim() != 1) throw shape_mismatch("the Laplace transform takes one-variable measures");
    std::uint64_t m = mu.modulus();
    std::vector<Residue> out;
    out.reserve(cutoff + 1);
    for (std::uint32_t n = 0; n <= cutoff; ++n) {
        std::uint64_t acc = 0;
        for (const auto& [key, c] : mu.entries())
            acc = (acc + detail::mul_mod(detail::pow_mod(key[0], n, m), c, m)) % m;
        out.emplace_back(mu.p(), mu.level(), static_cast<std::int64_t>(acc));
    }
    return out;
}

}  // namespace iwasawa
