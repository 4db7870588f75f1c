#pragma once

#include <cstdint>
#include <vector>

#include "iwasawa/gamma.hpp"
#include "iwasawa/measure.hpp"

namespace iwasawa {

/// Truncation of Z_p[[T]]: coefficients a_0..a_n at one precision level.
class PowerSeriesTrunc {
public:
    PowerSeriesTrunc(std::uint64_t p, std::uint32_t r, std::vector<std::int64_t> coeffs);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }

    std::size_t size() const { return coeffs_.size(); }
    std::uint64_t coefficient(std::size_t n) const { return coeffs_[n]; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    bool operator==(const PowerSeriesTrunc& o) const;
    bool operator!=(const PowerSeriesTrunc& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint64_t modulus_;
    std::vector<std::uint64_t> coeffs_;
};

/// Product mod (p^r, T^n): both factors must share (p, r) and length.
PowerSeriesTrunc series_mul(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b);

/// The k-th moment map Lambda_r[H_r] -> Gamma_k(H_r):
/// mom_k(mu) = sum_x mu(x) x^[k]. Linear in mu; mom_0 is the total mass.
GammaElement mom_k(const FiniteMeasure& mu, std::uint32_t k);

/// All components mom_0..mom_K of the completed moment map, which is a
/// ring homomorphism into Gamma-hat.
GammaSeries mom_hat(const FiniteMeasure& mu, std::uint32_t cutoff);

/// Amice transform of a one-variable measure, coefficients at precision
/// target_r: a_n = integral of C(x, n) d(mu) computed from the measure at
/// level target_r + v_p(n!), its binomial integrand's own demand. Requires
/// working level >= target_r + v_p(n_max!), else precision_exhausted names
/// the level needed.
PowerSeriesTrunc amice(const Measure& M, std::uint32_t n_max, std::uint32_t target_r);

/// Laplace transform coefficients c_0..c_K of a one-variable measure in the
/// divided-power basis: c_n is the coefficient of t^[n], i.e.
/// sum_x mu(x) x^n. Integral at level r, no precision boost needed.
std::vector<Residue> laplace(const FiniteMeasure& mu, std::uint32_t cutoff);

}  // namespace iwasawa
