#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwasawa/gamma.hpp"
#include "iwasawa/measure.hpp"

namespace iwasawa {

/// Stalk model of the degree-k logarithm: an element of
/// Gamma_k(Z e_0 + H) for H = (Z/p^r)^d, with e_0 the distinguished
/// splitting vector. Indices are (i_0; i_1..i_d) of total weight k; the
/// slice at i_0 = k - i is a copy of Gamma_i(H), so the whole element
/// realizes the splitting into prod_{i<=k} Gamma_i(H).
class LogStalkElement {
public:
    LogStalkElement(std::uint64_t p, std::uint32_t r, std::uint32_t h_dim, std::uint32_t degree);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    /// Rank of H; indices carry h_dim() + 1 exponents.
    std::uint32_t h_dim() const { return d_; }
    std::uint32_t degree() const { return degree_; }

    void add(const MultiIndex& i, std::int64_t c);
    void add_raw(const MultiIndex& i, std::uint64_t c);
    std::uint64_t coefficient(const MultiIndex& i) const;
    const std::map<MultiIndex, std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LogStalkElement operator+(const LogStalkElement& o) const;
    LogStalkElement scaled(std::int64_t n) const;
    LogStalkElement reduce(std::uint32_t r_new) const;

    bool operator==(const LogStalkElement& o) const;
    bool operator!=(const LogStalkElement& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t d_;
    std::uint32_t degree_;
    std::uint64_t modulus_;
    std::map<MultiIndex, std::uint64_t> terms_;
};

/// The splitting section 1^(k) = e_0^[k]: coefficient 1 on (k; 0..0).
LogStalkElement one_k(std::uint64_t p, std::uint32_t r, std::uint32_t h_dim, std::uint32_t k);

/// Degree-lowering transition Log^(k) -> Log^(k-1). On basis elements it
/// shifts e_0^[i_0] m^[i] to e_0^[i_0 - 1] m^[i] and kills the pure-H slice;
/// the closed form of the composite through Gamma_k(Z_p + Log^(1)).
LogStalkElement transition(const LogStalkElement& a);

/// The Gamma_{degree - i_0}(H) slice at a fixed e_0 exponent.
GammaElement slice(const LogStalkElement& a, std::uint32_t i0);

/// Pure-H slice (i_0 = 0): the top graded piece Gamma_k(H).
GammaElement pr_k(const LogStalkElement& a);

/// Embed a Gamma_i(H) element at slice i_0, producing degree i + i_0.
LogStalkElement embed_slice(const GammaElement& g, std::uint32_t i0);

/// Comparison map from measures: comp_k(mu) = sum_x mu(x) (e_0 + x)^[k],
/// assembled as mom_i(mu) at slice i_0 = k - i for i = 0..k. Its pure-H
/// component is mom_k and it intertwines transition maps.
LogStalkElement comp_k(const FiniteMeasure& mu, std::uint32_t k);

struct InterpolationWitness {
    bool equal;
    GammaElement lhs;  // mom_k([N]_# mu)
    GammaElement rhs;  // N^k mom_k(mu)
};

/// Executable witness of the interpolation identity
/// mom_k([N]_# mu) = N^k mom_k(mu), N-scaling push-forward on the left.
/// Holds for every mu, N >= 1, k, including p | N.
InterpolationWitness interpolation_check(const FiniteMeasure& mu, std::uint64_t N,
                                         std::uint32_t k);

}  // namespace iwasawa
