#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwasawa/point.hpp"

namespace iwasawa {

/// Integer affine map x -> Mx + b from (Z/p^r)^d_in to (Z/p^r)^d_out,
/// reduced mod p^r at application time. Linear maps (b = 0) push measures
/// forward as ring homomorphisms for convolution; the affine offset models
/// the twist of a torsor trivialization.
class AffineMap {
public:
    AffineMap(std::vector<std::vector<std::int64_t>> matrix, std::vector<std::int64_t> offset);

    static AffineMap identity(std::uint32_t d);
    static AffineMap scaling(std::uint32_t d, std::int64_t factor);

    std::uint32_t dim_in() const { return dim_in_; }
    std::uint32_t dim_out() const { return static_cast<std::uint32_t>(matrix_.size()); }
    bool is_linear() const;

    Point apply(const Point& x) const;

private:
    std::vector<std::vector<std::int64_t>> matrix_;  // dim_out rows of dim_in entries
    std::vector<std::int64_t> offset_;               // dim_out entries
    std::uint32_t dim_in_;
};

/// An element of the finite group ring Lambda_r[H_r] for H_r = (Z/p^r)^d:
/// a finitely supported coefficient map H_r -> Z/p^r. Both a measure on H_r
/// and a group-ring element; the sparse map is primary and zero coefficients
/// are never stored.
class FiniteMeasure {
public:
    FiniteMeasure(std::uint64_t p, std::uint32_t r, std::uint32_t d);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t dim() const { return d_; }

    /// Accumulate c at x (x reduced, c reduced, zeros dropped).
    void add(const Point& x, std::int64_t c);
    void add_raw(std::vector<std::uint64_t> key, std::uint64_t c);

    std::uint64_t coefficient(const Point& x) const;
    const std::map<std::vector<std::uint64_t>, std::uint64_t>& entries() const { return coeffs_; }
    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    Residue mass() const;

    FiniteMeasure operator+(const FiniteMeasure& o) const;
    FiniteMeasure scaled(std::int64_t n) const;

    bool operator==(const FiniteMeasure& o) const;
    bool operator!=(const FiniteMeasure& o) const { return !(*this == o); }

    static constexpr std::size_t kDefaultDenseCap = 10'000'000;

    /// Dense realization of all p^{rd} coefficients. Index layout: coordinate 0
    /// is the most significant base-p^r digit. Refuses sizes above cap.
    std::vector<std::uint64_t> dense(std::size_t cap = kDefaultDenseCap) const;
    static FiniteMeasure from_dense(std::uint64_t p, std::uint32_t r, std::uint32_t d,
                                    const std::vector<std::uint64_t>& values);

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t d_;
    std::uint64_t modulus_;
    std::map<std::vector<std::uint64_t>, std::uint64_t> coeffs_;

    void require_compatible(const FiniteMeasure& o) const;
};

/// delta(x): coefficient 1 at x, 0 elsewhere. Unit of convolution at x = 0.
FiniteMeasure delta(const Point& x);

/// Push-forward along H_r -> H_{r-1} (sum over fibers) followed by
/// coefficient reduction mod p^{r-1}: the transition map of the tower.
FiniteMeasure trace(const FiniteMeasure& mu);

/// Group-ring product: (mu * nu)(z) = sum_{x+y=z} mu(x) nu(y).
FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu);

/// Brute-force convolution over the dense realization; the oracle twin of
/// convolve(), kept on an independent code path.
FiniteMeasure convolve_dense(const FiniteMeasure& mu, const FiniteMeasure& nu,
                             std::size_t cap = FiniteMeasure::kDefaultDenseCap);

/// phi_*(mu): coefficients transported along phi and summed.
FiniteMeasure pushforward(const AffineMap& phi, const FiniteMeasure& mu);

/// (mu (x) nu)(x, y) = mu(x) nu(y) on the product group.
FiniteMeasure tensor(const FiniteMeasure& mu, const FiniteMeasure& nu);

/// The precision-R truncation of an element of Lambda(H) = lim_r Lambda_r[H_r],
/// held by its top level; lower levels are always derived by iterated trace.
class Measure {
public:
    explicit Measure(FiniteMeasure top) : top_(std::move(top)) {}

    std::uint32_t working_level() const { return top_.level(); }
    const FiniteMeasure& top() const { return top_; }

    /// Level-r component, 1 <= r <= working level; above it the precision is
    /// exhausted and the caller must rebuild at a higher R.
    FiniteMeasure at_level(std::uint32_t r) const;

private:
    FiniteMeasure top_;
};

}  // namespace iwasawa
