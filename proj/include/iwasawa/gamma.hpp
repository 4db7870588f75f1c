#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwasawa/point.hpp"

namespace iwasawa {

/// Exponent vector of a divided-power basis monomial m_1^[i_1] ... m_d^[i_d].
class MultiIndex {
public:
    explicit MultiIndex(std::vector<std::uint32_t> exps);

    static MultiIndex zero(std::uint32_t d);
    static MultiIndex unit(std::uint32_t d, std::uint32_t j);

    std::uint32_t dim() const { return static_cast<std::uint32_t>(exps_.size()); }
    std::uint32_t weight() const;
    std::uint32_t operator[](std::uint32_t j) const { return exps_[j]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    MultiIndex operator+(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const { return exps_ == o.exps_; }
    bool operator<(const MultiIndex& o) const { return exps_ < o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

/// All multi-indices of the given weight in d variables, lexicographic.
std::vector<MultiIndex> multi_indices(std::uint32_t d, std::uint32_t weight);

/// rank Gamma_k((Z/p^r)^d) = C(k + d - 1, k).
std::uint64_t gamma_rank(std::uint32_t d, std::uint32_t k);

/// A degree-k element of Gamma_k(M) for M = (Z/p^r)^d free: a sparse
/// coefficient map over the basis {m^[i] : |i| = k}.
class GammaElement {
public:
    GammaElement(std::uint64_t p, std::uint32_t r, std::uint32_t d, std::uint32_t degree);

    /// The unit of Gamma_0.
    static GammaElement unit(std::uint64_t p, std::uint32_t r, std::uint32_t d);
    static GammaElement basis(std::uint64_t p, std::uint32_t r, std::uint32_t d,
                              const MultiIndex& i);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t dim() const { return d_; }
    std::uint32_t degree() const { return degree_; }

    void add(const MultiIndex& i, std::int64_t c);
    void add_raw(const MultiIndex& i, std::uint64_t c);
    std::uint64_t coefficient(const MultiIndex& i) const;
    const std::map<MultiIndex, std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GammaElement operator+(const GammaElement& o) const;
    GammaElement scaled(std::int64_t n) const;
    GammaElement reduce(std::uint32_t r_new) const;

    bool operator==(const GammaElement& o) const;
    bool operator!=(const GammaElement& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t d_;
    std::uint32_t degree_;
    std::uint64_t modulus_;
    std::map<MultiIndex, std::uint64_t> terms_;
};

/// The graded product. On basis vectors m^[i] m^[i'] = prod_j C(i_j + i'_j, i_j)
/// m^[i + i'], the rule forced by m^k = k! m^[k] over a torsion-free base;
/// extended bilinearly.
GammaElement gamma_product(const GammaElement& a, const GammaElement& b);

/// h^[k] for a vector h, by the closed form (sum_j a_j m_j)^[k] =
/// sum_{|i|=k} (prod_j a_j^{i_j}) m^[i] of the addition formula.
GammaElement divided_power_of_vector(const Point& h, std::uint32_t k);

/// Image of the Sym monomial c * m^e under Sym -> Gamma, which maps
/// m^k to k! m^[k]: coefficient c * prod_j e_j! on the basis index e.
GammaElement sym_to_gamma(std::uint64_t p, std::uint32_t r, const MultiIndex& monomial,
                          std::int64_t coeff);

/// A symmetric tensor: coefficients on words of length k in the letters
/// 0..d-1, invariant under permuting slots.
class SymmetricTensor {
public:
    SymmetricTensor(std::uint64_t p, std::uint32_t r, std::uint32_t d, std::uint32_t degree);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t dim() const { return d_; }
    std::uint32_t degree() const { return degree_; }

    void add(const std::vector<std::uint32_t>& word, std::uint64_t c);
    std::uint64_t coefficient(const std::vector<std::uint32_t>& word) const;
    const std::map<std::vector<std::uint32_t>, std::uint64_t>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }

    bool operator==(const SymmetricTensor& o) const;
    bool operator!=(const SymmetricTensor& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t d_;
    std::uint32_t degree_;
    std::uint64_t modulus_;
    std::map<std::vector<std::uint32_t>, std::uint64_t> words_;
};

/// Gamma = TSym for free modules: m^[i] maps to the sum of all distinct
/// words with i_j copies of letter j, each with coefficient 1.
SymmetricTensor gamma_to_tsym(const GammaElement& a);

/// Functorial Gamma_k along a linear map: each source basis vector goes to
/// the corresponding matrix column, basis monomials to products of divided
/// powers of columns. matrix has dim_out rows and a.dim() columns.
GammaElement gamma_map(const std::vector<std::vector<std::int64_t>>& matrix,
                       const GammaElement& a);

/// Degree-truncated element of the completed algebra
/// Gamma-hat = prod_{k>=0} Gamma_k: one component per degree 0..cutoff.
class GammaSeries {
public:
    GammaSeries(std::uint64_t p, std::uint32_t r, std::uint32_t d, std::uint32_t cutoff);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint32_t dim() const { return d_; }
    std::uint32_t cutoff() const { return cutoff_; }

    const GammaElement& component(std::uint32_t k) const;
    void set_component(GammaElement g);

    GammaSeries operator+(const GammaSeries& o) const;
    GammaSeries reduce(std::uint32_t r_new) const;

    bool operator==(const GammaSeries& o) const;
    bool operator!=(const GammaSeries& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t d_;
    std::uint32_t cutoff_;
    std::vector<GammaElement> components_;
};

/// Product in the completed algebra, exact within degrees <= cutoff:
/// (fg)_k = sum_{i+j=k} f_i g_j.
GammaSeries series_product(const GammaSeries& a, const GammaSeries& b);

}  // namespace iwasawa
