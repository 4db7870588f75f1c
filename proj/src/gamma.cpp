#include "iwasawa/gamma.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iwasawa {

MultiIndex::MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::invalid_argument("multi-index needs dimension >= 1");
}

MultiIndex MultiIndex::zero(std::uint32_t d) {
    return MultiIndex(std::vector<std::uint32_t>(d, 0));
}

MultiIndex MultiIndex::unit(std::uint32_t d, std::uint32_t j) {
    std::vector<std::uint32_t> e(d, 0);
    e.at(j) = 1;
    return MultiIndex(std::move(e));
}

std::uint32_t MultiIndex::weight() const {
    std::uint32_t w = 0;
    for (std::uint32_t e : exps_) w += e;
    return w;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (exps_.size() != o.exps_.size()) throw shape_mismatch("multi-index dimensions differ");
    std::vector<std::uint32_t> out(exps_.size());
    for (std::size_t j = 0; j < exps_.size(); ++j) out[j] = exps_[j] + o.exps_[j];
    return MultiIndex(std::move(out));
}

std::vector<MultiIndex> multi_indices(std::uint32_t d, std::uint32_t weight) {
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> cur(d, 0);
    // Lexicographic: fill coordinate j, recurse on the rest.
    auto rec = [&](auto&& self, std::uint32_t j, std::uint32_t remaining) -> void {
        if (j + 1 == d) {
            cur[j] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            cur[j] = e;
            self(self, j + 1, remaining - e);
        }
    };
    rec(rec, 0, weight);
    return out;
}

std::uint64_t gamma_rank(std::uint32_t d, std::uint32_t k) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    detail::BigNat acc(1);
    for (std::uint32_t t = 0; t < k; ++t) {
        acc.mul_u64(static_cast<std::uint64_t>(d) + k - 1 - t);
        acc.div_exact_u64(t + 1);
    }
    return acc.to_u64();
}

GammaElement::GammaElement(std::uint64_t p, std::uint32_t r, std::uint32_t d, std::uint32_t degree)
    : p_(p), r_(r), d_(d), degree_(degree) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    modulus_ = detail::checked_pow(p, r);
}

GammaElement GammaElement::unit(std::uint64_t p, std::uint32_t r, std::uint32_t d) {
    GammaElement out(p, r, d, 0);
    out.add(MultiIndex::zero(d), 1);
    return out;
}

GammaElement GammaElement::basis(std::uint64_t p, std::uint32_t r, std::uint32_t d,
                                 const MultiIndex& i) {
    GammaElement out(p, r, d, i.weight());
    out.add(i, 1);
    return out;
}

void GammaElement::add(const MultiIndex& i, std::int64_t c) {
    add_raw(i, detail::mod_reduce(c, modulus_));
}

void GammaElement::add_raw(const MultiIndex& i, std::uint64_t c) {
    if (i.dim() != d_) throw shape_mismatch("index dimension differs from element dimension");
    if (i.weight() != degree_)
        throw shape_mismatch("index of weight " + std::to_string(i.weight()) +
                             " in a degree-" + std::to_string(degree_) + " element");
    c %= modulus_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second = (it->second + c) % modulus_;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint64_t GammaElement::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
}

GammaElement GammaElement::operator+(const GammaElement& o) const {
    if (p_ != o.p_ || r_ != o.r_) throw precision_mismatch("gamma addition across distinct (p, r)");
    if (d_ != o.d_ || degree_ != o.degree_)
        throw shape_mismatch("gamma addition across distinct shape");
    GammaElement out = *this;
    for (const auto& [i, c] : o.terms_) out.add_raw(i, c);
    return out;
}

GammaElement GammaElement::scaled(std::int64_t n) const {
    GammaElement out(p_, r_, d_, degree_);
    std::uint64_t f = detail::mod_reduce(n, modulus_);
    for (const auto& [i, c] : terms_) out.add_raw(i, detail::mul_mod(c, f, modulus_));
    return out;
}

GammaElement GammaElement::reduce(std::uint32_t r_new) const {
    if (r_new > r_)
        throw precision_exhausted("cannot reduce to a higher level", r_new);
    GammaElement out(p_, r_new, d_, degree_);
    for (const auto& [i, c] : terms_) out.add_raw(i, c % out.modulus());
    return out;
}

bool GammaElement::operator==(const GammaElement& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && degree_ == o.degree_ && terms_ == o.terms_;
}

GammaElement gamma_product(const GammaElement& a, const GammaElement& b) {
    if (a.p() != b.p() || a.level() != b.level())
        throw precision_mismatch("gamma product across distinct (p, r)");
    if (a.dim() != b.dim()) throw shape_mismatch("gamma product across distinct dimensions");
    GammaElement out(a.p(), a.level(), a.dim(), a.degree() + b.degree());
    std::uint64_t m = out.modulus();
    for (const auto& [i, c] : a.terms()) {
        for (const auto& [j, e] : b.terms()) {
            std::uint64_t mult = 1 % m;
            for (std::uint32_t t = 0; t < a.dim(); ++t)
                mult = detail::mul_mod(mult, detail::binomial_mod(i[t] + j[t], i[t], m), m);
            out.add_raw(i + j, detail::mul_mod(mult, detail::mul_mod(c, e, m), m));
        }
    }
    return out;
}

GammaElement divided_power_of_vector(const Point& h, std::uint32_t k) {
    GammaElement out(h.p(), h.level(), h.dim(), k);
    std::uint64_t m = out.modulus();
    for (const MultiIndex& i : multi_indices(h.dim(), k)) {
        std::uint64_t c = 1 % m;
        for (std::uint32_t j = 0; j < h.dim(); ++j)
            c = detail::mul_mod(c, detail::pow_mod(h.coord(j), i[j], m), m);
        out.add_raw(i, c);
    }
    return out;
}

GammaElement sym_to_gamma(std::uint64_t p, std::uint32_t r, const MultiIndex& monomial,
                          std::int64_t coeff) {
    GammaElement out(p, r, monomial.dim(), monomial.weight());
    std::uint64_t m = out.modulus();
    std::uint64_t c = detail::mod_reduce(coeff, m);
    for (std::uint32_t j = 0; j < monomial.dim(); ++j)
        c = detail::mul_mod(c, detail::factorial_mod(monomial[j], m), m);
    out.add_raw(monomial, c);
    return out;
}

SymmetricTensor::SymmetricTensor(std::uint64_t p, std::uint32_t r, std::uint32_t d,
                                 std::uint32_t degree)
    : p_(p), r_(r), d_(d), degree_(degree) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    modulus_ = detail::checked_pow(p, r);
}

void SymmetricTensor::add(const std::vector<std::uint32_t>& word, std::uint64_t c) {
    if (word.size() != degree_) throw shape_mismatch("word length differs from tensor degree");
    for (std::uint32_t letter : word)
        if (letter >= d_) throw shape_mismatch("letter outside the alphabet");
    c %= modulus_;
    if (c == 0) return;
    auto [it, inserted] = words_.try_emplace(word, c);
    if (!inserted) {
        it->second = (it->second + c) % modulus_;
        if (it->second == 0) words_.erase(it);
    }
}

std::uint64_t SymmetricTensor::coefficient(const std::vector<std::uint32_t>& word) const {
    auto it = words_.find(word);
    return it == words_.end() ? 0 : it->second;
}

bool SymmetricTensor::operator==(const SymmetricTensor& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && degree_ == o.degree_ && words_ == o.words_;
}

SymmetricTensor gamma_to_tsym(const GammaElement& a) {
    SymmetricTensor out(a.p(), a.level(), a.dim(), a.degree());
    for (const auto& [i, c] : a.terms()) {
        std::vector<std::uint32_t> word;
        word.reserve(a.degree());
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            word.insert(word.end(), i[j], j);
        // next_permutation walks the distinct arrangements exactly once.
        do {
            out.add(word, c);
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

GammaElement gamma_map(const std::vector<std::vector<std::int64_t>>& matrix,
                       const GammaElement& a) {
    if (matrix.empty()) throw shape_mismatch("gamma_map needs at least one row");
    std::uint32_t d_out = static_cast<std::uint32_t>(matrix.size());
    for (const auto& row : matrix)
        if (row.size() != a.dim()) throw shape_mismatch("matrix column count differs from dimension");
    GammaElement out(a.p(), a.level(), d_out, a.degree());
    for (const auto& [i, c] : a.terms()) {
        GammaElement image = GammaElement::unit(a.p(), a.level(), d_out);
        for (std::uint32_t j = 0; j < a.dim(); ++j) {
            if (i[j] == 0) continue;
            std::vector<std::int64_t> column(d_out);
            for (std::uint32_t t = 0; t < d_out; ++t) column[t] = matrix[t][j];
            Point col(a.p(), a.level(), column);
            image = gamma_product(image, divided_power_of_vector(col, i[j]));
        }
        for (const auto& [idx, e] : image.terms())
            out.add_raw(idx, detail::mul_mod(e, c, out.modulus()));
    }
    return out;
}

GammaSeries::GammaSeries(std::uint64_t p, std::uint32_t r, std::uint32_t d, std::uint32_t cutoff)
    : p_(p), r_(r), d_(d), cutoff_(cutoff) {
    components_.reserve(cutoff + 1);
    for (std::uint32_t k = 0; k <= cutoff; ++k) components_.emplace_back(p, r, d, k);
}

const GammaElement& GammaSeries::component(std::uint32_t k) const {
    if (k > cutoff_) throw shape_mismatch("degree beyond the series cutoff");
    return components_[k];
}

void GammaSeries::set_component(GammaElement g) {
    if (g.p() != p_ || g.level() != r_ || g.dim() != d_)
        throw shape_mismatch("component shape differs from the series");
    if (g.degree() > cutoff_) throw shape_mismatch("degree beyond the series cutoff");
    components_[g.degree()] = std::move(g);
}

GammaSeries GammaSeries::operator+(const GammaSeries& o) const {
    if (p_ != o.p_ || r_ != o.r_ || d_ != o.d_ || cutoff_ != o.cutoff_)
        throw shape_mismatch("series addition across distinct shapes");
    GammaSeries out(p_, r_, d_, cutoff_);
    for (std::uint32_t k = 0; k <= cutoff_; ++k)
        out.set_component(components_[k] + o.components_[k]);
    return out;
}

GammaSeries GammaSeries::reduce(std::uint32_t r_new) const {
    GammaSeries out(p_, r_new, d_, cutoff_);
    for (std::uint32_t k = 0; k <= cutoff_; ++k) out.set_component(components_[k].reduce(r_new));
    return out;
}

bool GammaSeries::operator==(const GammaSeries& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && cutoff_ == o.cutoff_ &&
           components_ == o.components_;
}

GammaSeries series_product(const GammaSeries& a, const GammaSeries& b) {
    if (a.p() != b.p() || a.level() != b.level())
        throw precision_mismatch("series product across distinct (p, r)");
    if (a.dim() != b.dim() || a.cutoff() != b.cutoff())
        throw shape_mismatch("series product across distinct shapes");
    GammaSeries out(a.p(), a.level(), a.dim(), a.cutoff());
    for (std::uint32_t k = 0; k <= a.cutoff(); ++k) {
        GammaElement acc(a.p(), a.level(), a.dim(), k);
        for (std::uint32_t i = 0; i <= k; ++i)
            acc = acc + gamma_product(a.component(i), b.component(k - i));
        out.set_component(std::move(acc));
    }
    return out;
}

}  // namespace iwasawa
