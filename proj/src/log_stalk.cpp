#include "iwasawa/log_stalk.hpp"

#include <stdexcept>
#include <string>

#include "iwasawa/moments.hpp"

namespace iwasawa {

LogStalkElement::LogStalkElement(std::uint64_t p, std::uint32_t r, std::uint32_t h_dim,
                                 std::uint32_t degree)
    : p_(p), r_(r), d_(h_dim), degree_(degree) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    if (h_dim < 1) throw std::invalid_argument("H must have rank >= 1");
    modulus_ = detail::checked_pow(p, r);
}

void LogStalkElement::add(const MultiIndex& i, std::int64_t c) {
    add_raw(i, detail::mod_reduce(c, modulus_));
}

void LogStalkElement::add_raw(const MultiIndex& i, std::uint64_t c) {
    if (i.dim() != d_ + 1)
        throw shape_mismatch("log-stalk indices carry 1 + rank(H) exponents");
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

std::uint64_t LogStalkElement::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
}

LogStalkElement LogStalkElement::operator+(const LogStalkElement& o) const {
    if (p_ != o.p_ || r_ != o.r_)
        throw precision_mismatch("log-stalk addition across distinct (p, r)");
    if (d_ != o.d_ || degree_ != o.degree_)
        throw shape_mismatch("log-stalk addition across distinct shapes");
    LogStalkElement out = *this;
    for (const auto& [i, c] : o.terms_) out.add_raw(i, c);
    return out;
}

LogStalkElement LogStalkElement::scaled(std::int64_t n) const {
    LogStalkElement out(p_, r_, d_, degree_);
    std::uint64_t f = detail::mod_reduce(n, modulus_);
    for (const auto& [i, c] : terms_) out.add_raw(i, detail::mul_mod(c, f, modulus_));
    return out;
}

LogStalkElement LogStalkElement::reduce(std::uint32_t r_new) const {
    if (r_new > r_) throw precision_exhausted("cannot reduce to a higher level", r_new);
    LogStalkElement out(p_, r_new, d_, degree_);
    for (const auto& [i, c] : terms_) out.add_raw(i, c % out.modulus());
    return out;
}

bool LogStalkElement::operator==(const LogStalkElement& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && degree_ == o.degree_ && terms_ == o.terms_;
}

LogStalkElement one_k(std::uint64_t p, std::uint32_t r, std::uint32_t h_dim, std::uint32_t k) {
    LogStalkElement out(p, r, h_dim, k);
    std::vector<std::uint32_t> e(h_dim + 1, 0);
    e[0] = k;
    out.add(MultiIndex(std::move(e)), 1);
    return out;
}

LogStalkElement transition(const LogStalkElement& a) {
    if (a.degree() == 0)
        throw std::domain_error("transition lowers degree; degree 0 has no floor");
    LogStalkElement out(a.p(), a.level(), a.h_dim(), a.degree() - 1);
    for (const auto& [i, c] : a.terms()) {
        if (i[0] == 0) continue;  // pure-H slice dies
        std::vector<std::uint32_t> e = i.exponents();
        --e[0];
        out.add_raw(MultiIndex(std::move(e)), c);
    }
    return out;
}

GammaElement slice(const LogStalkElement& a, std::uint32_t i0) {
    if (i0 > a.degree()) throw shape_mismatch("slice exponent exceeds the degree");
    GammaElement out(a.p(), a.level(), a.h_dim(), a.degree() - i0);
    for (const auto& [i, c] : a.terms()) {
        if (i[0] != i0) continue;
        std::vector<std::uint32_t> rest(i.exponents().begin() + 1, i.exponents().end());
        out.add_raw(MultiIndex(std::move(rest)), c);
    }
    return out;
}

GammaElement pr_k(const LogStalkElement& a) { return slice(a, 0); }

LogStalkElement embed_slice(const GammaElement& g, std::uint32_t i0) {
    LogStalkElement out(g.p(), g.level(), g.dim(), g.degree() + i0);
    for (const auto& [i, c] : g.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(g.dim() + 1);
        e.push_back(i0);
        e.insert(e.end(), i.exponents().begin(), i.exponents().end());
        out.add_raw(MultiIndex(std::move(e)), c);
    }
    return out;
}

LogStalkElement comp_k(const FiniteMeasure& mu, std::uint32_t k) {
    LogStalkElement out(mu.p(), mu.level(), mu.dim(), k);
    for (std::uint32_t i = 0; i <= k; ++i)
        out = out + embed_slice(mom_k(mu, i), k - i);
    return out;
}

InterpolationWitness interpolation_check(const FiniteMeasure& mu, std::uint64_t N,
                                         std::uint32_t k) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    AffineMap scale = AffineMap::scaling(mu.dim(), static_cast<std::int64_t>(N % mu.modulus()));
    GammaElement lhs = mom_k(pushforward(scale, mu), k);
    std::uint64_t factor = detail::pow_mod(N % mu.modulus(), k, mu.modulus());
    GammaElement rhs = mom_k(mu, k).scaled(static_cast<std::int64_t>(factor));
    return {lhs == rhs, lhs, rhs};
}

}  // namespace iwasawa
