#include "iwasawa/measure.hpp"

#include <stdexcept>
#include <string>

namespace iwasawa {

AffineMap::AffineMap(std::vector<std::vector<std::int64_t>> matrix,
                     std::vector<std::int64_t> offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
    if (matrix_.empty()) throw shape_mismatch("affine map needs at least one row");
    if (offset_.size() != matrix_.size())
        throw shape_mismatch("affine offset length must match the row count");
    dim_in_ = static_cast<std::uint32_t>(matrix_.front().size());
    if (dim_in_ == 0) throw shape_mismatch("affine map needs at least one column");
    for (const auto& row : matrix_)
        if (row.size() != dim_in_) throw shape_mismatch("ragged affine matrix");
}

AffineMap AffineMap::identity(std::uint32_t d) { return scaling(d, 1); }

AffineMap AffineMap::scaling(std::uint32_t d, std::int64_t factor) {
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
    for (std::uint32_t j = 0; j < d; ++j) m[j][j] = factor;
    return {std::move(m), std::vector<std::int64_t>(d, 0)};
}

bool AffineMap::is_linear() const {
    for (std::int64_t b : offset_)
        if (b != 0) return false;
    return true;
}

Point AffineMap::apply(const Point& x) const {
    if (x.dim() != dim_in_) throw shape_mismatch("affine map applied to wrong dimension");
    std::uint64_t m = x.modulus();
    std::vector<std::int64_t> out(matrix_.size());
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        std::uint64_t acc = detail::mod_reduce(offset_[i], m);
        for (std::uint32_t j = 0; j < dim_in_; ++j) {
            std::uint64_t entry = detail::mod_reduce(matrix_[i][j], m);
            acc = (acc + detail::mul_mod(entry, x.coord(j), m)) % m;
        }
        out[i] = static_cast<std::int64_t>(acc);
    }
    return {x.p(), x.level(), out};
}

FiniteMeasure::FiniteMeasure(std::uint64_t p, std::uint32_t r, std::uint32_t d)
    : p_(p), r_(r), d_(d) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    modulus_ = detail::checked_pow(p, r);
}

void FiniteMeasure::require_compatible(const FiniteMeasure& o) const {
    if (p_ != o.p_ || r_ != o.r_)
        throw precision_mismatch("measures at distinct (p, r)");
    if (d_ != o.d_) throw shape_mismatch("measures on distinct dimensions");
}

void FiniteMeasure::add(const Point& x, std::int64_t c) {
    if (x.p() != p_ || x.level() != r_)
        throw precision_mismatch("point and measure live at distinct (p, r)");
    if (x.dim() != d_) throw shape_mismatch("point and measure dimensions differ");
    add_raw(x.coords(), detail::mod_reduce(c, modulus_));
}

void FiniteMeasure::add_raw(std::vector<std::uint64_t> key, std::uint64_t c) {
    c %= modulus_;
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second = (it->second + c) % modulus_;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::uint64_t FiniteMeasure::coefficient(const Point& x) const {
    if (x.p() != p_ || x.level() != r_)
        throw precision_mismatch("point and measure live at distinct (p, r)");
    if (x.dim() != d_) throw shape_mismatch("point and measure dimensions differ");
    auto it = coeffs_.find(x.coords());
    return it == coeffs_.end() ? 0 : it->second;
}

Residue FiniteMeasure::mass() const {
    std::uint64_t total = 0;
    for (const auto& [key, c] : coeffs_) total = (total + c) % modulus_;
    return {p_, r_, static_cast<std::int64_t>(total)};
}

FiniteMeasure FiniteMeasure::operator+(const FiniteMeasure& o) const {
    require_compatible(o);
    FiniteMeasure out = *this;
    for (const auto& [key, c] : o.coeffs_) out.add_raw(key, c);
    return out;
}

FiniteMeasure FiniteMeasure::scaled(std::int64_t n) const {
    FiniteMeasure out(p_, r_, d_);
    std::uint64_t f = detail::mod_reduce(n, modulus_);
    for (const auto& [key, c] : coeffs_) out.add_raw(key, detail::mul_mod(c, f, modulus_));
    return out;
}

bool FiniteMeasure::operator==(const FiniteMeasure& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && coeffs_ == o.coeffs_;
}

std::vector<std::uint64_t> FiniteMeasure::dense(std::size_t cap) const {
    std::size_t total = 1;
    for (std::uint32_t j = 0; j < d_; ++j) {
        if (total > cap / modulus_)
            throw std::length_error("dense realization of p^{rd} entries exceeds the cap");
        total *= modulus_;
    }
    std::vector<std::uint64_t> out(total, 0);
    for (const auto& [key, c] : coeffs_) {
        std::size_t idx = 0;
        for (std::uint64_t coord : key) idx = idx * modulus_ + coord;
        out[idx] = c;
    }
    return out;
}

FiniteMeasure FiniteMeasure::from_dense(std::uint64_t p, std::uint32_t r, std::uint32_t d,
                                        const std::vector<std::uint64_t>& values) {
    FiniteMeasure out(p, r, d);
    std::size_t expected = 1;
    for (std::uint32_t j = 0; j < d; ++j) expected *= out.modulus_;
    if (values.size() != expected)
        throw shape_mismatch("dense array has wrong length for (p, r, d)");
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        if (values[idx] % out.modulus_ == 0) continue;
        std::vector<std::uint64_t> key(d);
        std::size_t rest = idx;
        for (std::uint32_t j = d; j-- > 0;) {
            key[j] = rest % out.modulus_;
            rest /= out.modulus_;
        }
        out.add_raw(std::move(key), values[idx]);
    }
    return out;
}

FiniteMeasure delta(const Point& x) {
    FiniteMeasure out(x.p(), x.level(), x.dim());
    out.add(x, 1);
    return out;
}

FiniteMeasure trace(const FiniteMeasure& mu) {
    if (mu.level() < 2)
        throw std::domain_error("trace needs level >= 2; level 1 has no lower floor");
    FiniteMeasure out(mu.p(), mu.level() - 1, mu.dim());
    std::uint64_t m = out.modulus();
    // std::map iteration makes the fiber summation order lexicographic.
    for (const auto& [key, c] : mu.entries()) {
        std::vector<std::uint64_t> reduced(key.size());
        for (std::size_t j = 0; j < key.size(); ++j) reduced[j] = key[j] % m;
        out.add_raw(std::move(reduced), c % m);
    }
    return out;
}

FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) {
    if (mu.p() != nu.p() || mu.level() != nu.level())
        throw precision_mismatch("convolution across distinct (p, r)");
    if (mu.dim() != nu.dim()) throw shape_mismatch("convolution across distinct dimensions");
    FiniteMeasure out(mu.p(), mu.level(), mu.dim());
    std::uint64_t m = out.modulus();
    for (const auto& [x, a] : mu.entries()) {
        for (const auto& [y, b] : nu.entries()) {
            std::vector<std::uint64_t> z(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) z[j] = (x[j] + y[j]) % m;
            out.add_raw(std::move(z), detail::mul_mod(a, b, m));
        }
    }
    return out;
}

FiniteMeasure convolve_dense(const FiniteMeasure& mu, const FiniteMeasure& nu, std::size_t cap) {
    if (mu.p() != nu.p() || mu.level() != nu.level())
        throw precision_mismatch("convolution across distinct (p, r)");
    if (mu.dim() != nu.dim()) throw shape_mismatch("convolution across distinct dimensions");
    auto a = mu.dense(cap);
    auto b = nu.dense(cap);
    std::uint64_t m = mu.modulus();
    std::uint32_t d = mu.dim();
    std::vector<std::uint64_t> out(a.size(), 0);
    std::vector<std::uint64_t> xi(d), yi(d), zi(d);
    auto decode = [&](std::size_t idx, std::vector<std::uint64_t>& v) {
        for (std::uint32_t j = d; j-- > 0;) {
            v[j] = idx % m;
            idx /= m;
        }
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        decode(i, xi);
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k] == 0) continue;
            decode(k, yi);
            std::size_t idx = 0;
            for (std::uint32_t j = 0; j < d; ++j) idx = idx * m + (xi[j] + yi[j]) % m;
            out[idx] = (out[idx] + detail::mul_mod(a[i], b[k], m)) % m;
        }
    }
    return FiniteMeasure::from_dense(mu.p(), mu.level(), d, out);
}

FiniteMeasure pushforward(const AffineMap& phi, const FiniteMeasure& mu) {
    if (phi.dim_in() != mu.dim()) throw shape_mismatch("push-forward along wrong input dimension");
    FiniteMeasure out(mu.p(), mu.level(), phi.dim_out());
    for (const auto& [key, c] : mu.entries()) {
        std::vector<std::int64_t> coords(key.begin(), key.end());
        Point image = phi.apply(Point(mu.p(), mu.level(), coords));
        out.add_raw(image.coords(), c);
    }
    return out;
}

FiniteMeasure tensor(const FiniteMeasure& mu, const FiniteMeasure& nu) {
    if (mu.p() != nu.p() || mu.level() != nu.level())
        throw precision_mismatch("tensor across distinct (p, r)");
    FiniteMeasure out(mu.p(), mu.level(), mu.dim() + nu.dim());
    std::uint64_t m = out.modulus();
    for (const auto& [x, a] : mu.entries()) {
        for (const auto& [y, b] : nu.entries()) {
            std::vector<std::uint64_t> key;
            key.reserve(x.size() + y.size());
            key.insert(key.end(), x.begin(), x.end());
            key.insert(key.end(), y.begin(), y.end());
            out.add_raw(std::move(key), detail::mul_mod(a, b, m));
        }
    }
    return out;
}

FiniteMeasure Measure::at_level(std::uint32_t r) const {
    if (r < 1) throw std::domain_error("levels start at 1");
    if (r > working_level())
        throw precision_exhausted("measure held at level " + std::to_string(working_level()) +
                                      " cannot produce level " + std::to_string(r) +
                                      "; rebuild at higher working precision",
                                  r);
    FiniteMeasure cur = top_;
    while (cur.level() > r) cur = trace(cur);
    return cur;
}

}  // namespace iwasawa
