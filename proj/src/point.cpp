#include "iwasawa/point.hpp"

#include <stdexcept>
#include <string>

namespace iwasawa {

Point::Point(std::uint64_t p, std::uint32_t r, const std::vector<std::int64_t>& coords)
    : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("precision level must be >= 1");
    if (coords.empty()) throw std::invalid_argument("points need dimension >= 1");
    modulus_ = detail::checked_pow(p, r);
    coords_.reserve(coords.size());
    for (std::int64_t c : coords) coords_.push_back(detail::mod_reduce(c, modulus_));
}

Point Point::zero(std::uint64_t p, std::uint32_t r, std::uint32_t d) {
    return {p, r, std::vector<std::int64_t>(d, 0)};
}

Point Point::reduce(std::uint32_t r_new) const {
    if (r_new > r_)
        throw precision_exhausted("cannot reduce level " + std::to_string(r_) + " to higher level " +
                                      std::to_string(r_new),
                                  r_new);
    Point out;
    out.p_ = p_;
    out.r_ = r_new;
    out.modulus_ = detail::checked_pow(p_, r_new);
    out.coords_.reserve(coords_.size());
    for (std::uint64_t c : coords_) out.coords_.push_back(c % out.modulus_);
    return out;
}

Point Point::operator+(const Point& o) const {
    if (p_ != o.p_ || r_ != o.r_)
        throw precision_mismatch("point addition across distinct (p, r)");
    if (coords_.size() != o.coords_.size())
        throw shape_mismatch("point addition across distinct dimensions");
    Point out = *this;
    for (std::size_t j = 0; j < coords_.size(); ++j)
        out.coords_[j] = (coords_[j] + o.coords_[j]) % modulus_;
    return out;
}

Point Point::scaled(std::int64_t n) const {
    Point out = *this;
    std::uint64_t f = detail::mod_reduce(n, modulus_);
    for (auto& c : out.coords_) c = detail::mul_mod(c, f, modulus_);
    return out;
}

bool Point::operator<(const Point& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (r_ != o.r_) return r_ < o.r_;
    return coords_ < o.coords_;
}

}  // namespace iwasawa
