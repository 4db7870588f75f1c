#pragma once

#include <cstdint>
#include <vector>

#include "iwasawa/residue.hpp"

namespace iwasawa {

/// A point of H_r = (Z/p^r)^d: d coordinates sharing one (p, r),
/// kept coordinate-wise reduced.
class Point {
public:
    Point(std::uint64_t p, std::uint32_t r, const std::vector<std::int64_t>& coords);

    static Point zero(std::uint64_t p, std::uint32_t r, std::uint32_t d);

    std::uint64_t p() const { return p_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(coords_.size()); }

    std::uint64_t coord(std::uint32_t j) const { return coords_[j]; }
    Residue residue(std::uint32_t j) const { return {p_, r_, static_cast<std::int64_t>(coords_[j])}; }
    const std::vector<std::uint64_t>& coords() const { return coords_; }

    Point reduce(std::uint32_t r_new) const;
    Point operator+(const Point& o) const;
    Point scaled(std::int64_t n) const;

    bool operator==(const Point& o) const {
        return p_ == o.p_ && r_ == o.r_ && coords_ == o.coords_;
    }
    bool operator<(const Point& o) const;

private:
    Point() = default;

    std::uint64_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<std::uint64_t> coords_;
};

}  // namespace iwasawa
