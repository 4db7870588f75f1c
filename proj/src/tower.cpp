#include "iwasawa/tower.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "iwasawa/numeric.hpp"

namespace iwasawa {

FiniteTower::FiniteTower(std::vector<TowerLevel> levels, std::vector<IntMatrix> transitions)
    : levels_(std::move(levels)), transitions_(std::move(transitions)) {
    if (levels_.size() < 2) throw std::invalid_argument("towers need length >= 2");
    if (transitions_.size() + 1 != levels_.size())
        throw std::invalid_argument("a length-L tower carries L-1 transitions");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const TowerLevel& lv = levels_[i];
        if (!is_prime(lv.p))
            throw std::invalid_argument("level " + std::to_string(i) + ": p is not prime");
        if (lv.r < 1 || lv.n < 1)
            throw std::invalid_argument("level " + std::to_string(i) + ": need r >= 1, n >= 1");
        detail::checked_pow(lv.p, lv.r);
    }
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        const IntMatrix& t = transitions_[i];
        if (t.size() != levels_[i].n)
            throw std::invalid_argument("transition " + std::to_string(i) + ": wrong row count");
        for (const auto& row : t)
            if (row.size() != levels_[i + 1].n)
                throw std::invalid_argument("transition " + std::to_string(i) +
                                            ": wrong column count");
    }
}

namespace {

using Vec = std::vector<std::uint64_t>;

// One transition step: y = T x mod p^r of the target level.
Vec apply_step(const IntMatrix& t, const Vec& x, std::uint64_t modulus) {
    Vec y(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            std::uint64_t e = detail::mod_reduce(t[i][j], modulus);
            acc = (acc + detail::mul_mod(e, x[j], modulus)) % modulus;
        }
        y[i] = acc;
    }
    return y;
}

// The subgroup of (Z/m)^n generated by the given vectors, as an explicit set.
std::set<Vec> subgroup_closure(const std::vector<Vec>& generators, std::uint64_t modulus,
                               std::size_t n, std::size_t cap) {
    std::set<Vec> elements{Vec(n, 0)};
    std::vector<Vec> frontier{Vec(n, 0)};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& e : frontier) {
            for (const Vec& g : generators) {
                Vec sum(n);
                for (std::size_t j = 0; j < n; ++j) sum[j] = (e[j] + g[j]) % modulus;
                if (elements.insert(sum).second) {
                    if (elements.size() > cap)
                        throw std::length_error("image enumeration exceeds the element cap");
                    next.push_back(std::move(sum));
                }
            }
        }
        frontier = std::move(next);
    }
    return elements;
}

}  // namespace

MlVerdict ml_diagnose(const FiniteTower& tower, std::uint32_t base, std::size_t enumeration_cap) {
    if (base + 1 >= tower.length())
        throw std::out_of_range("base index leaves no window: need base < length - 1");
    std::uint64_t base_mod = detail::checked_pow(tower.level(base).p, tower.level(base).r);
    std::size_t base_n = tower.level(base).n;
    std::uint32_t window = static_cast<std::uint32_t>(tower.length() - 1 - base);

    std::vector<std::set<Vec>> images;
    images.reserve(window);
    for (std::uint32_t s = 1; s <= window; ++s) {
        // Images of the standard basis of level base+s under the composite,
        // reducing at every intermediate level exactly as the tower does.
        std::size_t src_n = tower.level(base + s).n;
        std::vector<Vec> gens;
        gens.reserve(src_n);
        for (std::size_t j = 0; j < src_n; ++j) {
            Vec v(src_n, 0);
            v[j] = 1;
            for (std::uint32_t step = base + s; step-- > base;) {
                std::uint64_t m = detail::checked_pow(tower.level(step).p, tower.level(step).r);
                v = apply_step(tower.transition(step), v, m);
            }
            gens.push_back(std::move(v));
        }
        images.push_back(subgroup_closure(gens, base_mod, base_n, enumeration_cap));
    }

    const std::set<Vec> trivial{Vec(base_n, 0)};
    for (std::uint32_t s = 1; s <= window; ++s)
        if (images[s - 1] == trivial) return {MlKind::Zero, s};
    for (std::uint32_t s = 1; s < window; ++s)
        if (images[s - 1] == images[s]) return {MlKind::Stabilized, s};
    return {MlKind::Undetermined, 0};
}

}  // namespace iwasawa
