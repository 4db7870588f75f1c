#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "iwasawa/moments.hpp"
#include "iwasawa/prng.hpp"
#include "iwasawa/verify.hpp"

using namespace iwasawa;

namespace {

MultiIndex mi(std::vector<std::uint32_t> e) { return MultiIndex(std::move(e)); }

// The naive monomial moment: sum_x mu(x) prod_j x_j^{i_j}, computed with
// nothing but modular powers. mom_k must reproduce it coefficient by
// coefficient.
std::uint64_t naive_moment(const FiniteMeasure& mu, const MultiIndex& i) {
    std::uint64_t m = mu.modulus();
    std::uint64_t acc = 0;
    for (const auto& [key, c] : mu.entries()) {
        std::uint64_t term = c;
        for (std::uint32_t j = 0; j < mu.dim(); ++j)
            term = detail::mul_mod(term, detail::pow_mod(key[j], i[j], m), m);
        acc = (acc + term) % m;
    }
    return acc;
}

}  // namespace

TEST_CASE("mom_k examples") {
    Prng gen(3);
    for (int i = 0; i < 20; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 5, 2, 2, 4);
        GammaElement m0 = mom_k(mu, 0);
        CHECK(m0.coefficient(MultiIndex::zero(2)) == mu.mass().value());
    }

    // mom_k(delta_h) = h^[k]
    GammaElement want(5, 2, 1, 3);
    want.add(mi({3}), 8);
    CHECK(mom_k(delta(Point(5, 2, {2})), 3) == want);

    GammaElement g = mom_k(delta(Point(5, 2, {1, 1})), 2);
    CHECK(g.coefficient(mi({2, 0})) == 1);
    CHECK(g.coefficient(mi({1, 1})) == 1);
    CHECK(g.coefficient(mi({0, 2})) == 1);
}

TEST_CASE("mom_k equals the naive monomial moments") {
    Prng gen(7);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 2 ? 3 : 5;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(2));
        FiniteMeasure mu = random_sparse_measure(gen, p, 2, d, 4);
        for (std::uint32_t k = 0; k <= 4; ++k) {
            GammaElement got = mom_k(mu, k);
            for (const MultiIndex& idx : multi_indices(d, k))
                CHECK(got.coefficient(idx) == naive_moment(mu, idx));
        }
    }
}

TEST_CASE("mom_k is linear") {
    Prng gen(11);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 3, 2, 2, 4);
        FiniteMeasure nu = random_sparse_measure(gen, 3, 2, 2, 4);
        for (std::uint32_t k = 0; k <= 4; ++k)
            CHECK(mom_k(mu + nu, k) == mom_k(mu, k) + mom_k(nu, k));
    }
}

TEST_CASE("mom_hat examples") {
    GammaSeries s = mom_hat(delta(Point::zero(5, 2, 1)), 4);
    CHECK(s.component(0) == GammaElement::unit(5, 2, 1));
    for (std::uint32_t k = 1; k <= 4; ++k) CHECK(s.component(k).is_zero());

    CHECK(mom_hat(FiniteMeasure(5, 2, 1), 3) == GammaSeries(5, 2, 1, 3));

    // group-likes multiply: mom_hat(delta_h delta_g) = mom_hat(delta_h) mom_hat(delta_g)
    FiniteMeasure dh = delta(Point(5, 2, {3}));
    FiniteMeasure dg = delta(Point(5, 2, {4}));
    CHECK(mom_hat(convolve(dh, dg), 5) == series_product(mom_hat(dh, 5), mom_hat(dg, 5)));
}

TEST_CASE("the moment map is a ring homomorphism") {
    Prng gen(13);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 2 ? 2 : 3;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(2));
        FiniteMeasure mu = random_sparse_measure(gen, p, 3, d, 4);
        FiniteMeasure nu = random_sparse_measure(gen, p, 3, d, 4);
        CHECK(mom_hat(convolve(mu, nu), 6) ==
              series_product(mom_hat(mu, 6), mom_hat(nu, 6)));
    }
}

TEST_CASE("trace compatibility: reduce then mom equals mom then trace") {
    Prng gen(17);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 2 ? 3 : 5;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(2));
        FiniteMeasure mu = random_sparse_measure(gen, p, 3, d, 4);
        FiniteMeasure down = trace(mu);
        for (std::uint32_t k = 0; k <= 5; ++k)
            CHECK(mom_k(mu, k).reduce(2) == mom_k(down, k));
        // the completed map descends the tower the same way
        CHECK(mom_hat(mu, 5).reduce(2) == mom_hat(down, 5));
    }
}

TEST_CASE("amice examples") {
    // delta_0: the constant series 1
    PowerSeriesTrunc s0 = amice(Measure(delta(Point(5, 2, {0}))), 4, 2);
    CHECK(s0.coeffs() == std::vector<std::uint64_t>{1, 0, 0, 0, 0});

    // delta_1: 1 + T
    PowerSeriesTrunc s1 = amice(Measure(delta(Point(5, 2, {1}))), 4, 2);
    CHECK(s1.coeffs() == std::vector<std::uint64_t>{1, 1, 0, 0, 0});

    // delta_2: 1 + 2T + T^2
    PowerSeriesTrunc s2 = amice(Measure(delta(Point(5, 2, {2}))), 3, 2);
    CHECK(s2.coeffs() == std::vector<std::uint64_t>{1, 2, 1, 0});

    CHECK_THROWS_AS(amice(Measure(FiniteMeasure(5, 2, 2)), 3, 2), shape_mismatch);
}

TEST_CASE("amice enforces its precision contract by level, not by accident") {
    // v_2(4!) = 3: target 2 needs working level 5.
    Measure M(delta(Point(2, 4, {3})));
    try {
        amice(M, 4, 2);
        FAIL("expected precision_exhausted");
    } catch (const precision_exhausted& e) {
        CHECK(e.required_level() == 5);
    }
    CHECK_NOTHROW(amice(Measure(delta(Point(2, 5, {3}))), 4, 2));
}

TEST_CASE("amice on deltas is the binomial expansion of (1+T)^a") {
    // p = 3, working level 3, n_max = 3 (boost v_3(3!) = 1), target 2.
    const std::uint64_t target_mod = 9;
    std::vector<std::uint64_t> row{1, 0, 0, 0};
    for (std::uint64_t a = 0; a < 27; ++a) {
        PowerSeriesTrunc s = amice(Measure(delta(Point(3, 3, {static_cast<std::int64_t>(a)}))),
                                   3, 2);
        for (std::uint32_t n = 0; n <= 3; ++n) CHECK(s.coefficient(n) == row[n]);
        for (std::uint32_t n = 3; n >= 1; --n) row[n] = (row[n] + row[n - 1]) % target_mod;
    }
}

TEST_CASE("amice is multiplicative") {
    Prng gen(19);
    for (int i = 0; i < 60; ++i) {
        std::uint64_t p = i % 2 ? 2 : 3;
        std::uint32_t n_max = 2 + static_cast<std::uint32_t>(gen.next(4));
        std::uint32_t target_r = 1 + static_cast<std::uint32_t>(gen.next(2));
        std::uint32_t R = target_r + static_cast<std::uint32_t>(legendre_valuation(n_max, p));
        FiniteMeasure mu = random_sparse_measure(gen, p, R, 1, 4);
        FiniteMeasure nu = random_sparse_measure(gen, p, R, 1, 4);
        CHECK(amice(Measure(convolve(mu, nu)), n_max, target_r) ==
              series_mul(amice(Measure(mu), n_max, target_r),
                         amice(Measure(nu), n_max, target_r)));
    }
}

TEST_CASE("laplace examples") {
    FiniteMeasure mu = delta(Point(5, 2, {3}));
    auto c = laplace(mu, 3);
    CHECK(c[0] == Residue(5, 2, 1));
    CHECK(c[1] == Residue(5, 2, 3));
    CHECK(c[2] == Residue(5, 2, 9));
    CHECK(c[3] == Residue(5, 2, 2));  // 27 mod 25

    Prng gen(23);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure nu = random_sparse_measure(gen, 3, 2, 1, 4);
        auto cs = laplace(nu, 5);
        CHECK(cs[0] == nu.mass());
        // matches the scalar coefficient of mom_n in one variable
        for (std::uint32_t n = 0; n <= 5; ++n)
            CHECK(cs[n].value() == mom_k(nu, n).coefficient(mi({n})));
    }

    CHECK_THROWS_AS(laplace(FiniteMeasure(3, 2, 2), 3), shape_mismatch);
}

TEST_CASE("push-forward covariance of moments, p | N included") {
    Prng gen(29);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 2 ? 3 : 5;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(2));
        FiniteMeasure mu = random_sparse_measure(gen, p, 2, d, 4);
        std::uint64_t N = 1 + gen.next(12);
        std::uint64_t m = mu.modulus();
        for (std::uint32_t k = 0; k <= 4; ++k) {
            GammaElement lhs =
                mom_k(pushforward(AffineMap::scaling(d, static_cast<std::int64_t>(N)), mu), k);
            std::uint64_t f = detail::pow_mod(N, k, m);
            CHECK(lhs == mom_k(mu, k).scaled(static_cast<std::int64_t>(f)));
        }
    }
}

TEST_CASE("series_mul rejects shape mismatches") {
    PowerSeriesTrunc a(3, 2, {1, 2, 3});
    CHECK_THROWS_AS(series_mul(a, PowerSeriesTrunc(3, 2, {1, 2})), shape_mismatch);
    CHECK_THROWS_AS(series_mul(a, PowerSeriesTrunc(3, 1, {1, 2, 3})), precision_mismatch);
    PowerSeriesTrunc b(3, 2, {0, 1, 0});
    CHECK(series_mul(a, b).coeffs() == std::vector<std::uint64_t>{0, 1, 2});
}
