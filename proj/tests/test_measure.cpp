#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "iwasawa/measure.hpp"
#include "iwasawa/prng.hpp"
#include "iwasawa/verify.hpp"

using namespace iwasawa;

namespace {

// Every measure on (Z/p^r)^1 by dense index, for the exhaustive checks.
std::vector<FiniteMeasure> all_measures_p2r2() {
    std::vector<FiniteMeasure> out;
    for (std::uint64_t code = 0; code < 256; ++code) {
        std::vector<std::uint64_t> dense(4);
        std::uint64_t rest = code;
        for (int j = 0; j < 4; ++j) {
            dense[j] = rest % 4;
            rest /= 4;
        }
        out.push_back(FiniteMeasure::from_dense(2, 2, 1, dense));
    }
    return out;
}

}  // namespace

TEST_CASE("delta") {
    Point x(5, 2, {3});
    FiniteMeasure mu = delta(x);
    CHECK(mu.coefficient(x) == 1);
    CHECK(mu.support_size() == 1);
    CHECK(mu.mass() == Residue::one(5, 2));
    CHECK(mu.coefficient(Point(5, 2, {4})) == 0);

    // Points reduce on construction, so delta keys are canonical.
    CHECK(delta(Point(5, 2, {28})) == delta(Point(5, 2, {3})));
}

TEST_CASE("trace examples") {
    CHECK(trace(delta(Point(3, 2, {7}))) == delta(Point(3, 1, {1})));

    FiniteMeasure uniform(2, 2, 1);
    for (std::int64_t x = 0; x < 4; ++x) uniform.add(Point(2, 2, {x}), 1);
    CHECK(trace(uniform).is_zero());  // each fiber sums to 2 = 0 mod 2

    CHECK(trace(FiniteMeasure(2, 2, 1)).is_zero());
    CHECK_THROWS_AS(trace(FiniteMeasure(2, 1, 1)), std::domain_error);
}

TEST_CASE("convolution examples") {
    CHECK(convolve(delta(Point(5, 2, {2})), delta(Point(5, 2, {3}))) ==
          delta(Point(5, 2, {5})));

    Prng gen(17);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 3, 2, 2, 4);
        FiniteMeasure unit = delta(Point::zero(3, 2, 2));
        CHECK(convolve(unit, mu) == mu);
        FiniteMeasure nu = random_sparse_measure(gen, 3, 2, 2, 4);
        CHECK(convolve(mu, nu).mass() == mu.mass() * nu.mass());
    }

    CHECK_THROWS_AS(convolve(FiniteMeasure(3, 2, 1), FiniteMeasure(3, 2, 2)), shape_mismatch);
    CHECK_THROWS_AS(convolve(FiniteMeasure(3, 2, 1), FiniteMeasure(3, 1, 1)),
                    precision_mismatch);
}

TEST_CASE("group ring axioms, exhaustive at p=2 r=2 d=1 against the dense oracle") {
    auto all = all_measures_p2r2();
    FiniteMeasure unit = delta(Point::zero(2, 2, 1));

    for (const auto& a : all) {
        CHECK(convolve(unit, a) == a);
        for (const auto& b : all) {
            FiniteMeasure ab = convolve(a, b);
            CHECK(ab == convolve(b, a));
            CHECK(ab == convolve_dense(a, b));
        }
    }

    // Deltas span the ring and convolution is bilinear, so delta triples
    // carry the full content of associativity; random triples cross-check.
    for (std::int64_t x = 0; x < 4; ++x)
        for (std::int64_t y = 0; y < 4; ++y)
            for (std::int64_t z = 0; z < 4; ++z) {
                FiniteMeasure a = delta(Point(2, 2, {x}));
                FiniteMeasure b = delta(Point(2, 2, {y}));
                FiniteMeasure c = delta(Point(2, 2, {z}));
                CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
            }
    Prng gen(23);
    for (int i = 0; i < 300; ++i) {
        FiniteMeasure a = random_sparse_measure(gen, 2, 2, 1, 4);
        FiniteMeasure b = random_sparse_measure(gen, 2, 2, 1, 4);
        FiniteMeasure c = random_sparse_measure(gen, 2, 2, 1, 4);
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
        CHECK(convolve(a, b + c) == convolve(a, b) + convolve(a, c));
    }
}

TEST_CASE("trace is a ring homomorphism") {
    Prng gen(37);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 5);
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(2));
        FiniteMeasure mu = random_sparse_measure(gen, p, 3, d, 4);
        FiniteMeasure nu = random_sparse_measure(gen, p, 3, d, 4);
        CHECK(trace(convolve(mu, nu)) == convolve(trace(mu), trace(nu)));
        CHECK(trace(mu + nu) == trace(mu) + trace(nu));
    }
}

TEST_CASE("delta is multiplicative, exhaustive at p=3 r=2") {
    for (std::int64_t x = 0; x < 9; ++x)
        for (std::int64_t y = 0; y < 9; ++y)
            CHECK(convolve(delta(Point(3, 2, {x})), delta(Point(3, 2, {y}))) ==
                  delta(Point(3, 2, {x + y})));
    for (std::int64_t x1 = 0; x1 < 3; ++x1)
        for (std::int64_t x2 = 0; x2 < 3; ++x2)
            for (std::int64_t y1 = 0; y1 < 3; ++y1)
                for (std::int64_t y2 = 0; y2 < 3; ++y2)
                    CHECK(convolve(delta(Point(3, 1, {x1, x2})), delta(Point(3, 1, {y1, y2}))) ==
                          delta(Point(3, 1, {x1 + y1, x2 + y2})));
}

TEST_CASE("pushforward examples") {
    CHECK(pushforward(AffineMap::scaling(1, 2), delta(Point(3, 2, {3}))) ==
          delta(Point(3, 2, {6})));

    // p | N collapses mass onto the image subgroup.
    CHECK(pushforward(AffineMap::scaling(1, 3), delta(Point(3, 1, {1}))) ==
          delta(Point(3, 1, {0})));

    Prng gen(5);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 3, 2, 2, 4);
        CHECK(pushforward(AffineMap::identity(2), mu) == mu);
    }
}

TEST_CASE("linear pushforward is a convolution homomorphism and commutes with trace") {
    Prng gen(29);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = i % 2 ? 3 : 2;
        FiniteMeasure mu = random_sparse_measure(gen, p, 2, 2, 4);
        FiniteMeasure nu = random_sparse_measure(gen, p, 2, 2, 4);
        AffineMap phi({{static_cast<std::int64_t>(gen.next(9)), static_cast<std::int64_t>(gen.next(9))},
                       {static_cast<std::int64_t>(gen.next(9)), static_cast<std::int64_t>(gen.next(9))}},
                      {0, 0});
        CHECK(pushforward(phi, convolve(mu, nu)) ==
              convolve(pushforward(phi, mu), pushforward(phi, nu)));
        CHECK(trace(pushforward(phi, mu)) == pushforward(phi, trace(mu)));
    }

    // Projection to the first coordinate: d' < d is allowed.
    AffineMap proj({{1, 0}}, {0});
    CHECK(pushforward(proj, delta(Point(5, 1, {2, 4}))) == delta(Point(5, 1, {2})));
}

TEST_CASE("affine pushforward carries the offset") {
    AffineMap shifted({{2}}, {1});
    CHECK(pushforward(shifted, delta(Point(5, 2, {3}))) == delta(Point(5, 2, {7})));
    CHECK_THROWS_AS(pushforward(shifted, FiniteMeasure(5, 2, 2)), shape_mismatch);
    CHECK_FALSE(shifted.is_linear());
    CHECK(AffineMap::scaling(2, 7).is_linear());
}

TEST_CASE("tensor examples") {
    CHECK(tensor(delta(Point(5, 2, {2})), delta(Point(5, 2, {3, 4}))) ==
          delta(Point(5, 2, {2, 3, 4})));
    CHECK(tensor(delta(Point(5, 2, {2})), FiniteMeasure(5, 2, 1)).is_zero());
    CHECK_THROWS_AS(tensor(FiniteMeasure(5, 2, 1), FiniteMeasure(5, 1, 1)), precision_mismatch);

    // Fubini: convolution on the product is the tensor of convolutions.
    Prng gen(31);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure m1 = random_sparse_measure(gen, 2, 2, 1, 3);
        FiniteMeasure m2 = random_sparse_measure(gen, 2, 2, 1, 3);
        FiniteMeasure n1 = random_sparse_measure(gen, 2, 2, 1, 3);
        FiniteMeasure n2 = random_sparse_measure(gen, 2, 2, 1, 3);
        CHECK(tensor(convolve(m1, m2), convolve(n1, n2)) ==
              convolve(tensor(m1, n1), tensor(m2, n2)));
    }
}

TEST_CASE("measure_at_level") {
    Measure M(delta(Point(3, 2, {7})));
    CHECK(M.at_level(2) == M.top());
    CHECK(M.at_level(1) == delta(Point(3, 1, {1})));

    try {
        M.at_level(3);
        FAIL("expected precision_exhausted");
    } catch (const precision_exhausted& e) {
        CHECK(e.required_level() == 3);
    }

    Prng gen(41);
    for (int i = 0; i < 50; ++i) {
        Measure N(random_sparse_measure(gen, 2, 3, 2, 4));
        for (std::uint32_t r = 2; r <= 3; ++r)
            CHECK(trace(N.at_level(r)) == N.at_level(r - 1));
    }
}

TEST_CASE("dense realization round-trips and is capped") {
    Prng gen(43);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 2, 2, 2, 5);
        CHECK(FiniteMeasure::from_dense(2, 2, 2, mu.dense()) == mu);
    }
    CHECK_THROWS_AS(FiniteMeasure(2, 20, 2).dense(1000), std::length_error);
}

TEST_CASE("sparse vs dense convolution, multi-dimensional spot checks") {
    Prng gen(47);
    for (int i = 0; i < 50; ++i) {
        FiniteMeasure mu = random_sparse_measure(gen, 3, 1, 2, 5);
        FiniteMeasure nu = random_sparse_measure(gen, 3, 1, 2, 5);
        CHECK(convolve(mu, nu) == convolve_dense(mu, nu));
    }
}
