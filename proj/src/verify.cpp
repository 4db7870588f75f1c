#include "iwasawa/verify.hpp"

#include <array>
#include <stdexcept>

#include "iwasawa/log_stalk.hpp"
#include "iwasawa/moments.hpp"
#include "iwasawa/tower.hpp"

namespace iwasawa {

namespace {

constexpr std::array<std::uint64_t, 3> kPrimes{2, 3, 5};

struct Params {
    std::uint64_t p;
    std::uint32_t r;
    std::uint32_t d;
};

Params draw_params(Prng& gen, std::uint32_t min_r = 1) {
    Params out;
    out.p = kPrimes[gen.next(kPrimes.size())];
    out.r = min_r + static_cast<std::uint32_t>(gen.next(4 - min_r));  // min_r..3
    out.d = 1 + static_cast<std::uint32_t>(gen.next(2));
    return out;
}

Point random_point(Prng& gen, std::uint64_t p, std::uint32_t r, std::uint32_t d) {
    std::uint64_t m = detail::checked_pow(p, r);
    std::vector<std::int64_t> coords(d);
    for (auto& c : coords) c = static_cast<std::int64_t>(gen.next(m));
    return {p, r, coords};
}

// mom_k(mu * nu) = sum_{i+j=k} mom_i(mu) mom_j(nu), all k <= k_max.
bool check_ring_hom(const FiniteMeasure& mu, const FiniteMeasure& nu, std::uint32_t k_max) {
    FiniteMeasure conv = convolve(mu, nu);
    for (std::uint32_t k = 0; k <= k_max; ++k) {
        GammaElement expect(mu.p(), mu.level(), mu.dim(), k);
        for (std::uint32_t i = 0; i <= k; ++i)
            expect = expect + gamma_product(mom_k(mu, i), mom_k(nu, k - i));
        if (mom_k(conv, k) != expect) return false;
    }
    return true;
}

SuiteResult suite_ring_hom(Prng& gen) {
    SuiteResult res{"ring-hom"};
    for (int i = 0; i < 200; ++i) {
        Params pr = draw_params(gen);
        FiniteMeasure mu = random_sparse_measure(gen, pr.p, pr.r, pr.d, 4);
        FiniteMeasure nu = random_sparse_measure(gen, pr.p, pr.r, pr.d, 4);
        ++res.instances;
        if (!check_ring_hom(mu, nu, 6)) ++res.failures;
    }
    return res;
}

SuiteResult suite_trace_compat(Prng& gen) {
    SuiteResult res{"trace-compat"};
    for (int i = 0; i < 200; ++i) {
        Params pr = draw_params(gen, /*min_r=*/2);
        FiniteMeasure mu = random_sparse_measure(gen, pr.p, pr.r, pr.d, 4);
        FiniteMeasure dn = trace(mu);
        ++res.instances;
        for (std::uint32_t k = 0; k <= 6; ++k) {
            if (mom_k(mu, k).reduce(pr.r - 1) != mom_k(dn, k)) {
                ++res.failures;
                break;
            }
        }
    }
    return res;
}

SuiteResult suite_amice_mult(Prng& gen) {
    SuiteResult res{"amice-mult"};

    // Exhaustive delta behaviour: amice(delta_a) is the truncation of
    // (1+T)^a. Expected values from an additive Pascal triangle, a path
    // sharing nothing with the multiply/divide binomial implementation.
    {
        const std::uint64_t p = 3;
        const std::uint32_t big_r = 4, target_r = 2, n_max = 8;
        const std::uint64_t top_mod = detail::checked_pow(p, big_r);
        const std::uint64_t target_mod = detail::checked_pow(p, target_r);
        std::vector<std::uint64_t> row(n_max + 1, 0);
        row[0] = 1;  // a = 0
        for (std::uint64_t a = 0; a < top_mod; ++a) {
            Measure M(delta(Point(p, big_r, {static_cast<std::int64_t>(a)})));
            PowerSeriesTrunc series = amice(M, n_max, target_r);
            ++res.instances;
            for (std::uint32_t n = 0; n <= n_max; ++n) {
                if (series.coefficient(n) != row[n]) {
                    ++res.failures;
                    break;
                }
            }
            for (std::uint32_t n = n_max; n >= 1; --n)
                row[n] = (row[n] + row[n - 1]) % target_mod;
        }
    }

    // Multiplicativity: amice(mu * nu) = amice(mu) amice(nu) mod (p^r, T^{n+1}).
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = kPrimes[gen.next(kPrimes.size())];
        std::uint32_t target_r = 1 + static_cast<std::uint32_t>(gen.next(2));
        std::uint32_t n_max = 2 + static_cast<std::uint32_t>(gen.next(5));
        std::uint32_t big_r =
            target_r + static_cast<std::uint32_t>(legendre_valuation(n_max, p));
        FiniteMeasure mu = random_sparse_measure(gen, p, big_r, 1, 4);
        FiniteMeasure nu = random_sparse_measure(gen, p, big_r, 1, 4);
        PowerSeriesTrunc lhs = amice(Measure(convolve(mu, nu)), n_max, target_r);
        PowerSeriesTrunc rhs =
            series_mul(amice(Measure(mu), n_max, target_r), amice(Measure(nu), n_max, target_r));
        ++res.instances;
        if (lhs != rhs) ++res.failures;
    }
    return res;
}

SuiteResult suite_interpolation(Prng& gen) {
    SuiteResult res{"interpolation"};
    constexpr std::array<std::uint64_t, 5> kFactors{1, 2, 3, 5, 12};
    for (int i = 0; i < 500; ++i) {
        Params pr = draw_params(gen);
        FiniteMeasure mu = random_sparse_measure(gen, pr.p, pr.r, pr.d, 4);
        // every tenth instance forces p | N; the rest draw freely
        std::uint64_t N = i % 10 == 0 ? pr.p : kFactors[gen.next(kFactors.size())];
        std::uint32_t k = static_cast<std::uint32_t>(gen.next(7));
        ++res.instances;
        if (!interpolation_check(mu, N, k).equal) ++res.failures;
    }
    return res;
}

SuiteResult suite_gamma_identities(Prng&) {
    SuiteResult res{"gamma-identities"};
    for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}}) {
        for (std::uint32_t r = 1; r <= 2; ++r) {
            std::uint64_t m = detail::checked_pow(p, r);
            for (std::uint32_t d = 1; d <= 2; ++d) {
                std::vector<Point> all_points;
                {
                    std::uint64_t total = 1;
                    for (std::uint32_t j = 0; j < d; ++j) total *= m;
                    for (std::uint64_t idx = 0; idx < total; ++idx) {
                        std::vector<std::int64_t> coords(d);
                        std::uint64_t rest = idx;
                        for (std::uint32_t j = d; j-- > 0;) {
                            coords[j] = static_cast<std::int64_t>(rest % m);
                            rest /= m;
                        }
                        all_points.emplace_back(p, r, coords);
                    }
                }

                // m^k = k! m^[k]: the k-fold graded product against the
                // scaled divided power, every vector, every k <= 5.
                for (const Point& h : all_points) {
                    GammaElement lin = divided_power_of_vector(h, 1);
                    GammaElement power = GammaElement::unit(p, r, d);
                    for (std::uint32_t k = 1; k <= 5; ++k) {
                        power = gamma_product(power, lin);
                        std::uint64_t kfact = detail::factorial_mod(k, m);
                        ++res.instances;
                        if (power !=
                            divided_power_of_vector(h, k).scaled(static_cast<std::int64_t>(kfact)))
                            ++res.failures;
                    }
                }

                // Addition formula, exhaustive pairs.
                for (const Point& g : all_points) {
                    for (const Point& h : all_points) {
                        Point sum = g + h;
                        for (std::uint32_t k = 0; k <= 5; ++k) {
                            GammaElement expect(p, r, d, k);
                            for (std::uint32_t i = 0; i <= k; ++i)
                                expect = expect + gamma_product(divided_power_of_vector(g, i),
                                                                divided_power_of_vector(h, k - i));
                            ++res.instances;
                            if (divided_power_of_vector(sum, k) != expect) ++res.failures;
                        }
                    }
                }

                // Rank and the Sym -> Gamma -> TSym composite. The composite
                // must equal the full symmetrization: every arrangement of
                // the monomial's letters, multiplicities included.
                for (std::uint32_t k = 0; k <= 5; ++k) {
                    ++res.instances;
                    auto basis = multi_indices(d, k);
                    if (gamma_rank(d, k) != basis.size()) ++res.failures;
                    for (const MultiIndex& e : basis) {
                        SymmetricTensor expect(p, r, d, k);
                        std::vector<std::uint32_t> letters;
                        for (std::uint32_t j = 0; j < d; ++j)
                            letters.insert(letters.end(), e[j], j);
                        std::vector<std::uint32_t> word(k);
                        std::vector<bool> used(k, false);
                        auto rec = [&](auto&& self, std::uint32_t pos) -> void {
                            if (pos == k) {
                                expect.add(word, 1);
                                return;
                            }
                            for (std::uint32_t t = 0; t < k; ++t) {
                                if (used[t]) continue;
                                used[t] = true;
                                word[pos] = letters[t];
                                self(self, pos + 1);
                                used[t] = false;
                            }
                        };
                        rec(rec, 0);
                        ++res.instances;
                        if (gamma_to_tsym(sym_to_gamma(p, r, e, 1)) != expect) ++res.failures;
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult suite_log_transition(Prng& gen) {
    SuiteResult res{"log-transition"};
    for (int i = 0; i < 200; ++i) {
        Params pr = draw_params(gen);
        FiniteMeasure mu = random_sparse_measure(gen, pr.p, pr.r, pr.d, 4);
        std::uint32_t k = 1 + static_cast<std::uint32_t>(gen.next(6));
        ++res.instances;

        bool ok = transition(one_k(pr.p, pr.r, pr.d, k)) == one_k(pr.p, pr.r, pr.d, k - 1);

        LogStalkElement cmp = comp_k(mu, k);
        ok = ok && pr_k(cmp) == mom_k(mu, k);
        ok = ok && transition(cmp) == comp_k(mu, k - 1);

        // Second comp formula: sum_x mu(x) (e_0 + x)^[k] in Gamma_k of the
        // extended module, e_0 prepended as an extra coordinate 1.
        LogStalkElement direct(pr.p, pr.r, pr.d, k);
        for (const auto& [key, c] : mu.entries()) {
            std::vector<std::int64_t> ext(1, 1);
            for (std::uint64_t coord : key) ext.push_back(static_cast<std::int64_t>(coord));
            GammaElement dp = divided_power_of_vector(Point(pr.p, pr.r, ext), k);
            for (const auto& [idx, e] : dp.terms())
                direct.add_raw(idx, detail::mul_mod(e, c, direct.modulus()));
        }
        ok = ok && direct == cmp;

        if (!ok) ++res.failures;
    }
    return res;
}

SuiteResult suite_ml_examples(Prng&) {
    SuiteResult res{"ml-examples"};
    auto expect = [&res](const FiniteTower& t, std::uint32_t base, MlVerdict want) {
        ++res.instances;
        if (!(ml_diagnose(t, base) == want)) ++res.failures;
    };

    const TowerLevel z9{3, 2, 1};
    IntMatrix id1{{1}};
    expect(FiniteTower({z9, z9, z9, z9}, {id1, id1, id1}), 0, {MlKind::Stabilized, 1});

    IntMatrix zero1{{0}};
    expect(FiniteTower({z9, z9, z9, z9}, {zero1, zero1, zero1}), 0, {MlKind::Zero, 1});

    const TowerLevel z5{5, 1, 1};
    IntMatrix mul_p{{5}};
    expect(FiniteTower({z5, z5, z5}, {mul_p, mul_p}), 0, {MlKind::Zero, 1});

    // mult-by-2 on Z/4: image shrinks to 2Z/4, then dies.
    const TowerLevel z4{2, 2, 1};
    IntMatrix mul_2{{2}};
    expect(FiniteTower({z4, z4, z4, z4}, {mul_2, mul_2, mul_2}), 0, {MlKind::Zero, 2});

    // mult-by-2 on Z/8 with a short window: strictly shrinking, no verdict.
    const TowerLevel z8{2, 3, 1};
    expect(FiniteTower({z8, z8, z8}, {mul_2, mul_2}), 0, {MlKind::Undetermined, 0});

    return res;
}

}  // namespace

FiniteMeasure random_sparse_measure(Prng& gen, std::uint64_t p, std::uint32_t r, std::uint32_t d,
                                    std::uint32_t max_support) {
    FiniteMeasure mu(p, r, d);
    std::uint64_t m = mu.modulus();
    std::uint32_t support = 1 + static_cast<std::uint32_t>(gen.next(max_support));
    for (std::uint32_t i = 0; i < support; ++i)
        mu.add(random_point(gen, p, r, d), static_cast<std::int64_t>(1 + gen.next(m - 1)));
    return mu;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "amice-mult",   "gamma-identities", "interpolation", "log-transition",
        "ml-examples",  "ring-hom",         "trace-compat",
    };
    return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
    Prng gen(seed ^ fnv1a(name));
    if (name == "ring-hom") return suite_ring_hom(gen);
    if (name == "trace-compat") return suite_trace_compat(gen);
    if (name == "amice-mult") return suite_amice_mult(gen);
    if (name == "interpolation") return suite_interpolation(gen);
    if (name == "gamma-identities") return suite_gamma_identities(gen);
    if (name == "log-transition") return suite_log_transition(gen);
    if (name == "ml-examples") return suite_ml_examples(gen);
    throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.reserve(suite_names().size());
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed));
    return out;
}

}  // namespace iwasawa
