#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "iwasawa/json_io.hpp"
#include "iwasawa/prng.hpp"
#include "iwasawa/verify.hpp"

using namespace iwasawa;
using nlohmann::json;

TEST_CASE("measure round trip") {
    Prng gen(5);
    for (int i = 0; i < 60; ++i) {
        std::uint64_t p = i % 2 ? 3 : 5;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(gen.next(3));
        FiniteMeasure mu = random_sparse_measure(gen, p, 2, d, 5);
        CHECK(measure_from_json(measure_to_json(mu)) == mu);
    }
}

TEST_CASE("ingestion reduces coordinates and coefficients") {
    json j = {{"p", 5}, {"r", 2}, {"d", 1},
              {"entries", json::array({{{"x", {27}}, {"c", -1}}})}};
    FiniteMeasure mu = measure_from_json(j);
    CHECK(mu.coefficient(Point(5, 2, {2})) == 24);

    // duplicate keys accumulate
    json dup = {{"p", 5}, {"r", 2}, {"d", 1},
                {"entries", json::array({{{"x", {2}}, {"c", 3}}, {{"x", {27}}, {"c", 4}}})}};
    CHECK(measure_from_json(dup).coefficient(Point(5, 2, {2})) == 7);

    // entries cancelling to zero vanish from the support
    json cancel = {{"p", 5}, {"r", 2}, {"d", 1},
                   {"entries", json::array({{{"x", {2}}, {"c", 3}}, {{"x", {2}}, {"c", -3}}})}};
    CHECK(measure_from_json(cancel).is_zero());
}

TEST_CASE("malformed measures are named errors") {
    CHECK_THROWS_AS(measure_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(measure_from_json({{"r", 2}, {"d", 1}, {"entries", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        measure_from_json({{"p", 4}, {"r", 2}, {"d", 1}, {"entries", json::array()}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        measure_from_json({{"p", 5}, {"r", 2}, {"d", 2},
                           {"entries", json::array({{{"x", {1}}, {"c", 1}}})}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        measure_from_json({{"p", 5}, {"r", 2}, {"d", 1},
                           {"entries", json::array({{{"x", {1.5}}, {"c", 1}}})}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        measure_from_json({{"p", 5}, {"r", 2}, {"d", 1},
                           {"entries", json::array({{{"c", 1}}})}}),
        std::invalid_argument);
}

TEST_CASE("series serialization") {
    PowerSeriesTrunc s(3, 2, {1, 2, 10});
    json j = series_to_json(s);
    CHECK(j["p"] == 3);
    CHECK(j["r"] == 2);
    CHECK(j["coeffs"] == json::array({1, 2, 1}));

    std::vector<Residue> cs{Residue(5, 2, 1), Residue(5, 2, 26)};
    json lj = laplace_to_json(5, 2, cs);
    CHECK(lj["coeffs"] == json::array({1, 1}));
}

TEST_CASE("gamma and log serialization") {
    FiniteMeasure mu = delta(Point(5, 2, {2}));
    GammaSeries s = mom_hat(mu, 3);
    json j = gamma_series_to_json(s);
    CHECK(j["cutoff"] == 3);
    CHECK(j["components"].size() == 4);
    CHECK(j["components"][3]["k"] == 3);
    CHECK(j["components"][3]["terms"][0]["c"] == 8);
    CHECK(j["components"][3]["terms"][0]["i"] == json::array({3}));

    json lj = log_element_to_json(one_k(5, 2, 1, 2));
    CHECK(lj["k"] == 2);
    CHECK(lj["terms"][0]["i"] == json::array({2, 0}));
}

TEST_CASE("tower parsing and verdicts") {
    json tj = {{"levels", json::array({{{"p", 5}, {"r", 1}, {"n", 1}},
                                       {{"p", 5}, {"r", 1}, {"n", 1}},
                                       {{"p", 5}, {"r", 1}, {"n", 1}}})},
               {"transitions", json::array({json::array({json::array({5})}),
                                            json::array({json::array({5})})})}};
    FiniteTower t = tower_from_json(tj);
    MlVerdict v = ml_diagnose(t, 0);
    CHECK(v == MlVerdict{MlKind::Zero, 1});
    json vj = verdict_to_json(v);
    CHECK(vj["verdict"] == "zero");
    CHECK(vj["s"] == 1);
    CHECK(verdict_to_json({MlKind::Stabilized, 2})["verdict"] == "stabilized");
    CHECK(verdict_to_json({MlKind::Undetermined, 0})["verdict"] == "undetermined");
    CHECK_FALSE(verdict_to_json({MlKind::Undetermined, 0}).contains("s"));

    CHECK_THROWS_AS(tower_from_json(json{{"levels", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(tower_from_json(json{{"levels", json::array()}}), std::invalid_argument);
}

TEST_CASE("serialized output is deterministic") {
    Prng gen(9);
    FiniteMeasure mu = random_sparse_measure(gen, 3, 2, 2, 5);
    CHECK(measure_to_json(mu).dump() == measure_to_json(mu).dump());
    CHECK(gamma_series_to_json(mom_hat(mu, 4)).dump() ==
          gamma_series_to_json(mom_hat(mu, 4)).dump());
}
