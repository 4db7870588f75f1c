// Command-line front end: JSON measures and towers in, transforms and
// verification reports out. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 precision error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "iwasawa/json_io.hpp"
#include "iwasawa/moments.hpp"
#include "iwasawa/tower.hpp"
#include "iwasawa/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecisionError = 3;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << j.dump() << "\n";
}

struct CrossChecks {
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> d;
};

void cross_check(const CrossChecks& want, const iwasawa::FiniteMeasure& mu) {
    if (want.p && static_cast<std::uint64_t>(*want.p) != mu.p())
        throw std::invalid_argument("--p disagrees with the input file");
    if (want.r && static_cast<std::uint64_t>(*want.r) != mu.level())
        throw std::invalid_argument("--r disagrees with the input file");
    if (want.d && static_cast<std::uint64_t>(*want.d) != mu.dim())
        throw std::invalid_argument("--d disagrees with the input file");
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<iwasawa::SuiteResult> results;
    if (suite.empty()) {
        results = iwasawa::run_all_suites(seed);
    } else {
        results.push_back(iwasawa::run_suite(suite, seed));
    }
    std::cout << "seed: " << seed << "\n";
    bool all_pass = true;
    for (const auto& res : results) {
        if (res.passed()) {
            std::cout << res.name << ": pass (" << res.instances << " instances)\n";
        } else {
            std::cout << res.name << ": FAIL (" << res.failures << "/" << res.instances
                      << " instances failed)\n";
            all_pass = false;
        }
    }
    std::cout << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic measures: moments, Amice/Laplace transforms, "
                 "Mittag-Leffler diagnostics, verification suites"};
    app.require_subcommand(1);

    std::string in_path, out_path, suite;
    std::uint64_t seed = 0;
    std::uint64_t dense_cap = iwasawa::FiniteMeasure::kDefaultDenseCap;
    std::int64_t cutoff = -1, degree = -1, n_max = -1, scale_n = 1;
    CrossChecks want;
    std::int64_t opt_p = -1, opt_r = -1, opt_d = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_in) {
        auto* in_opt = cmd->add_option("--in", in_path, "input JSON file");
        if (needs_in) in_opt->required();
        cmd->add_option("--out", out_path, "output JSON file (default stdout)");
        cmd->add_option("--dense-cap", dense_cap, "size guard for materialized data");
        cmd->add_option("--p", opt_p, "expected prime (cross-checked against input)");
        cmd->add_option("--d", opt_d, "expected dimension (cross-checked against input)");
    };

    CLI::App* cmd_moments = app.add_subcommand("moments", "moment maps mom_0..mom_K of a measure");
    add_common(cmd_moments, true);
    cmd_moments->add_option("-K,--cutoff", cutoff, "emit the whole series mom_0..mom_K");
    cmd_moments->add_option("-k,--degree", degree, "emit the single component mom_k");
    cmd_moments->add_option("--N", scale_n,
                            "first push the measure forward along x -> Nx (default 1)");
    cmd_moments->add_option("--r", opt_r, "expected level (cross-checked against input)");

    CLI::App* cmd_amice = app.add_subcommand("amice", "Amice transform of a 1-variable measure");
    add_common(cmd_amice, true);
    cmd_amice->add_option("--n-max", n_max, "top T-power")->required();
    cmd_amice->add_option("--r", opt_r,
                          "target coefficient precision (default: the largest the working "
                          "level admits)");

    CLI::App* cmd_laplace =
        app.add_subcommand("laplace", "Laplace transform coefficients of t^[0]..t^[K]");
    add_common(cmd_laplace, true);
    cmd_laplace->add_option("-K,--cutoff", cutoff, "top coefficient index")->required();
    cmd_laplace->add_option("--r", opt_r, "expected level (cross-checked against input)");

    CLI::App* cmd_ml = app.add_subcommand("ml", "Mittag-Leffler diagnosis of a finite tower");
    cmd_ml->add_option("--in", in_path, "tower JSON file")->required();
    cmd_ml->add_option("--out", out_path, "output JSON file (default stdout)");
    cmd_ml->add_option("--r", opt_r, "base index of the window (default 0)");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the named verification suites");
    cmd_verify->add_option("--suite", suite, "run a single suite by name");
    cmd_verify->add_option("--seed", seed, "PRNG seed, echoed in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(cmd_verify)) return run_verify(suite, seed);

        if (app.got_subcommand(cmd_ml)) {
            iwasawa::FiniteTower tower = iwasawa::tower_from_json(load_json(in_path));
            if (opt_r >= static_cast<std::int64_t>(tower.length()))
                throw std::invalid_argument("--r is beyond the tower length");
            std::uint32_t base = opt_r < 0 ? 0 : static_cast<std::uint32_t>(opt_r);
            emit(iwasawa::verdict_to_json(iwasawa::ml_diagnose(tower, base)), out_path);
            return kExitOk;
        }

        iwasawa::FiniteMeasure mu = iwasawa::measure_from_json(load_json(in_path));
        want.p = opt_p < 0 ? std::nullopt : std::optional(opt_p);
        want.d = opt_d < 0 ? std::nullopt : std::optional(opt_d);

        if (app.got_subcommand(cmd_moments)) {
            want.r = opt_r < 0 ? std::nullopt : std::optional(opt_r);
            cross_check(want, mu);
            if ((cutoff < 0) == (degree < 0))
                throw std::invalid_argument("pass exactly one of --cutoff or --degree");
            if (scale_n < 1) throw std::invalid_argument("--N must be >= 1");
            if (scale_n > 1)
                mu = iwasawa::pushforward(iwasawa::AffineMap::scaling(mu.dim(), scale_n), mu);
            std::uint32_t K = static_cast<std::uint32_t>(cutoff < 0 ? degree : cutoff);
            std::uint64_t terms =
                iwasawa::gamma_rank(mu.dim(), K) * (K + 1) * (mu.support_size() + 1);
            if (terms > dense_cap)
                throw std::invalid_argument("size cap exceeded: raise --dense-cap");
            if (degree >= 0) {
                nlohmann::json j = iwasawa::gamma_element_to_json(
                    iwasawa::mom_k(mu, static_cast<std::uint32_t>(degree)));
                j["p"] = mu.p();
                j["r"] = mu.level();
                j["d"] = mu.dim();
                emit(j, out_path);
            } else {
                emit(iwasawa::gamma_series_to_json(iwasawa::mom_hat(mu, K)), out_path);
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_amice)) {
            cross_check(want, mu);
            if (n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
            if (n_max > (1 << 20)) throw std::invalid_argument("--n-max too large");
            iwasawa::Measure M(mu);
            std::uint64_t boost =
                iwasawa::legendre_valuation(static_cast<std::uint64_t>(n_max), mu.p());
            std::uint32_t target_r;
            if (opt_r < 0) {
                if (boost + 1 > mu.level())
                    throw iwasawa::precision_exhausted(
                        "working level " + std::to_string(mu.level()) +
                            " cannot fund any coefficient precision; need level >= " +
                            std::to_string(boost + 1),
                        static_cast<std::uint32_t>(boost + 1));
                target_r = mu.level() - static_cast<std::uint32_t>(boost);
            } else {
                target_r = static_cast<std::uint32_t>(opt_r);
            }
            emit(iwasawa::series_to_json(
                     iwasawa::amice(M, static_cast<std::uint32_t>(n_max), target_r)),
                 out_path);
            return kExitOk;
        }

        if (app.got_subcommand(cmd_laplace)) {
            want.r = opt_r < 0 ? std::nullopt : std::optional(opt_r);
            cross_check(want, mu);
            if (cutoff < 0) throw std::invalid_argument("--cutoff must be >= 0");
            auto coeffs = iwasawa::laplace(mu, static_cast<std::uint32_t>(cutoff));
            emit(iwasawa::laplace_to_json(mu.p(), mu.level(), coeffs), out_path);
            return kExitOk;
        }
    } catch (const iwasawa::precision_exhausted& e) {
        std::cerr << "precision error: " << e.what()
                  << " (required level: " << e.required_level() << ")\n";
        return kExitPrecisionError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
