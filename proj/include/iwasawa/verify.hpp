#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/measure.hpp"
#include "iwasawa/prng.hpp"

namespace iwasawa {

struct SuiteResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;

    bool passed() const { return failures == 0; }
};

/// The named verification suites, sorted by name.
const std::vector<std::string>& suite_names();

/// Run one suite. Each suite draws from its own stream, seed XOR
/// fnv1a(name), so results do not depend on which other suites run.
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

/// All suites, ordered by name.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

/// Random sparse measure over p in {2,3,5}, used by the suites and tests.
FiniteMeasure random_sparse_measure(Prng& gen, std::uint64_t p, std::uint32_t r,
                                    std::uint32_t d, std::uint32_t max_support);

}  // namespace iwasawa
