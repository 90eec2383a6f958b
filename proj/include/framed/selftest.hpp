#pragma once

#include "framed/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace framed {

std::vector<std::string> selftest_suites();

/// Runs one property suite ("cocycle", "duality", "homology" or "all").
/// The report has "passed", per-property sample counts and the first counterexample of any failure.
Json run_selftest(const std::string& suite, std::uint64_t seed);

}  // namespace framed
