#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ratrec::cli {

// Runs the command line given argv-style arguments (program name excluded).
// Results go to out, diagnostics to err. Exit status: 0 success and
// certified, 2 success but uncertified, 1 usage/parse/domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Deterministic sampling benchmark: per error band (below the legacy radius,
// between legacy and improved, between improved and uniqueness) reports the
// success rates of continued-fraction recovery and of the Farey oracle as CSV
// rows "band,cf_success,oracle_success,trials". Identical inputs produce
// identical bytes.
std::string run_bench(long long bound, long long trials, std::uint64_t seed);

}  // namespace ratrec::cli
