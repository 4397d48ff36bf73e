/**
 * @file cli.hpp
 * @brief Command-line driver: subcommand dispatch and JSON reporting.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cat2vect::cli {

/// Runs one subcommand. Writes a single JSON report to `out` and returns the
/// process exit code: 0 on success with all verification flags true, 2 when
/// a verification check fails, 1 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace cat2vect::cli
