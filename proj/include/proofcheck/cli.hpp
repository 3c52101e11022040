#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proofcheck::cli {

/// Entry point shared by the proofcheck binary and the tests. `args` is
/// argv without the program name. Human-readable output goes to `out`,
/// errors and progress notes to `err`; machine-readable JSON is written
/// to --out files (or stdout for `corpus` without --out, in which case
/// the funnel table moves to `err`).
///
/// Exit codes: 0 success (check: candidate valid), 1 check found the
/// candidate invalid, 2 usage or I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace proofcheck::cli
