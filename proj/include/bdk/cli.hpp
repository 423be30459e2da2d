#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdk::cli {

/// Exit codes: 0 success; 1 hypothesis gate failed or unit class torsion
/// (analyze/recover); 2 parse or usage error; 3 internal inconsistency or
/// oracle suite failure. Results go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace bdk::cli
