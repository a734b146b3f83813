#ifndef SCHUR_CLI_HPP
#define SCHUR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kInputError = 2,
};

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics and warnings to err.
///
///   info <spec> | multiplier <spec> | bounds <spec> | kernel <spec>
///   verify corpus [--max-dim N] [--json] [--parallel] [--strict-remark]
///   verify lemma [--arity-max K]
///   global: --format table|json|csv
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli

#endif
