#ifndef MEROBOUND_CLI_HPP
#define MEROBOUND_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "merobound/scalar.hpp"

namespace merobound::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kFalsified = 2,
  kUsage = 64,
};

// Runs one command line. Results go to `out` unless --out is given; the run
// manifest goes next to the output file, or to `err` without --out.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3", "-2/7", "0.125", "1e-3": the exact value of the literal.
Rational parse_number(std::string_view text);

// Comma-separated values and inclusive ranges "a:b:step".
std::vector<Rational> parse_grid(std::string_view text);

}  // namespace merobound::cli

#endif
