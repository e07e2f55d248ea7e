#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordprob::cli {

  // Exit codes.
  inline constexpr int ok        = 0;  // decided or completed
  inline constexpr int failure   = 1;  // usage or input error
  inline constexpr int undecided = 2;  // budget exhausted or inconclusive

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace wordprob::cli
