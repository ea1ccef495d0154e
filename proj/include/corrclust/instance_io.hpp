#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "corrclust/instance.hpp"

namespace corrclust {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  /// 1-based; 0 when the error is not tied to a line (e.g. a missing pair).
  int line() const { return line_; }

 private:
  int line_;
};

// CORRCLUST 1 text format:
//
//   CORRCLUST 1
//   N <n> K <K> TAU <real | INF>
//   MU <mu_0> ... <mu_{n-1}>
//   E <u> <v> <wplus> <wminus>      (exactly one line per unordered pair)
//
// '#' starts a comment that runs to the end of the line; blank lines are skipped.

WeightedInstance parse_instance(std::istream& in);
WeightedInstance parse_instance_string(const std::string& text);
WeightedInstance load_instance(const std::string& path);

void write_instance(std::ostream& out, const WeightedInstance& instance);
std::string format_instance(const WeightedInstance& instance);

}  // namespace corrclust
