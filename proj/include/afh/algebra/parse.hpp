#pragma once

// Polynomial text format:
//   terms `coef * x1^a1 ... xk^ak` joined by `+` / `-`, coefficients `p/q`,
//   variables x1..xN (real) or z1..zN with c1..cN for the conjugates.
// Whitespace is insignificant, `*` between factors is optional, and
// parenthesised sub-expressions (optionally raised to a power) are accepted.

#include "afh/algebra/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace afh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Real polynomial in x1..x_nvars.
RPoly parse_real_poly(std::string_view text, std::size_t nvars);

// Polynomial over Q(i) in z1..z_n, c1..c_n (2n variables). The factor `i`
// denotes the imaginary unit.
CPoly parse_complex_poly(std::string_view text, std::size_t n);

// Open condition of the form `<poly> > 0` or `<poly> < 0`. Returns the
// polynomial and the required sign (+1 or -1).
std::pair<RPoly, int> parse_constraint(std::string_view text, std::size_t nvars);

}  // namespace afh
