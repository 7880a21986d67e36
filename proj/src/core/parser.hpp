#ifndef MROOT_PARSER_HPP
#define MROOT_PARSER_HPP

#include <string>
#include <vector>

#include "poly.hpp"

#include <Eigen/Dense>

namespace mroot {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ")"),
          line(ln),
          column(col) {}
};

// System text format:
//   vars: x y
//   f1 = x^3/3 + y^2*x + x^2 + 2*x*y + y^2
//   f2 = ...
// Numbers may carry an exponent and an 'i' suffix; complex literals
// as (a + bi). No implicit multiplication.
PolySystem parse_system(const std::string& text);

// Dense matrix: one row per line, whitespace-separated a+bi entries.
Eigen::MatrixXcd parse_matrix(const std::string& text);

// Comma-separated components, each `re` or `re+imi` / `re-imi`.
std::vector<cd> parse_point(const std::string& text);

}  // namespace mroot

#endif
