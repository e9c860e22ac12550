#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "alvero/multipoly.hpp"
#include "alvero/unipoly.hpp"

namespace alvero {

/// Polynomial text format: rational literals (`3`, `-2/5`), variables `x`
/// and `a1`, `a2`, ..., operators `+ - * ^` and parentheses. Whitespace is
/// ignored. Printing emits the canonical form: terms by decreasing power of
/// x, then decreasing grevlex order on the a-variables, e.g.
/// `3*x^2 + 2*a1*x + a2`.

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const MultiPoly& p);
std::string to_string(const UniPoly& p);

/// Parses an expression free of x. nvars bounds the admissible a-indices.
MultiPoly parse_multipoly(std::string_view text, std::size_t nvars);

/// Parses an expression in x and the a-variables.
UniPoly parse_unipoly(std::string_view text, std::size_t nvars);

/// Largest a-index mentioned in text (0 when none); handy for inferring nvars.
std::size_t max_variable_index(std::string_view text);

}  // namespace alvero
