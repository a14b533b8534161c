#pragma once

#include <string>
#include <vector>

#include "crf/curve.hpp"
#include "crf/rational_function.hpp"

namespace crf {

/// Syntax error with the 0-based character offset where parsing stopped.
class ParseError : public MathError {
  public:
    ParseError(const std::string& message, std::size_t position)
        : MathError(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Parses an ASCII expression over the declared variables.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | variable | '(' expr ')'
///
/// The result is reduced; it is a polynomial exactly when is_polynomial().
RationalFunction parse_expression(const std::string& text, const VariableList& variables);

/// Like parse_expression but rejects results with a non-constant denominator.
Polynomial parse_polynomial(const std::string& text, const VariableList& variables);

/// "(expr_in_t, ..., expr_in_t)".
Curve parse_curve(const std::string& text, const std::string& parameter = "t");

/// Comma separated rationals, e.g. "3, -1/2, 0".
std::vector<Rational> parse_point(const std::string& text);

/// Comma separated names, e.g. "x,y,z".
VariableList parse_variable_list(const std::string& text);

/// Splits on `sep` at parenthesis depth zero and trims whitespace.
std::vector<std::string> split_top_level(const std::string& text, char sep);

} // namespace crf
