#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parahess/polynomial.hpp"

namespace parahess {

/// Syntax or validation failure, annotated with a 1-based line and column
/// in the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
  std::string detail;
};

/// Coordinates x_i = coordinates[i](u_1, ..., u_k) of a rational map onto X.
struct Parameterization {
  std::vector<std::string> parameter_names;
  std::vector<QPoly> coordinates;
};

struct FormDocument {
  std::string source;
  QPoly poly;
  /// Ambient projective dimension; poly has n + 1 variables.
  std::size_t n = 0;
  unsigned degree = 0;
  std::optional<Parameterization> parameterization;
  std::vector<std::string> warnings;
};

/// Parses an expression over x0..x99 into a polynomial with `nvars`
/// variables (or max index + 1 when absent). No homogeneity check.
QPoly parse_polynomial(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Parses a form file body: optional "n=<int>" first line, '#' comments,
/// then a homogeneous expression.
FormDocument parse_form(std::string_view text);

FormDocument load_form_file(const std::string& path);

/// Canonical rendering, terms in grlex-descending order, e.g.
/// "6*x0^3 - 1/2*x1*x2 + x3^3". `names` overrides the default x<i>.
std::string print_polynomial(const QPoly& p, const std::vector<std::string>& names = {});

/// "n=<n>\n<expression>\n"; parse_form(print_form(d)).poly == d.poly.
std::string print_form(const FormDocument& doc);

/// Builds a FormDocument from an already-constructed polynomial.
FormDocument make_form(const QPoly& poly, std::string source = {});

}  // namespace parahess
