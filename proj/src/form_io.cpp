#include "parahess/form_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace parahess {

ParseError::ParseError(const std::string& message, std::size_t line_, std::size_t column_)
    : std::runtime_error("parse error at line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + message),
      line(line_),
      column(column_),
      detail(message) {}

namespace {

constexpr std::size_t kMaxVariables = 100;
constexpr unsigned long kMaxExponent = 1000;

/// Maps byte offsets back to (line, column) of the original document.
struct SourceMap {
  std::string_view text;
  std::size_t base = 0;

  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    std::size_t abs = base + offset;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < abs && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
};

class ExpressionParser {
 public:
  ExpressionParser(std::string_view expr, std::size_t nvars, const SourceMap& map)
      : s_(expr), nvars_(nvars), map_(map) {}

  QPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) map_.fail(pos_, "empty expression");
    QPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) unexpected();
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= s_.size()) map_.fail(pos_, "unexpected end of input");
    map_.fail(pos_, std::string("unexpected character '") + s_[pos_] + "'");
  }

  QPoly constant(const mpq_class& c) const {
    return QPoly::constant(RationalField{}, nvars_, c);
  }

  QPoly expr() {
    QPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        map_.fail(pos_, "implicit multiplication is not allowed; write '*'");
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    QPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') map_.fail(pos_, "negative exponents are not allowed");
      std::size_t start = pos_;
      unsigned long e = digits();
      if (e > kMaxExponent) map_.fail(start, "exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      if (pos_ >= s_.size()) map_.fail(pos_, "expected an integer, found end of input");
      map_.fail(pos_, "expected an integer");
    }
    if (pos_ - start > 6) map_.fail(start, "integer too large here");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  QPoly primary() {
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      QPoly inner = expr();
      if (peek() != ')') {
        if (pos_ >= s_.size()) map_.fail(open, "unbalanced '('");
        unexpected();
      }
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        map_.fail(start, "variable names are x0..x99");
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string idx(s_.substr(dstart, pos_ - dstart));
      if (idx.size() > 2 || (idx.size() == 2 && idx[0] == '0'))
        map_.fail(start, "variable names are x0..x99");
      std::size_t i = std::stoul(idx);
      if (i >= nvars_)
        map_.fail(start, "variable x" + idx + " exceeds the declared dimension");
      return QPoly::variable(RationalField{}, nvars_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) map_.fail(slash, "rational coefficients are written p/q without spaces");
        std::string den(s_.substr(dstart, pos_ - dstart));
        mpz_class d(den);
        if (d == 0) map_.fail(dstart, "zero denominator");
        mpq_class q{mpz_class(num), d};
        q.canonicalize();
        return constant(q);
      }
      if (pos_ < s_.size() && s_[pos_] == '.') map_.fail(pos_, "decimal coefficients are not supported");
      return constant(mpq_class(mpz_class(num)));
    }
    unexpected();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  const SourceMap& map_;
};

/// Highest variable index mentioned in the text, or -1.
long max_variable_index(std::string_view s) {
  long best = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x') continue;
    std::size_t j = i + 1;
    long v = 0;
    std::size_t nd = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && nd < 3) {
      v = v * 10 + (s[j] - '0');
      ++j;
      ++nd;
    }
    if (nd > 0 && nd <= 2) best = std::max(best, v);
  }
  return best;
}

QPoly parse_with_map(std::string_view expr, std::optional<std::size_t> nvars,
                     const SourceMap& map) {
  std::size_t nv = 0;
  if (nvars) {
    nv = *nvars;
  } else {
    nv = static_cast<std::size_t>(max_variable_index(expr) + 1);
    if (nv == 0) nv = 1;
  }
  if (nv > kMaxVariables) map.fail(0, "at most 100 variables are supported");
  return ExpressionParser(expr, nv, map).parse();
}

std::string coefficient_text(const mpq_class& c) {
  return c.get_str();
}

}  // namespace

QPoly parse_polynomial(std::string_view text, std::optional<std::size_t> nvars) {
  SourceMap map{text, 0};
  return parse_with_map(text, nvars, map);
}

FormDocument parse_form(std::string_view text) {
  std::string body(text);
  // Blank out comments in place so columns stay aligned with the source.
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '#') continue;
    while (i < body.size() && body[i] != '\n') body[i++] = ' ';
  }
  SourceMap map{text, 0};
  std::optional<std::size_t> declared;
  std::size_t expr_start = 0;
  // Directive: first non-blank line of the form "n=<int>".
  std::size_t first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == 'n') {
    std::size_t eol = body.find('\n', first);
    std::string line = body.substr(first, eol == std::string::npos ? std::string::npos : eol - first);
    std::size_t eq = line.find('=');
    std::string lhs = line.substr(0, eq);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
    if (eq == std::string::npos || lhs != "n") map.fail(first, "malformed directive, expected n=<int>");
    std::string rhs = line.substr(eq + 1);
    std::size_t a = rhs.find_first_not_of(" \t\r");
    std::size_t b = rhs.find_last_not_of(" \t\r");
    if (a == std::string::npos) map.fail(first + eq + 1, "directive n= needs an integer");
    rhs = rhs.substr(a, b - a + 1);
    for (char c : rhs)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        map.fail(first + eq + 1 + a, "directive n= needs a non-negative integer");
    if (rhs.size() > 2) map.fail(first + eq + 1 + a, "dimension too large");
    declared = std::stoul(rhs);
    if (*declared + 1 > kMaxVariables) map.fail(first + eq + 1 + a, "dimension too large");
    expr_start = eol == std::string::npos ? body.size() : eol + 1;
  }
  std::string_view expr = std::string_view(body).substr(expr_start);
  SourceMap expr_map{text, expr_start};
  std::optional<std::size_t> nvars;
  if (declared) nvars = *declared + 1;
  QPoly poly = parse_with_map(expr, nvars, expr_map);
  if (poly.is_zero()) expr_map.fail(0, "the zero polynomial does not define a hypersurface");
  if (!poly.is_homogeneous()) expr_map.fail(0, "form is not homogeneous");
  FormDocument doc = make_form(poly, std::string(text));
  return doc;
}

FormDocument make_form(const QPoly& poly, std::string source) {
  FormDocument doc;
  doc.poly = poly;
  doc.n = poly.nvars() - 1;
  doc.degree = poly.total_degree().value_or(0);
  doc.source = source.empty() ? print_polynomial(poly) : std::move(source);
  if (doc.degree < 3)
    doc.warnings.push_back("degree " + std::to_string(doc.degree) +
                           " < 3: Hessian analysis assumes d >= 3");
  return doc;
}

FormDocument load_form_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open form file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_form(ss.str());
}

std::string print_polynomial(const QPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i);
  };
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = sgn(c) < 0;
    mpq_class mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += coefficient_text(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coefficient_text(mag) + "*" + mono;
    }
  }
  return out;
}

std::string print_form(const FormDocument& doc) {
  return "n=" + std::to_string(doc.n) + "\n" + print_polynomial(doc.poly) + "\n";
}

}  // namespace parahess
