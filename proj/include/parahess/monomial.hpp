#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace parahess {

/// Exponent vector x0^e0 * ... * xn^en.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps)
      : exps_(std::move(exps)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}
  Monomial(std::initializer_list<unsigned> exps)
      : Monomial(std::vector<unsigned>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_.at(i) = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.degree_ += o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    r.degree_ -= degree_;
    return r;
  }

  /// Lowers exponent i by one; requires exps[i] > 0.
  Monomial lowered(std::size_t i) const {
    Monomial r(*this);
    --r.exps_[i];
    --r.degree_;
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x0 > x1 > ... > xn.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// Map comparator placing the grlex-largest monomial first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

}  // namespace parahess
