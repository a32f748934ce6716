#pragma once

#include <optional>
#include <string>

#include "parahess/poly_matrix.hpp"
#include "parahess/polynomial.hpp"

namespace parahess {

/// H[i][j] = d^2 f / dx_i dx_j.
template <class F>
PolyMatrix<F> hessian_matrix(const Polynomial<F>& f) {
  const std::size_t nv = f.nvars();
  PolyMatrix<F> h(f.field(), nv, nv, nv);
  auto grad = gradient(f);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i; j < nv; ++j) {
      h(i, j) = grad[i].differentiate(j);
      h(j, i) = h(i, j);
    }
  return h;
}

/// [[H, grad f], [grad f^T, 0]]. At a smooth point of X its rank is
/// rank(II_P) + 2, and its kernel projects onto the Gauss fiber cone.
template <class F>
PolyMatrix<F> bordered_hessian(const Polynomial<F>& f) {
  const std::size_t nv = f.nvars();
  PolyMatrix<F> b(f.field(), nv, nv + 1, nv + 1);
  auto grad = gradient(f);
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i; j < nv; ++j) {
      b(i, j) = grad[i].differentiate(j);
      b(j, i) = b(i, j);
    }
    b(i, nv) = grad[i];
    b(nv, i) = grad[i];
  }
  return b;
}

enum class HessianStatus { identically_zero, nonzero };

const char* to_string(HessianStatus s);

struct HessianResult {
  QPolyMatrix matrix;
  QPoly hpoly;
  HessianStatus status = HessianStatus::identically_zero;
  /// (n + 1)(d - 2).
  unsigned expected_degree = 0;
  std::optional<unsigned> degree;
  bool degree_law_holds = true;
  bool probably_zero = false;
  std::string algorithm;
};

HessianResult hessian_polynomial(const QPoly& f, const DeterminantOptions& opts = {});

struct DivisibilityCertificate {
  /// Largest h with f^h | g (0 when indeterminate).
  unsigned order = 0;
  /// g / f^order when g != 0.
  std::optional<QPoly> cofactor;
  /// g == 0: X is a component of its Hessian of every multiplicity.
  bool indeterminate = false;
  /// f^order * cofactor == g re-checked exactly.
  bool verified = false;
};

DivisibilityCertificate divisibility_order(const QPoly& f, const QPoly& g);

}  // namespace parahess
