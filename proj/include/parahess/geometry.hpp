#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "parahess/linalg.hpp"
#include "parahess/poly_matrix.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/random.hpp"
#include "parahess/univariate.hpp"

namespace parahess {

class SamplingExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user-supplied point that is off X, singular, or malformed.
class PointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f together with its gradient and Hessian, built once per form.
template <class F>
class HypersurfaceDerivatives {
 public:
  explicit HypersurfaceDerivatives(Polynomial<F> f)
      : f_(std::move(f)), grad_(gradient(f_)),
        hess_(f_.field(), f_.nvars(), f_.nvars(), f_.nvars()) {
    for (std::size_t i = 0; i < f_.nvars(); ++i)
      for (std::size_t j = i; j < f_.nvars(); ++j) {
        hess_(i, j) = grad_[i].differentiate(j);
        hess_(j, i) = hess_(i, j);
      }
  }

  const Polynomial<F>& form() const { return f_; }
  const std::vector<Polynomial<F>>& grad() const { return grad_; }
  const PolyMatrix<F>& hessian() const { return hess_; }
  const F& field() const { return f_.field(); }
  /// Ambient projective dimension.
  std::size_t n() const { return f_.nvars() - 1; }

  Vector<F> gradient_at(const Vector<F>& p) const {
    Vector<F> g;
    g.reserve(grad_.size());
    for (const auto& gi : grad_) g.push_back(gi.evaluate(p));
    return g;
  }

 private:
  Polynomial<F> f_;
  std::vector<Polynomial<F>> grad_;
  PolyMatrix<F> hess_;
};

enum class PointStatus { ok, not_on_hypersurface, singular };

const char* to_string(PointStatus s);

/// Everything the second fundamental form says about one point.
/// II_P is the Gram matrix of H(f)(P) on W = ker grad f(P); P always lies
/// in its radical, so its rank is the rank of the quadric in P(T_P X).
template <class F>
struct PointAnalysis {
  Vector<F> point;
  PointStatus status = PointStatus::ok;
  bool on_hypersurface = false;
  bool smooth = false;
  std::optional<Vector<F>> gradient;
  std::optional<LinearSubspace<F>> tangent;
  std::optional<Matrix<F>> gram;
  std::optional<std::size_t> ii_rank;
  std::optional<int> parabolic_h;
  /// Affine cone over the Gauss fiber: dimension parabolic_h + 1.
  std::optional<LinearSubspace<F>> fiber;
  bool flex = false;
};

template <class F>
struct FiberCheckResult {
  bool containment = false;
  bool tangency_constant = false;
  std::vector<Vector<F>> samples;
};

/// First nonzero coordinate 1 over a prime field; primitive integer vector
/// with positive leading entry over the rationals.
template <class F>
Vector<F> normalize_point(const F& field, Vector<F> p) {
  auto lead = std::find_if(p.begin(), p.end(), [&](const auto& e) { return !field.is_zero(e); });
  if (lead == p.end()) throw std::invalid_argument("the zero vector is not a projective point");
  if constexpr (std::is_same_v<F, RationalField>) {
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
    mpz_class g = 0;
    for (auto& c : p) {
      c *= den;
      g = gcd(g, mpz_class(c.get_num()));
    }
    if (sgn(*lead) < 0) g = -g;
    for (auto& c : p) c /= g;
  } else {
    auto inv = field.one() / *lead;
    for (auto& c : p) c = c * inv;
  }
  return p;
}

template <class F>
bool proportional(const Vector<F>& a, const Vector<F>& b, const F& field) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!field.is_zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

/// Nonzero random scalar: small integers over Q, uniform over Z/pZ.
template <class F>
typename F::Element random_nonzero(const F& field, Rng& rng) {
  if constexpr (std::is_same_v<F, RationalField>) {
    long long v = rng.between(1, 9);
    return field.from_int(rng.below(2) ? v : -v);
  } else {
    return field.from_uint(1 + rng.below(field.modulus() - 1));
  }
}

template <class F>
PointAnalysis<F> analyze_point(const HypersurfaceDerivatives<F>& d, const Vector<F>& p) {
  const F& field = d.field();
  if (p.size() != d.form().nvars()) throw std::invalid_argument("point arity mismatch");
  PointAnalysis<F> a;
  a.point = normalize_point(field, p);
  a.on_hypersurface = field.is_zero(d.form().evaluate(a.point));
  if (!a.on_hypersurface) {
    a.status = PointStatus::not_on_hypersurface;
    return a;
  }
  Vector<F> g = d.gradient_at(a.point);
  a.gradient = g;
  a.smooth = std::any_of(g.begin(), g.end(), [&](const auto& e) { return !field.is_zero(e); });
  if (!a.smooth) {
    a.status = PointStatus::singular;
    return a;
  }
  Matrix<F> grow(field, 1, g.size());
  for (std::size_t j = 0; j < g.size(); ++j) grow(0, j) = g[j];
  a.tangent = rank_kernel(grow).kernel;
  Matrix<F> h = d.hessian().evaluate(a.point);
  a.gram = restrict_bilinear(h, *a.tangent);
  a.ii_rank = rank(*a.gram);
  a.parabolic_h = static_cast<int>(d.n()) - 1 - static_cast<int>(*a.ii_rank);
  a.fiber = radical_of_restriction(h, *a.tangent);
  a.flex = *a.ii_rank == 0;
  return a;
}

/// Fiber containment in X (restriction vanishes identically) and constancy
/// of the tangent hyperplane at >= 3 random points of the fiber.
template <class F>
FiberCheckResult<F> check_fiber(const HypersurfaceDerivatives<F>& d, const PointAnalysis<F>& a,
                                Rng& rng, std::size_t tangency_samples = 3) {
  if (!a.smooth || !a.fiber) throw std::invalid_argument("check_fiber needs a smooth point");
  const F& field = d.field();
  FiberCheckResult<F> r;
  r.containment = restrict_to_subspace(d.form(), a.fiber->basis()).is_zero();
  r.tangency_constant = true;
  const auto& basis = a.fiber->basis();
  for (std::size_t s = 0; s < tangency_samples; ++s) {
    Vector<F> q(basis.front().size(), field.zero());
    for (const auto& b : basis) {
      auto c = random_nonzero(field, rng);
      for (std::size_t k = 0; k < q.size(); ++k) q[k] = q[k] + c * b[k];
    }
    if (std::all_of(q.begin(), q.end(), [&](const auto& e) { return field.is_zero(e); })) continue;
    if (!proportional(d.gradient_at(q), *a.gradient, field)) r.tangency_constant = false;
    r.samples.push_back(normalize_point(field, std::move(q)));
  }
  return r;
}

/// Univariate polynomial in variable `var` after fixing the others.
UniPolyModP specialize(const FpPoly& f, const Vector<PrimeField>& values, std::size_t var);

/// A smooth point of V(f) over Z/pZ. Each attempt fixes random values for
/// all variables but one and takes a root of the resulting univariate
/// polynomial; the last variable is tried first, then the others in
/// descending order.
Vector<PrimeField> sample_point(const FpPoly& f, Rng& rng, int max_attempts = 64);

/// Convenience overload: reduces f mod p (BadPrimeError on failure).
Vector<PrimeField> sample_point(const QPoly& f, std::uint64_t p, std::uint64_t seed,
                                int max_attempts = 64);

}  // namespace parahess

