#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parahess/catalog.hpp"
#include "parahess/geometry.hpp"
#include "parahess/poly_matrix.hpp"

namespace parahess {

/// The request does not apply to the input (e.g. the base point is not
/// parabolic, or it is not general along the chosen direction).
class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FocalMode { exact, numeric };

const char* to_string(FocalMode m);

/// First-order description of a curve on X through a base point.
/// Exact mode: P(t) = base + t * velocity + O(t^2) over Q, either the jet of
/// a rational parameterization (f(P(t)) == 0 identically, checked) or the
/// tangent line base + t * velocity, which agrees with a curve on X to first
/// order because velocity lies in T_P X.
/// Numeric mode: base and direction in floating point, with points at
/// base +- eps * direction pulled back onto X by Newton steps.
struct FamilyPath {
  FocalMode mode = FocalMode::exact;
  std::string source;  // "parameterization", "tangent_line" or "numeric"
  Vector<RationalField> base;
  Vector<RationalField> velocity;
  std::vector<double> base_numeric;
  std::vector<double> direction_numeric;
  double eps = 1e-5;
};

struct NumericTolerances {
  /// Singular values below rank_tol * sigma_max count as zero (kernels).
  double rank_tol = 1e-9;
  /// Singular values of the finite-difference derivative above deriv_tol
  /// count toward rho.
  double deriv_tol = 1e-6;
};

struct FocalProbeResult {
  FocalMode mode = FocalMode::exact;
  std::string path_source;
  std::size_t direction_index = 0;
  /// Exact base point / velocity, or their floating counterparts.
  Vector<RationalField> base;
  Vector<RationalField> velocity;
  std::vector<double> base_numeric;
  std::vector<double> direction_numeric;
  int h = 0;
  int rho = 0;
  int sum_dim = 0;
  int int_dim = 0;
  std::optional<LinearSubspace<RationalField>> intersection;
  std::vector<std::vector<double>> intersection_numeric;
  bool containment_in_tangent = false;
  bool focal_points_singular = false;
  /// Numeric mode: false when singular values straddle a threshold.
  bool conclusive = true;
  std::string note;
  /// Numeric mode: largest |f| at the corrected points Q+-.
  double residual = 0.0;
  std::vector<double> derivative_singular_values;

  /// sum_dim = h+1+rho and int_dim = h+1-rho.
  bool bookkeeping_holds() const {
    return sum_dim == h + 1 + rho && int_dim == h + 1 - rho;
  }
};

struct FocalFeasibility {
  int n = 0;
  int h = 0;
  /// 2h + 2 <= n: a family without classical focal points is possible.
  bool feasible = false;
};

FocalFeasibility no_focal_feasible(int n, int h);

/// Exact probe along a first-order path (mode exact).
FocalProbeResult fiber_derivative(const QPoly& f, const FamilyPath& path);

/// Floating probe: kernels of the bordered Hessian at P and at the
/// Newton-corrected points P +- eps w, central difference of the fiber
/// projectors, ranks by singular-value thresholds.
FocalProbeResult fiber_derivative_numeric(const QPoly& f, const FamilyPath& path,
                                          const NumericTolerances& tol = {});

struct ProbeOptions {
  std::size_t directions = 1;
  std::uint64_t seed = 42;
  FocalMode mode = FocalMode::exact;
  double eps = 1e-5;
  NumericTolerances tol;
  /// Overrides the catalog base point.
  std::optional<Vector<RationalField>> at;
  Execution execution = Execution::parallel;
};

/// Probes `directions` random directions transverse to the fiber at the
/// entry's base point. Exact mode follows the parameterization when there
/// is one and the tangent line otherwise.
std::vector<FocalProbeResult> probe_catalog_entry(const CatalogEntry& entry,
                                                  const ProbeOptions& opts = {});

/// As above for a bare form; exact mode needs opts.at, numeric mode falls
/// back to a random point found by Newton's method.
std::vector<FocalProbeResult> probe_hypersurface(const QPoly& f, const ProbeOptions& opts = {});

/// Every nonempty intersection lies in Sing X.
bool all_focal_points_singular(const std::vector<FocalProbeResult>& probes);

/// Evaluates a rational form in floating point.
class NumericForm {
 public:
  explicit NumericForm(const QPoly& f);
  double evaluate(const std::vector<double>& x) const;
  std::vector<double> gradient(const std::vector<double>& x) const;
  /// Row-major (nvars x nvars) matrix of second partials.
  std::vector<double> hessian(const std::vector<double>& x) const;
  std::size_t nvars() const { return nvars_; }
  /// sum |coefficient| * degree, a bound for |grad f| on the unit sphere.
  double scale() const { return scale_; }

 private:
  struct Term {
    double coeff;
    std::vector<unsigned> exps;
  };
  std::vector<Term> terms_;
  std::size_t nvars_;
  double scale_ = 0.0;
};

}  // namespace parahess
