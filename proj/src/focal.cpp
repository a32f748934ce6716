#include "parahess/focal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>

#include "parahess/hessian.hpp"

namespace parahess {

namespace {

const RationalField kQ{};

using QVec = Vector<RationalField>;

bool is_zero_vec(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

QVec head(const QVec& v, std::size_t n) { return QVec(v.begin(), v.begin() + static_cast<long>(n)); }

/// The point must be a smooth point of X with h >= 1.
PointAnalysis<RationalField> parabolic_base(const HypersurfaceDerivatives<RationalField>& d,
                                            const QVec& p) {
  if (p.size() != d.form().nvars()) throw PointError("base point has the wrong number of coordinates");
  if (is_zero_vec(p)) throw PointError("the zero vector is not a projective point");
  auto a = analyze_point(d, p);
  if (a.status == PointStatus::not_on_hypersurface) throw PointError("base point is not on X");
  if (a.status == PointStatus::singular) throw PointError("base point is a singular point of X");
  if (*a.parabolic_h < 1) throw NotApplicableError("base point not parabolic (h = 0): nothing to probe");
  return a;
}

/// Directional derivative of each entry of m at p along v.
Matrix<RationalField> derivative_along(const QPolyMatrix& m, const QVec& p, const QVec& v) {
  Matrix<RationalField> out(kQ, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0) s += m(i, j).differentiate(k).evaluate(p) * v[k];
      out(i, j) = s;
    }
  return out;
}

QVec apply(const Matrix<RationalField>& m, const QVec& v) {
  QVec out(m.rows(), mpq_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

// ---- floating point helpers -------------------------------------------------

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<long>(v.size()));
}

std::vector<double> from_eigen(const VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> to_double(const QVec& v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(c.get_d());
  return out;
}

std::vector<double> normalized(std::vector<double> v) {
  double n = to_eigen(v).norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (auto& c : v) c /= n;
  return v;
}

MatrixXd bordered_numeric(const NumericForm& nf, const std::vector<double>& x) {
  const auto n1 = static_cast<long>(nf.nvars());
  auto h = nf.hessian(x);
  auto g = nf.gradient(x);
  MatrixXd b = MatrixXd::Zero(n1 + 1, n1 + 1);
  for (long i = 0; i < n1; ++i) {
    for (long j = 0; j < n1; ++j) b(i, j) = h[static_cast<std::size_t>(i * n1 + j)];
    b(i, n1) = g[static_cast<std::size_t>(i)];
    b(n1, i) = g[static_cast<std::size_t>(i)];
  }
  return b;
}

struct NumericKernel {
  /// Orthonormal basis of the V-parts of ker B (the fiber cone), as columns.
  MatrixXd fiber;
  std::size_t dim = 0;
  /// Some singular value lies within a factor 100 of the threshold.
  bool straddles = false;
};

NumericKernel numeric_fiber(const NumericForm& nf, const std::vector<double>& x, double rank_tol) {
  MatrixXd b = bordered_numeric(nf, x);
  Eigen::JacobiSVD<MatrixXd> svd(b, Eigen::ComputeFullV);
  const VectorXd& s = svd.singularValues();
  const double cut = rank_tol * s(0);
  NumericKernel k;
  for (long i = 0; i < s.size(); ++i) {
    if (s(i) < cut) ++k.dim;
    if (s(i) > cut / 100 && s(i) < cut * 100) k.straddles = true;
  }
  const auto n1 = static_cast<long>(nf.nvars());
  const auto kd = static_cast<long>(k.dim);
  MatrixXd vparts = svd.matrixV().rightCols(kd).topRows(n1);
  if (kd == 0) {
    k.fiber = MatrixXd(n1, 0);
    return k;
  }
  Eigen::JacobiSVD<MatrixXd> orth(vparts, Eigen::ComputeThinU);
  k.fiber = orth.matrixU().leftCols(kd);
  return k;
}

/// Newton steps on the coordinate with the largest partial derivative.
std::vector<double> newton_correct(const NumericForm& nf, std::vector<double> x, double& residual) {
  for (int it = 0; it < 10; ++it) {
    double v = nf.evaluate(x);
    if (std::abs(v) < 1e-15 * nf.scale()) break;
    auto g = nf.gradient(x);
    std::size_t k = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (std::abs(g[i]) > std::abs(g[k])) k = i;
    if (g[k] == 0.0) break;
    x[k] -= v / g[k];
  }
  residual = std::abs(nf.evaluate(x));
  return x;
}

bool numerically_singular(const NumericForm& nf, const std::vector<double>& x) {
  auto unit = normalized(x);
  return to_eigen(nf.gradient(unit)).norm() < 1e-8 * nf.scale();
}

/// Random unit direction in T_P X orthogonal to the fiber at P.
std::vector<double> transverse_numeric_direction(const NumericForm& nf, const std::vector<double>& p,
                                                 const MatrixXd& fiber, Rng& rng) {
  VectorXd g = to_eigen(nf.gradient(p)).normalized();
  for (int attempt = 0; attempt < 50; ++attempt) {
    VectorXd v(static_cast<long>(p.size()));
    for (long i = 0; i < v.size(); ++i) v(i) = rng.normal();
    v -= g.dot(v) * g;
    v -= fiber * (fiber.transpose() * v);
    if (v.norm() > 1e-3) return from_eigen(v.normalized());
  }
  throw NotApplicableError("no direction transverse to the fiber (the fiber fills T_P X)");
}

}  // namespace

const char* to_string(FocalMode m) { return m == FocalMode::exact ? "exact" : "numeric"; }

FocalFeasibility no_focal_feasible(int n, int h) {
  if (n < 2 || h < 1 || h > n - 1)
    throw std::out_of_range("no_focal_feasible needs 1 <= h <= n - 1");
  return {n, h, 2 * h + 2 <= n};
}

// ---- NumericForm ------------------------------------------------------------

NumericForm::NumericForm(const QPoly& f) : nvars_(f.nvars()) {
  for (const auto& [m, c] : f.terms()) {
    Term t{c.get_d(), std::vector<unsigned>(nvars_)};
    for (std::size_t i = 0; i < nvars_; ++i) t.exps[i] = m[i];
    scale_ += std::abs(t.coeff) * m.degree();
    terms_.push_back(std::move(t));
  }
}

double NumericForm::evaluate(const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) v *= std::pow(x[i], t.exps[i]);
    s += v;
  }
  return s;
}

std::vector<double> NumericForm::gradient(const std::vector<double>& x) const {
  std::vector<double> g(nvars_, 0.0);
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exps[k] == 0) continue;
      double v = t.coeff * t.exps[k];
      for (std::size_t i = 0; i < nvars_; ++i)
        v *= std::pow(x[i], i == k ? t.exps[i] - 1 : t.exps[i]);
      g[k] += v;
    }
  return g;
}

std::vector<double> NumericForm::hessian(const std::vector<double>& x) const {
  std::vector<double> h(nvars_ * nvars_, 0.0);
  for (const auto& t : terms_)
    for (std::size_t a = 0; a < nvars_; ++a)
      for (std::size_t b = a; b < nvars_; ++b) {
        auto e = t.exps;
        if (e[a] == 0) continue;
        double v = t.coeff * e[a];
        --e[a];
        if (e[b] == 0) continue;
        v *= e[b];
        --e[b];
        for (std::size_t i = 0; i < nvars_; ++i) v *= std::pow(x[i], e[i]);
        h[a * nvars_ + b] += v;
        if (a != b) h[b * nvars_ + a] += v;
      }
  return h;
}

// ---- exact probe ------------------------------------------------------------

FocalProbeResult fiber_derivative(const QPoly& f, const FamilyPath& path) {
  if (path.mode != FocalMode::exact) throw std::invalid_argument("fiber_derivative needs an exact path");
  const std::size_t nv = f.nvars();
  const HypersurfaceDerivatives<RationalField> d(f);
  const auto a = parabolic_base(d, path.base);
  if (path.velocity.size() != nv) throw std::invalid_argument("velocity has the wrong number of coordinates");
  const QVec g = d.gradient_at(path.base);
  if (sgn(dot(g, path.velocity, kQ)) != 0)
    throw std::invalid_argument("path velocity is not tangent to X at the base point");
  if (a.fiber->contains(path.velocity))
    throw NotApplicableError("direction lies in the fiber: it probes nothing");

  FocalProbeResult r;
  r.mode = FocalMode::exact;
  r.path_source = path.source;
  r.base = path.base;
  r.velocity = path.velocity;
  r.h = *a.parabolic_h;

  // Kernel of B(P(t)) = A0 + t A1 + O(t^2): k_j + t x_j with A0 x_j = -A1 k_j.
  const QPolyMatrix b = bordered_hessian(f);
  const auto a0 = b.evaluate(path.base);
  const auto a1 = derivative_along(b, path.base, path.velocity);
  const auto ker = rank_kernel(a0).kernel;
  if (ker.dim() != static_cast<std::size_t>(r.h + 1))
    throw std::logic_error("bordered Hessian kernel disagrees with the fiber dimension");
  std::vector<QVec> s, y;
  for (const auto& k : ker.basis()) {
    QVec rhs = apply(a1, k);
    for (auto& c : rhs) c = -c;
    auto x = solve(a0, rhs);
    if (!x) throw NotApplicableError("base point is not general along this direction (fiber rank jumps)");
    s.push_back(head(k, nv));
    y.push_back(head(*x, nv));
  }
  auto with = s;
  with.insert(with.end(), y.begin(), y.end());
  const auto sum = LinearSubspace<RationalField>::span(kQ, nv, with);
  r.sum_dim = static_cast<int>(sum.dim());
  r.rho = r.sum_dim - (r.h + 1);

  // Points sum c_j s_j whose derivative sum c_j y_j falls back into S_y.
  const std::size_t m = s.size();
  Matrix<RationalField> sys(kQ, nv, 2 * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < nv; ++i) {
      sys(i, j) = y[j][i];
      sys(i, m + j) = -s[j][i];
    }
  std::vector<QVec> focal;
  const auto relations = rank_kernel(sys).kernel;
  for (const auto& kv : relations.basis()) {
    QVec v(nv, mpq_class(0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < nv; ++i) v[i] += kv[j] * s[j][i];
    focal.push_back(std::move(v));
  }
  r.intersection = LinearSubspace<RationalField>::span(kQ, nv, focal);
  r.int_dim = static_cast<int>(r.intersection->dim());

  r.containment_in_tangent = std::all_of(sum.basis().begin(), sum.basis().end(),
                                         [&](const QVec& v) { return sgn(dot(g, v, kQ)) == 0; });

  // Gradient vanishing on the basis and on a few fixed combinations.
  std::vector<QVec> probes = r.intersection->basis();
  if (probes.size() > 1) {
    Rng rng(Rng::mix(nv * 7919 + probes.size()));
    for (int t = 0; t < 3; ++t) {
      QVec v(nv, mpq_class(0));
      for (const auto& bv : r.intersection->basis()) {
        auto c = random_nonzero(kQ, rng);
        for (std::size_t i = 0; i < nv; ++i) v[i] += c * bv[i];
      }
      if (!is_zero_vec(v)) probes.push_back(std::move(v));
    }
  }
  r.focal_points_singular = std::all_of(probes.begin(), probes.end(),
                                        [&](const QVec& v) { return is_zero_vec(d.gradient_at(v)); });
  if (r.int_dim == 0) r.note = "no classical focal point in this direction";
  return r;
}

// ---- numeric probe ----------------------------------------------------------

FocalProbeResult fiber_derivative_numeric(const QPoly& f, const FamilyPath& path,
                                          const NumericTolerances& tol) {
  if (path.mode != FocalMode::numeric) throw std::invalid_argument("numeric probe needs a numeric path");
  if (!(path.eps > 0)) throw std::invalid_argument("eps must be positive");
  const NumericForm nf(f);
  const std::size_t nv = f.nvars();
  if (path.base_numeric.size() != nv || path.direction_numeric.size() != nv)
    throw std::invalid_argument("numeric path has the wrong number of coordinates");
  const auto p = normalized(path.base_numeric);
  if (std::abs(nf.evaluate(p)) > 1e-10 * nf.scale()) throw PointError("base point is not on X");
  if (numerically_singular(nf, p)) throw PointError("base point is a singular point of X");

  FocalProbeResult r;
  r.mode = FocalMode::numeric;
  r.path_source = path.source;
  r.base_numeric = p;
  r.direction_numeric = path.direction_numeric;

  const auto k0 = numeric_fiber(nf, p, tol.rank_tol);
  r.h = static_cast<int>(k0.dim) - 1;
  if (r.h < 1) throw NotApplicableError("base point not parabolic (h = 0): nothing to probe");

  std::vector<double> qp(nv), qm(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    qp[i] = p[i] + path.eps * path.direction_numeric[i];
    qm[i] = p[i] - path.eps * path.direction_numeric[i];
  }
  double res_p = 0, res_m = 0;
  qp = newton_correct(nf, qp, res_p);
  qm = newton_correct(nf, qm, res_m);
  r.residual = std::max(res_p, res_m);
  const auto kp = numeric_fiber(nf, qp, tol.rank_tol);
  const auto km = numeric_fiber(nf, qm, tol.rank_tol);

  auto inconclusive = [&](std::string why) {
    r.conclusive = false;
    r.note = std::move(why) + "; try a smaller eps or exact mode";
    return r;
  };
  if (r.residual > 1e-12) return inconclusive("Newton correction did not reach |f| < 1e-12");
  if (k0.straddles || kp.straddles || km.straddles)
    return inconclusive("bordered Hessian singular values straddle the rank threshold");
  if (kp.dim != k0.dim || km.dim != k0.dim)
    return inconclusive("fiber dimension changes between P and P +- eps w");

  const auto n1 = static_cast<long>(nv);
  const MatrixXd& u0 = k0.fiber;
  const MatrixXd proj0 = MatrixXd::Identity(n1, n1) - u0 * u0.transpose();
  const MatrixXd dp = kp.fiber * kp.fiber.transpose() - km.fiber * km.fiber.transpose();
  const MatrixXd deriv = proj0 * dp * u0 / (2 * path.eps);
  Eigen::JacobiSVD<MatrixXd> svd(deriv, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  r.derivative_singular_values = from_eigen(sv);
  bool straddle = false;
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol.deriv_tol) ++r.rho;
    if (sv(i) >= tol.deriv_tol / 100 && sv(i) <= tol.deriv_tol * 100) straddle = true;
  }
  const long rho = r.rho;
  const long m = u0.cols();
  r.sum_dim = static_cast<int>(m + rho);
  r.int_dim = static_cast<int>(m - rho);
  if (straddle) return inconclusive("derivative singular values straddle the rank threshold");

  MatrixXd sum(n1, m + rho);
  sum << u0, svd.matrixU().leftCols(rho);
  const VectorXd g = to_eigen(nf.gradient(p));
  r.containment_in_tangent = true;
  for (long j = 0; j < sum.cols(); ++j)
    if (std::abs(g.dot(sum.col(j))) >= 1e-8 * g.norm() * sum.col(j).norm()) r.containment_in_tangent = false;

  const MatrixXd focal = u0 * svd.matrixV().rightCols(m - rho);
  r.focal_points_singular = true;
  for (long j = 0; j < focal.cols(); ++j) {
    auto v = from_eigen(focal.col(j));
    r.intersection_numeric.push_back(v);
    if (!numerically_singular(nf, v)) r.focal_points_singular = false;
  }
  if (r.int_dim == 0) r.note = "no classical focal point in this direction";
  return r;
}

// ---- probe drivers ----------------------------------------------------------

namespace {

struct ProbeSetup {
  const QPoly* f = nullptr;
  std::optional<QVec> base;
  const Parameterization* param = nullptr;
  std::vector<mpq_class> base_parameters;
};

FamilyPath exact_path(const ProbeSetup& s, const HypersurfaceDerivatives<RationalField>& d,
                      const LinearSubspace<RationalField>& fiber, Rng& rng) {
  const QPoly& f = *s.f;
  const std::size_t nv = f.nvars();
  FamilyPath path;
  path.mode = FocalMode::exact;
  path.base = *s.base;
  for (int attempt = 0; attempt < 64; ++attempt) {
    QVec vel(nv, mpq_class(0));
    if (s.param) {
      path.source = "parameterization";
      const auto& coords = s.param->coordinates;
      const std::size_t k = s.base_parameters.size();
      std::vector<mpq_class> c(k);
      for (auto& ci : c) ci = static_cast<long>(rng.between(-3, 3));
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (sgn(c[j]) != 0) vel[i] += coords[i].differentiate(j).evaluate(s.base_parameters) * c[j];
    } else {
      path.source = "tangent_line";
      Matrix<RationalField> grow(kQ, 1, nv);
      auto g = d.gradient_at(*s.base);
      for (std::size_t j = 0; j < nv; ++j) grow(0, j) = g[j];
      const auto tangent = rank_kernel(grow).kernel;
      for (const auto& w : tangent.basis()) {
        mpq_class c = static_cast<long>(rng.between(-3, 3));
        for (std::size_t i = 0; i < nv; ++i) vel[i] += c * w[i];
      }
    }
    if (is_zero_vec(vel) || fiber.contains(vel)) continue;
    path.velocity = std::move(vel);
    return path;
  }
  throw NotApplicableError("no direction transverse to the fiber was found");
}

std::vector<double> random_numeric_point(const NumericForm& nf, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> x(nf.nvars());
    for (auto& c : x) c = rng.normal();
    double res = 0;
    x = newton_correct(nf, normalized(x), res);
    if (res < 1e-13 && !numerically_singular(nf, x)) return normalized(x);
  }
  throw SamplingExhaustedError("could not find a smooth floating point of X by Newton's method");
}

std::vector<FocalProbeResult> run_probes(const ProbeSetup& s, const ProbeOptions& opts) {
  if (opts.directions == 0) throw std::invalid_argument("at least one direction is required");
  const QPoly& f = *s.f;
  std::vector<FocalProbeResult> out(opts.directions);
  std::vector<std::exception_ptr> errors(opts.directions);
  const long count = static_cast<long>(opts.directions);

  if (opts.mode == FocalMode::exact) {
    if (!s.base) throw NotApplicableError("exact mode needs a rational base point (use --at)");
    const HypersurfaceDerivatives<RationalField> d(f);
    const auto a = parabolic_base(d, *s.base);
#pragma omp parallel for schedule(dynamic) if (opts.execution == Execution::parallel)
    for (long i = 0; i < count; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      try {
        Rng rng = Rng::for_index(opts.seed, ui);
        out[ui] = fiber_derivative(f, exact_path(s, d, *a.fiber, rng));
        out[ui].direction_index = ui;
      } catch (...) {
        errors[ui] = std::current_exception();
      }
    }
  } else {
    const NumericForm nf(f);
    std::vector<double> base;
    if (s.base) {
      base = normalized(to_double(*s.base));
    } else {
      Rng rng = Rng::for_index(opts.seed, 0xba5e);
      base = random_numeric_point(nf, rng);
    }
    if (std::abs(nf.evaluate(base)) > 1e-10 * nf.scale()) throw PointError("base point is not on X");
    if (numerically_singular(nf, base)) throw PointError("base point is a singular point of X");
    const auto k0 = numeric_fiber(nf, base, opts.tol.rank_tol);
    if (k0.dim < 2) throw NotApplicableError("base point not parabolic (h = 0): nothing to probe");
#pragma omp parallel for schedule(dynamic) if (opts.execution == Execution::parallel)
    for (long i = 0; i < count; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      try {
        Rng rng = Rng::for_index(opts.seed, ui);
        FamilyPath path;
        path.mode = FocalMode::numeric;
        path.source = "numeric";
        path.base_numeric = base;
        path.direction_numeric = transverse_numeric_direction(nf, base, k0.fiber, rng);
        path.eps = opts.eps;
        out[ui] = fiber_derivative_numeric(f, path, opts.tol);
        out[ui].direction_index = ui;
      } catch (...) {
        errors[ui] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

std::vector<FocalProbeResult> probe_catalog_entry(const CatalogEntry& entry, const ProbeOptions& opts) {
  ProbeSetup s;
  s.f = &entry.form.poly;
  if (opts.at) {
    s.base = opts.at;
  } else {
    s.base = entry.base_point;
    if (entry.form.parameterization && !entry.base_parameters.empty()) {
      const auto& param = *entry.form.parameterization;
      if (!entry.form.poly.substitute(param.coordinates).is_zero())
        throw std::logic_error("catalog parameterization does not lie on X");
      s.param = &param;
      s.base_parameters = entry.base_parameters;
    }
  }
  return run_probes(s, opts);
}

std::vector<FocalProbeResult> probe_hypersurface(const QPoly& f, const ProbeOptions& opts) {
  ProbeSetup s;
  s.f = &f;
  s.base = opts.at;
  return run_probes(s, opts);
}

bool all_focal_points_singular(const std::vector<FocalProbeResult>& probes) {
  return std::all_of(probes.begin(), probes.end(),
                     [](const FocalProbeResult& p) { return p.focal_points_singular; });
}

}  // namespace parahess
