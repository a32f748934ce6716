#include "parahess/hessian.hpp"

#include <stdexcept>

namespace parahess {

const char* to_string(HessianStatus s) {
  return s == HessianStatus::identically_zero ? "identically_zero" : "nonzero";
}

HessianResult hessian_polynomial(const QPoly& f, const DeterminantOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("Hessian of the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("Hessian analysis needs a homogeneous form");
  const unsigned d = *f.total_degree();
  if (d < 2) throw std::invalid_argument("Hessian analysis needs degree >= 2");
  HessianResult r{.matrix = hessian_matrix(f), .hpoly = QPoly(f.field(), f.nvars()), .degree = {}, .algorithm = {}};
  auto det = det_poly(r.matrix, opts);
  r.hpoly = std::move(det.value);
  r.probably_zero = det.probably_zero;
  r.algorithm = det.algorithm;
  r.expected_degree = static_cast<unsigned>(f.nvars()) * (d - 2);
  if (r.hpoly.is_zero()) {
    r.status = HessianStatus::identically_zero;
  } else {
    r.status = HessianStatus::nonzero;
    r.degree = r.hpoly.total_degree();
    r.degree_law_holds = r.hpoly.is_homogeneous() && *r.degree == r.expected_degree;
  }
  return r;
}

DivisibilityCertificate divisibility_order(const QPoly& f, const QPoly& g) {
  if (f.is_zero()) throw std::domain_error("divisibility by the zero polynomial");
  DivisibilityCertificate c;
  if (g.is_zero()) {
    c.indeterminate = true;
    c.verified = true;
    return c;
  }
  if (f.total_degree() == 0u) throw std::invalid_argument("divisibility by a constant is unbounded");
  QPoly current = g;
  for (;;) {
    auto [q, r] = divide_once(current, f);
    if (!r.is_zero()) break;
    ++c.order;
    current = std::move(q);
  }
  c.cofactor = current;
  c.verified = (f.pow(c.order) * current) == g;
  return c;
}

}  // namespace parahess
