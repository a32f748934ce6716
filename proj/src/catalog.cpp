#include "parahess/catalog.hpp"

#include <charconv>

namespace parahess {

std::string to_string(HessianExpectation e) {
  switch (e) {
    case HessianExpectation::identically_zero: return "identically_zero";
    case HessianExpectation::divisible: return "divisible";
    case HessianExpectation::generic: return "generic";
  }
  return "unknown";
}

namespace {

const RationalField kQ{};

/// Re-embeds p into a ring with `nvars` variables, variable i -> i + offset.
QPoly lift(const QPoly& p, std::size_t nvars, std::size_t offset) {
  QPoly r(kQ, nvars);
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e(nvars, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[i + offset] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Vector<RationalField> ints(std::initializer_list<long> v) {
  Vector<RationalField> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Vector<RationalField> evaluate_parameterization(const Parameterization& param,
                                                const std::vector<mpq_class>& at) {
  Vector<RationalField> out;
  for (const auto& c : param.coordinates) out.push_back(c.evaluate(at));
  return out;
}

CatalogEntry fermat(std::size_t n, unsigned d) {
  if (n < 2) throw CatalogError("fermat: need n >= 2");
  if (d < 2) throw CatalogError("fermat: need d >= 2");
  QPoly f(kQ, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<unsigned> e(n + 1, 0);
    e[i] = d;
    f.add_term(Monomial(std::move(e)), kQ.one());
  }
  CatalogEntry e;
  e.name = "fermat-" + std::to_string(n) + "-" + std::to_string(d);
  e.description = "Fermat hypersurface x0^d + ... + xn^d";
  e.form = make_form(f);
  e.expected_h = 0;
  e.expected_hessian = HessianExpectation::generic;
  e.singular_locus = "empty (smooth)";
  return e;
}

CatalogEntry cone(const FamilyParams& params) {
  if (!params.base_form) throw CatalogError("cone: a base form is required");
  if (params.extra_vars == 0) throw CatalogError("cone: need at least one vertex coordinate");
  const QPoly& g = *params.base_form;
  const std::size_t k = params.extra_vars;
  const std::size_t nv = g.nvars() + k;
  if (!g.is_homogeneous() || g.is_zero()) throw CatalogError("cone: base form must be a nonzero form");
  CatalogEntry e;
  e.name = "cone";
  e.description = "cone over a form in " + std::to_string(g.nvars()) + " variables with a " +
                  std::to_string(k - 1) + "-dimensional vertex";
  e.form = make_form(lift(g, nv, k));
  e.expected_hessian = HessianExpectation::identically_zero;
  if (g.nvars() == 3) e.expected_h = static_cast<int>(k);
  e.singular_locus = "contains the vertex span{e0..e" + std::to_string(k - 1) + "}";
  if (params.base_parameterization) {
    const auto& bp = *params.base_parameterization;
    if (bp.coordinates.size() != g.nvars())
      throw CatalogError("cone: base parameterization has the wrong number of coordinates");
    std::size_t m = bp.coordinates.empty() ? 0 : bp.coordinates.front().nvars();
    Parameterization p;
    for (std::size_t i = 0; i < k; ++i)
      p.parameter_names.push_back(k == 1 ? "s" : "s" + std::to_string(i + 1));
    for (const auto& nm : bp.parameter_names) p.parameter_names.push_back(nm);
    for (std::size_t i = 0; i < k; ++i) p.coordinates.push_back(QPoly::variable(kQ, k + m, i));
    for (const auto& c : bp.coordinates) p.coordinates.push_back(lift(c, k + m, k));
    e.form.parameterization = std::move(p);
  }
  return e;
}

CatalogEntry tangent_developable(unsigned degree) {
  if (degree != 3) throw CatalogError("tangent-developable: only the twisted cubic is supported");
  CatalogEntry e;
  e.name = "developable3";
  e.description =
      "tangent developable of the twisted cubic (1, t, t^2, t^3): the discriminant quartic";
  e.form = make_form(
      parse_polynomial("3*x1^2*x2^2 - 4*x0*x2^3 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x0^2*x3^2", 4));
  // Points (1, t, t^2, t^3) + s * (0, 1, 2t, 3t^2); parameters (s, t).
  Parameterization p;
  p.parameter_names = {"s", "t"};
  auto param = [](std::string_view text) {
    // Parsed in the parameter ring with x0 = s, x1 = t.
    return parse_polynomial(text, 2);
  };
  p.coordinates = {param("1"), param("x1 + x0"), param("x1^2 + 2*x0*x1"),
                   param("x1^3 + 3*x0*x1^2")};
  e.form.parameterization = std::move(p);
  e.expected_h = 1;
  e.expected_hessian = HessianExpectation::divisible;
  e.singular_locus = "the twisted cubic (1 : t : t^2 : t^3) (cuspidal edge)";
  e.base_parameters = {mpq_class(1), mpq_class(1)};
  e.base_point = evaluate_parameterization(*e.form.parameterization, e.base_parameters);
  return e;
}

CatalogEntry perazzo() {
  CatalogEntry e;
  e.name = "perazzo";
  e.description = "Perazzo cubic x0*x3^2 + x1*x3*x4 + x2*x4^2, vanishing Hessian, not a cone";
  e.form = make_form(parse_polynomial("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5));
  e.expected_h = 1;
  e.expected_hessian = HessianExpectation::identically_zero;
  e.singular_locus = "the plane x3 = x4 = 0";
  e.base_point = ints({1, -1, 0, 1, 1});
  return e;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw CatalogError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

CatalogEntry catalog_generate(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::cone: return cone(params);
    case Family::tangent_developable: return tangent_developable(params.curve_degree);
    case Family::perazzo: return perazzo();
    case Family::fermat: return fermat(params.n, params.d);
  }
  throw CatalogError("unknown family");
}

std::vector<std::string> catalog_names() {
  return {"fermat3", "cone-fermat", "cone-elliptic", "cone-cuspidal", "perazzo", "developable3"};
}

CatalogEntry catalog_lookup(std::string_view name) {
  if (name == "fermat3") {
    CatalogEntry e = fermat(3, 3);
    e.name = "fermat3";
    e.base_point = ints({1, 2, -1, -2});
    return e;
  }
  if (name == "cone-fermat") {
    FamilyParams p;
    p.base_form = parse_polynomial("x0^3 + x1^3 + x2^3", 3);
    CatalogEntry e = cone(p);
    e.name = "cone-fermat";
    e.description = "cone over the plane Fermat cubic; its rational points are all flexes";
    e.singular_locus = "the vertex (1 : 0 : 0 : 0)";
    return e;
  }
  if (name == "cone-elliptic") {
    FamilyParams p;
    p.base_form = parse_polynomial("x1^2*x2 - x0^3 + x0*x2^2", 3);
    CatalogEntry e = cone(p);
    e.name = "cone-elliptic";
    e.description = "cone over the elliptic curve y^2 z = x^3 - x z^2";
    e.singular_locus = "the vertex (1 : 0 : 0 : 0)";
    e.base_point = ints({0, 1, 0, 1});
    return e;
  }
  if (name == "cone-cuspidal") {
    FamilyParams p;
    p.base_form = parse_polynomial("x1^2*x2 - x0^3", 3);
    Parameterization base;
    base.parameter_names = {"t"};
    base.coordinates = {parse_polynomial("x0^2", 1), parse_polynomial("x0^3", 1),
                        parse_polynomial("1", 1)};
    p.base_parameterization = std::move(base);
    CatalogEntry e = cone(p);
    e.name = "cone-cuspidal";
    e.description = "cone over the cuspidal cubic y^2 z = x^3, rationally parameterized";
    e.singular_locus = "the line x1 = x2 = 0 (vertex joined to the cusp)";
    e.base_parameters = {mpq_class(0), mpq_class(1)};
    e.base_point = evaluate_parameterization(*e.form.parameterization, e.base_parameters);
    return e;
  }
  if (name == "perazzo") return perazzo();
  if (name == "developable3") return tangent_developable(3);
  if (name.starts_with("fermat-")) {
    std::string_view rest = name.substr(7);
    auto dash = rest.find('-');
    if (dash == std::string_view::npos) throw CatalogError("expected fermat-<n>-<d>");
    FamilyParams p;
    p.n = parse_size(rest.substr(0, dash), "dimension");
    p.d = static_cast<unsigned>(parse_size(rest.substr(dash + 1), "degree"));
    if (p.n > 20 || p.d > 20) throw CatalogError("fermat parameters out of range");
    return fermat(p.n, p.d);
  }
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace parahess
