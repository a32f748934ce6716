#include <gtest/gtest.h>

#include "parahess/catalog.hpp"
#include "parahess/hessian.hpp"
#include "test_util.hpp"

using namespace parahess;
using namespace parahess::testing;

TEST(Catalog, ParameterizationsLieOnTheForm) {
  for (const auto& name : catalog_names()) {
    auto e = catalog_lookup(name);
    if (!e.form.parameterization) continue;
    EXPECT_TRUE(e.form.poly.substitute(e.form.parameterization->coordinates).is_zero()) << name;
  }
}

TEST(Catalog, BasePointsLieOnTheFormAndAreSmooth) {
  for (const auto& name : catalog_names()) {
    auto e = catalog_lookup(name);
    if (!e.base_point) continue;
    const auto& f = e.form.poly;
    EXPECT_EQ(f.evaluate(*e.base_point), 0) << name;
    bool smooth = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) smooth |= f.differentiate(i).evaluate(*e.base_point) != 0;
    EXPECT_TRUE(smooth) << name;
    if (e.form.parameterization && !e.base_parameters.empty()) {
      Vector<RationalField> img;
      for (const auto& c : e.form.parameterization->coordinates) img.push_back(c.evaluate(e.base_parameters));
      EXPECT_EQ(img, *e.base_point) << name;
    }
  }
}

TEST(Catalog, ConeOverFermatCubic) {
  FamilyParams p;
  p.base_form = P("x0^3 + x1^3 + x2^3", 3);
  p.extra_vars = 1;
  auto e = catalog_generate(Family::cone, p);
  EXPECT_EQ(e.form.poly, P("x1^3 + x2^3 + x3^3", 4));
  EXPECT_EQ(e.form.n, 3u);
  EXPECT_EQ(e.expected_h, 1);
  EXPECT_EQ(e.expected_hessian, HessianExpectation::identically_zero);
  EXPECT_EQ(hessian_polynomial(e.form.poly).status, HessianStatus::identically_zero);
}

TEST(Catalog, WiderVertex) {
  FamilyParams p;
  p.base_form = P("x0^3 + x1^3 + x2^3", 3);
  p.extra_vars = 2;
  auto e = catalog_generate(Family::cone, p);
  EXPECT_EQ(e.form.n, 4u);
  EXPECT_EQ(e.expected_h, 2);
}

TEST(Catalog, FermatLookup) {
  auto e = catalog_lookup("fermat-4-5");
  EXPECT_EQ(e.form.n, 4u);
  EXPECT_EQ(e.form.degree, 5u);
  EXPECT_EQ(e.expected_h, 0);
  EXPECT_EQ(catalog_lookup("fermat3").form.poly, catalog_lookup("fermat-3-3").form.poly);
}

TEST(Catalog, UnknownNamesThrow) {
  for (const char* bad : {"nope", "fermat-", "fermat-3", "fermat-x-3", "fermat-1-3", "fermat-3-99", ""})
    EXPECT_THROW(catalog_lookup(bad), CatalogError) << bad;
  FamilyParams p;
  p.curve_degree = 4;
  EXPECT_THROW(catalog_generate(Family::tangent_developable, p), CatalogError);
  EXPECT_THROW(catalog_generate(Family::cone, FamilyParams{}), CatalogError);
}

TEST(Catalog, DevelopableIsSingularAlongTheTwistedCubic) {
  auto f = catalog_lookup("developable3").form.poly;
  for (long t = -3; t <= 3; ++t) {
    auto pt = qv({1, t, t * t, t * t * t});
    EXPECT_EQ(f.evaluate(pt), 0);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f.differentiate(i).evaluate(pt), 0) << "t=" << t;
  }
}

TEST(Catalog, ExpectationsAreConsistent) {
  for (const auto& name : catalog_names()) {
    auto e = catalog_lookup(name);
    auto h = hessian_polynomial(e.form.poly);
    if (e.expected_hessian == HessianExpectation::identically_zero)
      EXPECT_EQ(h.status, HessianStatus::identically_zero) << name;
    else
      EXPECT_EQ(h.status, HessianStatus::nonzero) << name;
  }
}
