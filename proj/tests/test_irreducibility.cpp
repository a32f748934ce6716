#include <gtest/gtest.h>

#include <algorithm>

#include "parahess/catalog.hpp"
#include "parahess/irreducibility.hpp"
#include "parahess/univariate.hpp"
#include "test_util.hpp"

using namespace parahess;
using namespace parahess::testing;

namespace {

UniPolyModP uni(const std::string& text, std::uint64_t p) {
  const PrimeField fp(p);
  auto g = reduce_mod_p(P(text, 1), fp);
  std::vector<Zp> c;
  for (const auto& [m, v] : g.terms()) {
    if (c.size() <= m[0]) c.resize(m[0] + 1, fp.zero());
    c[m[0]] = v;
  }
  return UniPolyModP(fp, c);
}

}  // namespace

TEST(FactorDegrees, Examples) {
  // x^2 + 1 is irreducible mod 7 (7 = 3 mod 4), x - 2 is linear.
  EXPECT_EQ(factor_degrees(uni("(x0^2 + 1)*(x0 - 2)", 7)), (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(factor_degrees(uni("x0^2 + 1", 5)), (std::vector<unsigned>{1, 1}));
  // x^3 - 2 over F_7: 2 is not a cube mod 7.
  EXPECT_EQ(factor_degrees(uni("x0^3 - 2", 7)), (std::vector<unsigned>{3}));
  EXPECT_EQ(factor_degrees(uni("(x0^2 + 1)*(x0^3 - 2)", 7)), (std::vector<unsigned>{2, 3}));
}

TEST(FactorDegrees, SquarefreeCheck) {
  EXPECT_TRUE(is_squarefree(uni("x0^2 - 1", 7)));
  EXPECT_FALSE(is_squarefree(uni("(x0 - 1)^2*(x0 + 3)", 7)));
  EXPECT_THROW(factor_degrees(uni("(x0 - 1)^2", 7)), std::invalid_argument);
}

TEST(FactorDegrees, DegreesSumToDegree) {
  Rng rng(50);
  const std::uint64_t p = 1000003;
  for (int trial = 0; trial < 30; ++trial) {
    auto g = uni(print_polynomial(random_poly(rng, 1, 7, 6)), p);
    if (g.degree() < 1 || !is_squarefree(g)) continue;
    const auto degrees = factor_degrees(g);
    unsigned sum = 0;
    for (unsigned k : degrees) sum += k;
    EXPECT_EQ(sum, static_cast<unsigned>(g.degree()));
    const auto linear = static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 1u));
    EXPECT_EQ(linear, roots_mod_p(g, rng).size());
  }
}

TEST(IrreducibilitySmokeTest, CatalogIsIrreducible) {
  for (const auto& name : catalog_names()) {
    auto r = irreducibility_smoke_test(catalog_lookup(name).form.poly, 42);
    EXPECT_TRUE(r.probably_irreducible()) << name;
    EXPECT_GT(r.lines, 0u);
  }
}

TEST(IrreducibilitySmokeTest, DetectsFactors) {
  auto r = irreducibility_smoke_test(P("(x0^3 + x1^3 + x2^3 + x3^3)*(x0 - x2 + 5*x3)", 4), 42);
  EXPECT_FALSE(r.probably_irreducible());
  EXPECT_EQ(r.surviving_degrees, (std::vector<unsigned>{1}));

  auto q = irreducibility_smoke_test(P("(x0^2 + x1*x2 - x3^2)*(x1^2 - x0*x3 + 2*x2^2)", 4), 42);
  EXPECT_EQ(q.surviving_degrees, (std::vector<unsigned>{2}));

  auto sq = irreducibility_smoke_test(P("(x0 - x1)^2*x2", 3), 42);
  EXPECT_TRUE(sq.repeated_factor);
  EXPECT_FALSE(sq.probably_irreducible());
}
