#include <gtest/gtest.h>

#include "parahess/catalog.hpp"
#include "parahess/polynomial.hpp"
#include "test_util.hpp"

using namespace parahess;
using namespace parahess::testing;

TEST(Polynomial, DifferenceOfSquares) {
  EXPECT_EQ(P("x0 + x1", 2) * P("x0 - x1", 2), P("x0^2 - x1^2", 2));
}

TEST(Polynomial, AddZeroIsIdentity) {
  auto f = P("x0^3 + x1^3 + x2^3 + x3^3", 4);
  EXPECT_EQ(f + QPoly(kQ, 4), f);
}

TEST(Polynomial, Scale) {
  auto f = P("x0^3 + x1^3 + x2^3 + x3^3", 4);
  EXPECT_EQ(f.scaled(6), P("6*x0^3 + 6*x1^3 + 6*x2^3 + 6*x3^3", 4));
  EXPECT_TRUE(f.scaled(0).is_zero());
}

TEST(Polynomial, ZeroHasNoDegree) {
  QPoly z(kQ, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.total_degree().has_value());
  EXPECT_EQ((P("x0", 3) - P("x0", 3)).term_count(), 0u);
}

TEST(Polynomial, MismatchedArityThrows) {
  EXPECT_THROW(P("x0", 2) + P("x0", 3), std::invalid_argument);
  EXPECT_THROW(P("x0", 2) * P("x0", 3), std::invalid_argument);
}

TEST(Polynomial, Differentiate) {
  EXPECT_EQ(P("x0^3", 4).differentiate(0), P("3*x0^2", 4));
  EXPECT_EQ(P("x0*x3^2", 4).differentiate(3), P("2*x0*x3", 4));
  EXPECT_TRUE(P("x1^3", 4).differentiate(0).is_zero());
  EXPECT_THROW(P("x1^3", 4).differentiate(4), std::out_of_range);
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(P("x0^3 + x1^3 + x2^3 + x3^3", 4).evaluate(qv({1, 2, -1, -2})), 0);
  EXPECT_EQ(P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).evaluate(qv({1, 0, 0, 1, 0})), 1);
  EXPECT_EQ(P("x0^2*x1 - 7*x2^3", 3).evaluate(qv({0, 0, 0})), 0);
  EXPECT_THROW(P("x0", 2).evaluate(qv({1})), std::invalid_argument);
}

TEST(Polynomial, TermOrderIsGrlexDescending) {
  auto f = P("x3 + x0*x1 + x0^2 + x1^2 + x0", 4);
  std::vector<std::string> seen;
  for (const auto& [m, c] : f.terms()) seen.push_back(print_polynomial(QPoly::constant(kQ, 4, 1).shifted(m, 1)));
  std::vector<std::string> want = {"x0^2", "x0*x1", "x1^2", "x0", "x3"};
  EXPECT_EQ(seen, want);
}

TEST(DivideOnce, ExactQuotient) {
  auto [q, r] = divide_once(P("x0^2 - x1^2", 2), P("x0 - x1", 2));
  EXPECT_EQ(q, P("x0 + x1", 2));
  EXPECT_TRUE(r.is_zero());
}

TEST(DivideOnce, MonomialNotDivisibleByFermat) {
  auto [q, r] = divide_once(P("x0*x1*x2*x3", 4), P("x0^3 + x1^3 + x2^3 + x3^3", 4));
  EXPECT_FALSE(r.is_zero());
}

TEST(DivideOnce, RepeatedFactor) {
  auto f = P("x0 - x1", 3);
  auto g = f * f * P("x2", 3);
  auto [q1, r1] = divide_once(g, f);
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = divide_once(q1, f);
  EXPECT_TRUE(r2.is_zero());
  EXPECT_EQ(q2, P("x2", 3));
}

TEST(DivideOnce, RemainderHasNoDivisibleMonomial) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_poly(rng, 3, 5, 8);
    auto f = random_poly(rng, 3, 2, 3);
    if (f.is_zero()) continue;
    auto [q, r] = divide_once(g, f);
    EXPECT_EQ(q * f + r, g);
    const auto& lm = f.leading_term().first;
    for (const auto& [m, c] : r.terms()) EXPECT_FALSE(lm.divides(m));
  }
}

TEST(DivideOnce, ByZeroThrows) {
  EXPECT_THROW(divide_once(P("x0", 2), QPoly(kQ, 2)), std::domain_error);
}

TEST(RestrictToSubspace, FermatOnCoordinateLine) {
  auto r = restrict_to_subspace(P("x0^3 + x1^3 + x2^3 + x3^3", 4), {qv({0, 0, 1, 0}), qv({0, 0, 0, 1})});
  EXPECT_EQ(r, P("x0^3 + x1^3", 2));
}

TEST(RestrictToSubspace, ConeContainsRuling) {
  auto f = P("x2^2*x3 - x1^3 + x1*x3^2", 4);
  EXPECT_TRUE(restrict_to_subspace(f, {qv({1, 0, 0, 0}), qv({0, 1, 0, 1})}).is_zero());
}

TEST(RestrictToSubspace, PointOnX) {
  auto f = P("x0^3 + x1^3 + x2^3 + x3^3", 4);
  auto r = restrict_to_subspace(f, {qv({1, 2, -1, -2})});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.nvars(), 1u);
}

TEST(RestrictToSubspace, EmptyBasisThrows) {
  EXPECT_THROW(restrict_to_subspace(P("x0", 2), {}), std::invalid_argument);
}

TEST(ReduceModP, Examples) {
  auto a = reduce_mod_p(P("6*x0", 1), 5);
  EXPECT_EQ(a, reduce_mod_p(P("x0", 1), 5));
  auto b = reduce_mod_p(P("1/2*x0", 1), 7);
  EXPECT_EQ(b.coefficient(Monomial{1}).value(), 4u);
  EXPECT_THROW(reduce_mod_p(P("1/5*x0", 1), 5), BadPrimeError);
}

// ---- properties ------------------------------------------------------------

TEST(PolynomialProperties, RingAxioms) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 3, 3, 5);
    auto b = random_poly(rng, 3, 3, 5);
    auto c = random_poly(rng, 3, 3, 5);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolynomialProperties, EulerIdentity) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned d = 1 + static_cast<unsigned>(rng.below(4));
    auto f = random_poly(rng, 4, d, 6, true);
    QPoly lhs(kQ, 4);
    for (std::size_t i = 0; i < 4; ++i) lhs += QPoly::variable(kQ, 4, i) * f.differentiate(i);
    EXPECT_EQ(lhs, f.scaled(d));
  }
}

TEST(PolynomialProperties, RestrictionZeroImpliesVanishingModP) {
  auto entry = catalog_lookup("cone-elliptic");
  const auto& f = entry.form.poly;
  std::vector<Vector<RationalField>> basis = {qv({1, 0, 0, 0}), qv({0, 1, 0, 1})};
  ASSERT_TRUE(restrict_to_subspace(f, basis).is_zero());
  const PrimeField fp(kDefaultPrime);
  auto g = reduce_mod_p(f, fp);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Zp a = fp.from_uint(rng.below(kDefaultPrime)), b = fp.from_uint(rng.below(kDefaultPrime));
    Vector<PrimeField> pt = {a, b, fp.zero(), b};
    EXPECT_TRUE(g.evaluate(pt).is_zero());
  }
}

TEST(PolynomialProperties, ReductionIsAHomomorphism) {
  Rng rng(4);
  const PrimeField fp(1000003);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, 3, 3, 5).scaled(mpq_class(1, 3));
    auto b = random_poly(rng, 3, 3, 5).scaled(mpq_class(-2, 7));
    EXPECT_EQ(reduce_mod_p(a + b, fp), reduce_mod_p(a, fp) + reduce_mod_p(b, fp));
    EXPECT_EQ(reduce_mod_p(a * b, fp), reduce_mod_p(a, fp) * reduce_mod_p(b, fp));
  }
}

TEST(PolynomialProperties, SubstitutionComposes) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly(rng, 2, 3, 4);
    std::vector<QPoly> images = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    auto g = f.substitute(images);
    auto pt = qv({static_cast<long>(rng.between(-4, 4)), static_cast<long>(rng.between(-4, 4))});
    Vector<RationalField> inner = {images[0].evaluate(pt), images[1].evaluate(pt)};
    EXPECT_EQ(g.evaluate(pt), f.evaluate(inner));
  }
}
