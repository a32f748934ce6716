#include <gtest/gtest.h>

#include "parahess/hessian.hpp"
#include "parahess/linalg.hpp"
#include "parahess/poly_matrix.hpp"
#include "test_util.hpp"

using namespace parahess;
using namespace parahess::testing;

namespace {

Matrix<RationalField> M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector<RationalField>> r;
  for (auto row : rows) {
    Vector<RationalField> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return Matrix<RationalField>::from_rows(kQ, r);
}

Matrix<RationalField> diag(std::initializer_list<long> d) {
  Matrix<RationalField> m(kQ, d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) m(i, i) = x, ++i;
  return m;
}

const auto kConeHessianAtP = M({{0, 0, 0, 0}, {0, -6, 0, 2}, {0, 0, 2, 0}, {0, 2, 0, 2}});

using Subspace = LinearSubspace<RationalField>;

}  // namespace

TEST(DetScalar, Examples) {
  EXPECT_EQ(det_scalar(Matrix<RationalField>::identity(kQ, 4)), 1);
  EXPECT_EQ(det_scalar(diag({6, 12, -6, -12})), 5184);
  EXPECT_EQ(det_scalar(kConeHessianAtP), 0);
  EXPECT_EQ(det_scalar(M({{0, 1}, {1, 0}})), -1);
  EXPECT_THROW(det_scalar(Matrix<RationalField>(kQ, 2, 3)), std::invalid_argument);
}

TEST(DetScalar, MatchesModularReduction) {
  Rng rng(7);
  const PrimeField fp(kDefaultPrime);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    Matrix<RationalField> m(kQ, n, n);
    Matrix<PrimeField> mp(fp, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = mpq_class(static_cast<long>(rng.between(-9, 9)), static_cast<unsigned long>(1 + rng.below(4)));
        mp(i, j) = fp.from_rational(m(i, j));
      }
    EXPECT_EQ(fp.from_rational(det_scalar(m)), det_scalar(mp));
  }
}

TEST(RankKernel, Examples) {
  auto zero = rank_kernel(Matrix<RationalField>(kQ, 3, 3));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.kernel, Subspace::whole(kQ, 3));

  auto d = rank_kernel(diag({6, -6, 0, 0}));
  EXPECT_EQ(d.rank, 2u);
  EXPECT_EQ(d.kernel, Subspace::span(kQ, 4, {qv({0, 0, 1, 0}), qv({0, 0, 0, 1})}));

  EXPECT_EQ(rank(kConeHessianAtP), 3u);  // sympy oracle
}

TEST(RankKernel, KernelVectorsAreAnnihilated) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6);
    Matrix<RationalField> m(kQ, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.below(3) ? 0 : static_cast<long>(rng.between(-3, 3));
    auto rk = rank_kernel(m);
    EXPECT_EQ(rk.rank + rk.kernel.dim(), c);
    for (const auto& v : rk.kernel.basis())
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(dot(m.row(i), v, kQ), 0);
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  auto m = M({{1, 2}, {2, 4}});
  auto x = solve(m, qv({3, 6}));
  ASSERT_TRUE(x);
  EXPECT_EQ(dot(m.row(0), *x, kQ), 3);
  EXPECT_FALSE(solve(m, qv({3, 7})));
}

TEST(RestrictBilinear, Examples) {
  auto g = restrict_bilinear(diag({6, -6, 0, 0}), Subspace::span(kQ, 4, {qv({1, 1, 0, 0})}));
  ASSERT_EQ(g.rows(), 1u);
  EXPECT_EQ(g(0, 0), 0);

  auto w = Subspace::span(kQ, 4, {qv({1, 0, 0, 0}), qv({0, 1, 0, 1}), qv({0, 0, 1, 0})});
  EXPECT_EQ(rank(restrict_bilinear(kConeHessianAtP, w)), 1u);

  auto empty = restrict_bilinear(kConeHessianAtP, Subspace(kQ, 4));
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(rank(empty), 0u);

  EXPECT_THROW(restrict_bilinear(kConeHessianAtP, Subspace::whole(kQ, 3)), std::invalid_argument);
}

TEST(Radical, Examples) {
  EXPECT_TRUE(radical_of_restriction(Matrix<RationalField>::identity(kQ, 4), Subspace::whole(kQ, 4)).is_zero());

  auto w = rank_kernel(M({{1, 1, 0, 0}})).kernel;
  EXPECT_EQ(radical_of_restriction(diag({6, -6, 0, 0}), w), w);

  // Euler: P is in the radical of H(f)(P) on ker grad f(P).
  auto f = P("x0^3 + x1^3 + x2^3 + x3^3", 4);
  auto p = qv({1, 2, -1, -2});
  auto h = hessian_matrix(f).evaluate(p);
  Matrix<RationalField> grad(kQ, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) grad(0, i) = f.differentiate(i).evaluate(p);
  auto rad = radical_of_restriction(h, rank_kernel(grad).kernel);
  EXPECT_TRUE(rad.contains(p));
}

TEST(Radical, RankPlusRadicalIsDimension) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    Matrix<RationalField> h(kQ, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) h(i, j) = h(j, i) = rng.below(2) ? 0 : static_cast<long>(rng.between(-3, 3));
    std::vector<Vector<RationalField>> vs;
    for (std::size_t k = 0; k < 1 + rng.below(n); ++k) {
      Vector<RationalField> v(n);
      for (auto& c : v) c = static_cast<long>(rng.between(-2, 2));
      vs.push_back(v);
    }
    auto w = Subspace::span(kQ, n, vs);
    auto rad = radical_of_restriction(h, w);
    EXPECT_EQ(rank(restrict_bilinear(h, w)) + rad.dim(), w.dim());
    EXPECT_TRUE(w.contains(rad));
  }
}

TEST(LinearSubspace, CanonicalUnderReorderingAndIdempotent) {
  auto a = Subspace::span(kQ, 4, {qv({1, 2, 3, 4}), qv({0, 1, 2, 3}), qv({1, 3, 5, 7})});
  auto b = Subspace::span(kQ, 4, {qv({1, 3, 5, 7}), qv({2, 4, 6, 8}), qv({0, 1, 2, 3})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.projective_dim(), 1);
  EXPECT_EQ(Subspace::span(kQ, 4, a.basis()), a);
  EXPECT_TRUE(a.contains(qv({1, 1, 1, 1})));
  EXPECT_FALSE(a.contains(qv({1, 0, 0, 0})));
}

TEST(MaximalMinor, IsNonsingular) {
  auto [rows, cols] = maximal_minor(kConeHessianAtP);
  ASSERT_EQ(rows.size(), 3u);
  Matrix<RationalField> sub(kQ, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sub(i, j) = kConeHessianAtP(rows[i], cols[j]);
  EXPECT_NE(det_scalar(sub), 0);
}

TEST(DetPoly, Examples) {
  auto fermat = hessian_matrix(P("x0^3 + x1^3 + x2^3 + x3^3", 4));
  EXPECT_EQ(det_poly(fermat).value, P("1296*x0*x1*x2*x3", 4));
  EXPECT_TRUE(det_poly(hessian_matrix(P("x1^3 + x2^3 + x3^3", 4))).value.is_zero());
  auto perazzo = hessian_matrix(P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5));
  auto r = det_poly(perazzo);
  EXPECT_TRUE(r.value.is_zero());
  EXPECT_TRUE(r.probably_zero);
  EXPECT_EQ(r.algorithm, "bareiss");
  EXPECT_TRUE(leibniz_det(perazzo).is_zero());
  EXPECT_THROW(det_poly(QPolyMatrix(kQ, 2, 2, 3)), std::invalid_argument);
}

TEST(DetPoly, CofactorBareissLeibnizAgree) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    auto m = random_poly_matrix(rng, 3, n, 2);
    auto want = leibniz_det(m);
    EXPECT_EQ(det_cofactor(m), want);
    EXPECT_EQ(det_bareiss(m), want);
  }
}

TEST(DetPoly, DegreeIsSumOfRowDegreesForDiagonal) {
  QPolyMatrix m(kQ, 3, 3, 3);
  m(0, 0) = P("x0^2 + x1*x2", 3);
  m(1, 1) = P("x1", 3);
  m(2, 2) = P("x2^3 - x0^3", 3);
  m(0, 2) = P("x1^2", 3);
  auto d = det_poly(m).value;
  EXPECT_EQ(d.total_degree(), 6u);
}

TEST(DetPoly, SerialAndParallelAgree) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_poly_matrix(rng, 3, 5, 2);
    EXPECT_EQ(det_cofactor(m, Execution::serial), det_cofactor(m, Execution::parallel));
    EXPECT_EQ(det_bareiss(m, Execution::serial), det_bareiss(m, Execution::parallel));
    EXPECT_EQ(det_bareiss(m), det_cofactor(m));
  }
}

TEST(DetPoly, EvaluationCommutesModP) {
  Rng rng(13);
  const PrimeField fp(kDefaultPrime);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_poly_matrix(rng, 3, 3, 2);
    auto d = det_poly(m).value;
    Vector<PrimeField> pt = {fp.from_uint(rng.below(kDefaultPrime)), fp.from_uint(rng.below(kDefaultPrime)),
                             fp.from_uint(rng.below(kDefaultPrime))};
    Matrix<PrimeField> mp(fp, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) mp(i, j) = reduce_mod_p(m(i, j), fp).evaluate(pt);
    EXPECT_EQ(reduce_mod_p(d, fp).evaluate(pt), det_scalar(mp));
  }
}
