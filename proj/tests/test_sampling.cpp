#include <gtest/gtest.h>

#include "parahess/catalog.hpp"
#include "parahess/hessian.hpp"
#include "parahess/sampling.hpp"
#include "test_util.hpp"

using namespace parahess;
using namespace parahess::testing;

namespace {

SamplingOptions quick(std::size_t samples = 10) {
  SamplingOptions o;
  o.samples = samples;
  return o;
}

}  // namespace

TEST(GenericParabolicIndex, CatalogValues) {
  for (const auto& name : catalog_names()) {
    auto e = catalog_lookup(name);
    auto r = generic_parabolic_index(e.form.poly, quick());
    ASSERT_TRUE(e.expected_h) << name;
    EXPECT_EQ(r.implied_h, *e.expected_h) << name;
    EXPECT_EQ(r.samples, 10u);
    EXPECT_EQ(r.records.size(), 10u);
    EXPECT_EQ(r.prime, kDefaultPrime);
    ASSERT_TRUE(r.certificate) << name;
    EXPECT_TRUE(r.certificate->certified) << name;
    EXPECT_EQ(r.label, "certified lower bound on rank");
    EXPECT_EQ(r.certificate->rows.size(), r.sampled_rank + 2) << name;
    EXPECT_TRUE(minor_not_divisible(e.form.poly, bordered_hessian(e.form.poly), r.certificate->rows,
                                    r.certificate->cols))
        << name;
  }
}

TEST(GenericParabolicIndex, FermatIsNotParabolic) {
  auto r = generic_parabolic_index(catalog_lookup("fermat3").form.poly);
  EXPECT_EQ(r.sampled_rank, 2u);
  EXPECT_EQ(r.implied_h, 0);
  EXPECT_EQ(r.agreeing, 25u);
}

TEST(GenericParabolicIndex, RecordsAreOrderedAndValid) {
  auto r = generic_parabolic_index(catalog_lookup("cone-elliptic").form.poly, quick());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    EXPECT_EQ(rec.index, i);
    EXPECT_EQ(rec.analysis.status, PointStatus::ok);
    EXPECT_LE(*rec.analysis.ii_rank, r.sampled_rank);
    EXPECT_TRUE(rec.fiber_check.containment);
    EXPECT_TRUE(rec.fiber_check.tangency_constant);
  }
}

TEST(GenericParabolicIndex, SerialMatchesParallel) {
  for (const char* name : {"developable3", "perazzo"}) {
    auto f = catalog_lookup(name).form.poly;
    auto o = quick(12);
    o.seed = 7;
    o.execution = Execution::serial;
    auto a = generic_parabolic_index(f, o);
    o.execution = Execution::parallel;
    auto b = generic_parabolic_index(f, o);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].analysis.point, b.records[i].analysis.point);
      EXPECT_EQ(a.records[i].analysis.ii_rank, b.records[i].analysis.ii_rank);
    }
    EXPECT_EQ(a.sampled_rank, b.sampled_rank);
    EXPECT_EQ(a.certificate->rows, b.certificate->rows);
    EXPECT_EQ(a.certificate->cols, b.certificate->cols);
  }
}

TEST(GenericParabolicIndex, SeedChangesPoints) {
  auto f = catalog_lookup("fermat3").form.poly;
  auto o = quick(3);
  auto a = generic_parabolic_index(f, o);
  o.seed = 43;
  auto b = generic_parabolic_index(f, o);
  EXPECT_NE(a.records[0].analysis.point, b.records[0].analysis.point);
  EXPECT_EQ(a.sampled_rank, b.sampled_rank);
}

TEST(GenericParabolicIndex, RandomPrime) {
  auto o = quick(5);
  o.prime = std::nullopt;
  auto r = generic_parabolic_index(catalog_lookup("perazzo").form.poly, o);
  EXPECT_GT(r.prime, kMinAnalysisPrime);
  EXPECT_LT(r.prime, 1ULL << 32);
  EXPECT_EQ(r.implied_h, 1);
}

TEST(GenericParabolicIndex, RejectsBadInput) {
  auto f = catalog_lookup("fermat3").form.poly;
  auto o = quick();
  o.prime = 7;
  EXPECT_THROW(generic_parabolic_index(f, o), std::invalid_argument);
  o.prime = 2147483646ULL;
  EXPECT_THROW(generic_parabolic_index(f, o), std::invalid_argument);
  o.prime = 4294967311ULL;
  EXPECT_THROW(generic_parabolic_index(f, o), std::invalid_argument);
  EXPECT_THROW(generic_parabolic_index(P("x0^3 + x1", 2)), std::invalid_argument);
  EXPECT_THROW(generic_parabolic_index(QPoly(kQ, 3)), std::invalid_argument);
  o = quick();
  o.samples = 0;
  EXPECT_THROW(generic_parabolic_index(f, o), std::invalid_argument);
}

TEST(FamilyDimension, Examples) {
  EXPECT_EQ(family_dimension_estimate(catalog_lookup("fermat3").form.poly, quick(5)), 2);
  EXPECT_EQ(family_dimension_estimate(catalog_lookup("cone-elliptic").form.poly, quick(5)), 1);
  EXPECT_EQ(family_dimension_estimate(catalog_lookup("developable3").form.poly, quick(5)), 1);
  EXPECT_EQ(family_dimension_estimate(catalog_lookup("perazzo").form.poly, quick(5)), 2);
}

TEST(SamplingProperties, VanishingHessianImpliesParabolic) {
  for (const auto& name : catalog_names()) {
    auto f = catalog_lookup(name).form.poly;
    if (hessian_polynomial(f).status != HessianStatus::identically_zero) continue;
    EXPECT_GE(generic_parabolic_index(f, quick(5)).implied_h, 1) << name;
  }
}

TEST(SamplingProperties, RandomCubicsAreNotParabolic) {
  Rng rng(40);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_poly(rng, 4, 3, 12, true);
    if (hessian_polynomial(f).status != HessianStatus::nonzero) continue;
    auto r = generic_parabolic_index(f, quick(5));
    EXPECT_EQ(r.implied_h, 0) << print_polynomial(f);
  }
}
