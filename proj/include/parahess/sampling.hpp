#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parahess/geometry.hpp"
#include "parahess/poly_matrix.hpp"

namespace parahess {

struct SamplingOptions {
  std::size_t samples = 25;
  std::uint64_t seed = 42;
  /// Fixed analysis prime; nullopt draws a random 31-bit prime from the seed.
  std::optional<std::uint64_t> prime = kDefaultPrime;
  int max_attempts = 64;
  /// Fresh random primes tried after a bad prime or exhausted sampling.
  int prime_retries = 3;
  bool certify = true;
  int certificate_attempts = 200;
  Execution execution = Execution::parallel;
};

/// One sampled smooth point, kept at its logical index.
struct SampleRecord {
  std::size_t index = 0;
  PointAnalysis<PrimeField> analysis;
  FiberCheckResult<PrimeField> fiber_check;
};

/// A (rank + 2)-minor of the symbolic bordered Hessian not divisible by f:
/// it does not vanish identically on X, so the generic rank of II is at
/// least the sampled rank.
struct MinorCertificate {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t attempts = 0;
  bool certified = false;
};

struct GenericRankResult {
  std::size_t sampled_rank = 0;
  std::size_t samples = 0;
  std::uint64_t prime = 0;
  std::vector<SampleRecord> records;
  std::optional<MinorCertificate> certificate;
  /// n - 1 - sampled_rank.
  int implied_h = 0;
  /// Samples whose rank equals sampled_rank.
  std::size_t agreeing = 0;
  /// "sampled" or "certified lower bound on rank".
  std::string label;
};

/// Samples smooth points of V(f) over a prime field, computes rank II_P at
/// each and reports the maximum. Samples are independent (per-index seeds)
/// and run in parallel under Execution::parallel; records are ordered by
/// index either way.
GenericRankResult generic_parabolic_index(const QPoly& f, const SamplingOptions& opts = {});

/// dim Sigma_X = n - 1 - h, the generic rank of the Gauss differential.
int family_dimension_estimate(const QPoly& f, const SamplingOptions& opts = {});
int family_dimension_estimate(const GenericRankResult& r);

/// Checks that a (size x size) minor of the bordered Hessian is not
/// divisible by f.
bool minor_not_divisible(const QPoly& f, const QPolyMatrix& bordered,
                         const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols);

}  // namespace parahess
