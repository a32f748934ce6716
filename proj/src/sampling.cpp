#include "parahess/sampling.hpp"

#include <algorithm>
#include <exception>

#include "parahess/hessian.hpp"

namespace parahess {

namespace {

struct SampleOutcome {
  std::optional<SampleRecord> record;
  bool exhausted = false;
  std::string error;
};

SampleOutcome run_sample(const HypersurfaceDerivatives<PrimeField>& d, std::uint64_t seed,
                         std::size_t index, int max_attempts) {
  SampleOutcome out;
  try {
    Rng rng = Rng::for_index(seed, index);
    auto pt = sample_point(d.form(), rng, max_attempts);
    SampleRecord rec;
    rec.index = index;
    rec.analysis = analyze_point(d, pt);
    rec.fiber_check = check_fiber(d, rec.analysis, rng);
    out.record = std::move(rec);
  } catch (const SamplingExhaustedError& e) {
    out.exhausted = true;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

GenericRankResult sample_with_prime(const QPoly& f, std::uint64_t p, const SamplingOptions& opts) {
  const auto fp = reduce_mod_p(f, p);
  const HypersurfaceDerivatives<PrimeField> d(fp);
  std::vector<SampleOutcome> outcomes(opts.samples);
  const long count = static_cast<long>(opts.samples);
#pragma omp parallel for schedule(dynamic) if (opts.execution == Execution::parallel)
  for (long i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    outcomes[ui] = run_sample(d, opts.seed, ui, opts.max_attempts);
  }
  GenericRankResult r;
  r.prime = p;
  r.samples = opts.samples;
  for (auto& o : outcomes) {
    if (o.exhausted) throw SamplingExhaustedError(o.error);
    if (!o.record) throw std::runtime_error("sample failed: " + o.error);
    r.records.push_back(std::move(*o.record));
  }
  for (const auto& rec : r.records) r.sampled_rank = std::max(r.sampled_rank, *rec.analysis.ii_rank);
  r.agreeing = static_cast<std::size_t>(std::count_if(
      r.records.begin(), r.records.end(),
      [&](const SampleRecord& rec) { return *rec.analysis.ii_rank == r.sampled_rank; }));
  r.implied_h = static_cast<int>(f.nvars()) - 2 - static_cast<int>(r.sampled_rank);
  return r;
}

MinorCertificate search_certificate(const QPoly& f, const GenericRankResult& r,
                                    const SamplingOptions& opts) {
  MinorCertificate cert;
  const QPolyMatrix bordered = bordered_hessian(f);
  const std::size_t size = r.sampled_rank + 2;
  const std::size_t dim = bordered.rows();
  // First candidate: a nonsingular minor at a sample achieving the rank.
  auto best = std::find_if(r.records.begin(), r.records.end(), [&](const SampleRecord& rec) {
    return *rec.analysis.ii_rank == r.sampled_rank;
  });
  if (best != r.records.end()) {
    const PrimeField fp(r.prime);
    PolyMatrix<PrimeField> bp(fp, f.nvars(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) bp(i, j) = reduce_mod_p(bordered(i, j), fp);
    auto [rows, cols] = maximal_minor(bp.evaluate(best->analysis.point));
    ++cert.attempts;
    if (rows.size() == size && minor_not_divisible(f, bordered, rows, cols)) {
      cert.rows = rows;
      cert.cols = cols;
      cert.certified = true;
      return cert;
    }
  }
  Rng rng = Rng::for_index(opts.seed, 0xce57);
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  while (static_cast<int>(cert.attempts) < opts.certificate_attempts) {
    ++cert.attempts;
    auto pick = [&]() {
      auto v = all;
      for (std::size_t i = 0; i < size; ++i) std::swap(v[i], v[i + rng.below(dim - i)]);
      v.resize(size);
      std::sort(v.begin(), v.end());
      return v;
    };
    auto rows = pick();
    auto cols = pick();
    if (minor_not_divisible(f, bordered, rows, cols)) {
      cert.rows = rows;
      cert.cols = cols;
      cert.certified = true;
      return cert;
    }
  }
  return cert;
}

}  // namespace

bool minor_not_divisible(const QPoly& f, const QPolyMatrix& bordered,
                         const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  auto det = det_poly(bordered.submatrix(rows, cols)).value;
  if (det.is_zero()) return false;
  return !divide_once(det, f).remainder.is_zero();
}

GenericRankResult generic_parabolic_index(const QPoly& f, const SamplingOptions& opts) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("parabolic index needs a nonzero homogeneous form");
  if (*f.total_degree() < 2) throw std::invalid_argument("parabolic index needs degree >= 2");
  if (opts.samples == 0) throw std::invalid_argument("at least one sample is required");
  Rng prime_rng = Rng::for_index(opts.seed, 0x9a1e);
  std::uint64_t p = 0;
  if (opts.prime) {
    require_analysis_prime(*opts.prime);
    p = *opts.prime;
  } else {
    p = random_31bit_prime(prime_rng);
  }
  for (int attempt = 0;; ++attempt) {
    try {
      GenericRankResult r = sample_with_prime(f, p, opts);
      r.label = "sampled";
      if (opts.certify) {
        r.certificate = search_certificate(f, r, opts);
        if (r.certificate->certified) r.label = "certified lower bound on rank";
      }
      return r;
    } catch (const BadPrimeError&) {
      if (attempt >= opts.prime_retries) throw;
    } catch (const SamplingExhaustedError&) {
      if (attempt >= opts.prime_retries) throw;
    }
    p = random_31bit_prime(prime_rng);
  }
}

int family_dimension_estimate(const GenericRankResult& r) {
  return static_cast<int>(r.sampled_rank);
}

int family_dimension_estimate(const QPoly& f, const SamplingOptions& opts) {
  return family_dimension_estimate(generic_parabolic_index(f, opts));
}

}  // namespace parahess
