#include "parahess/geometry.hpp"

namespace parahess {

const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::ok: return "ok";
    case PointStatus::not_on_hypersurface: return "point_not_on_hypersurface";
    case PointStatus::singular: return "singular_point";
  }
  return "unknown";
}

UniPolyModP specialize(const FpPoly& f, const Vector<PrimeField>& values, std::size_t var) {
  const PrimeField& field = f.field();
  std::vector<Zp> coeffs;
  for (const auto& [m, c] : f.terms()) {
    Zp t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != var && m[i] > 0) t *= values[i].pow(m[i]);
    if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1, field.zero());
    coeffs[m[var]] += t;
  }
  return UniPolyModP(field, std::move(coeffs));
}

Vector<PrimeField> sample_point(const FpPoly& f, Rng& rng, int max_attempts) {
  const PrimeField& field = f.field();
  const std::size_t nv = f.nvars();
  const std::uint64_t p = field.modulus();
  auto grads = gradient(f);
  auto smooth_on_x = [&](const Vector<PrimeField>& pt) {
    if (std::all_of(pt.begin(), pt.end(), [](Zp z) { return z.is_zero(); })) return false;
    for (const auto& g : grads)
      if (!g.evaluate(pt).is_zero()) return true;
    return false;
  };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t k = 0; k < nv; ++k) {
      const std::size_t var = nv - 1 - k;
      Vector<PrimeField> pt(nv, field.zero());
      for (std::size_t i = 0; i < nv; ++i)
        if (i != var) pt[i] = field.from_uint(rng.below(p));
      UniPolyModP u = specialize(f, pt, var);
      std::vector<Zp> candidates;
      if (u.is_zero()) {
        candidates.push_back(field.from_uint(rng.below(p)));
      } else {
        candidates = roots_mod_p(u, rng);
      }
      if (candidates.empty()) continue;
      // Rotate the sorted roots by a random offset, then take the first smooth one.
      std::size_t offset = rng.below(candidates.size());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        pt[var] = candidates[(c + offset) % candidates.size()];
        if (smooth_on_x(pt)) return pt;
      }
    }
  }
  throw SamplingExhaustedError("no smooth point of V(f) found mod " + std::to_string(p) +
                               " after " + std::to_string(max_attempts) + " attempts");
}

Vector<PrimeField> sample_point(const QPoly& f, std::uint64_t p, std::uint64_t seed,
                                int max_attempts) {
  Rng rng(seed);
  return sample_point(reduce_mod_p(f, p), rng, max_attempts);
}

}  // namespace parahess
