#include "parahess/irreducibility.hpp"

#include <stdexcept>

#include "parahess/geometry.hpp"
#include "parahess/univariate.hpp"

namespace parahess {

namespace {

/// f(s * a + b) as a polynomial in s.
UniPolyModP restrict_to_line(const FpPoly& f, const Vector<PrimeField>& a, const Vector<PrimeField>& b) {
  const PrimeField& field = f.field();
  std::vector<FpPoly> line;
  const std::size_t nv = f.nvars();
  for (std::size_t i = 0; i < nv; ++i)
    line.push_back(FpPoly::variable(field, 1, 0).scaled(a[i]) + FpPoly::constant(field, 1, b[i]));
  auto g = f.substitute(line);
  std::vector<Zp> coeffs;
  for (const auto& [m, c] : g.terms()) {
    if (coeffs.size() <= m[0]) coeffs.resize(m[0] + 1, field.zero());
    coeffs[m[0]] = c;
  }
  return UniPolyModP(field, std::move(coeffs));
}

}  // namespace

IrreducibilitySmokeTest irreducibility_smoke_test(const QPoly& f, std::uint64_t seed, std::size_t lines) {
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("smoke test needs a nonzero form");
  const unsigned d = *f.total_degree();
  Rng rng = Rng::for_index(seed, 0x1bbe);
  IrreducibilitySmokeTest r;
  std::uint64_t p = kDefaultPrime;
  FpPoly g(PrimeField(2), 1);
  for (int tries = 0;; ++tries) {
    try {
      g = reduce_mod_p(f, PrimeField(p));
      if (g.total_degree() == d) break;
    } catch (const BadPrimeError&) {
    }
    if (tries > 8) throw std::runtime_error("no usable prime for the irreducibility smoke test");
    p = random_31bit_prime(rng);
  }
  r.prime = p;
  const PrimeField field(p);

  // possible[k]: k is still a sum of factor degrees on every line tried.
  std::vector<bool> possible(d + 1, true);
  std::size_t squarefree_lines = 0;
  for (std::size_t l = 0; l < lines; ++l) {
    Vector<PrimeField> a, b;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      a.push_back(field.from_uint(rng.below(p)));
      b.push_back(field.from_uint(rng.below(p)));
    }
    auto u = restrict_to_line(g, a, b);
    if (u.degree() != static_cast<int>(d) || !is_squarefree(u)) continue;
    ++squarefree_lines;
    std::vector<bool> sums(d + 1, false);
    sums[0] = true;
    for (unsigned k : factor_degrees(u))
      for (unsigned s = d; s >= k; --s)
        if (sums[s - k]) sums[s] = true;
    for (unsigned k = 0; k <= d; ++k) possible[k] = possible[k] && sums[k];
  }
  r.lines = squarefree_lines;
  r.repeated_factor = d > 1 && squarefree_lines == 0;
  for (unsigned k = 1; 2 * k <= d; ++k)
    if (possible[k]) r.surviving_degrees.push_back(k);
  return r;
}

}  // namespace parahess
