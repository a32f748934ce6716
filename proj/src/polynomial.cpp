#include "parahess/polynomial.hpp"

namespace parahess {

FpPoly reduce_mod_p(const QPoly& f, const PrimeField& field) {
  FpPoly r(field, f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, field.from_rational(c));
  return r;
}

FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p) {
  return reduce_mod_p(f, PrimeField(p));
}

}  // namespace parahess
