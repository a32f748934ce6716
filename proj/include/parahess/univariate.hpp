#pragma once

#include <cstdint>
#include <vector>

#include "parahess/field.hpp"
#include "parahess/random.hpp"

namespace parahess {

/// Dense univariate polynomial over Z/pZ, coefficients low degree first,
/// trailing zeros trimmed.
class UniPolyModP {
 public:
  UniPolyModP(PrimeField field, std::vector<Zp> coeffs);

  const PrimeField& field() const { return field_; }
  const std::vector<Zp>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Zp evaluate(Zp x) const;

 private:
  PrimeField field_;
  std::vector<Zp> c_;
};

/// Distinct roots in [0, p), ascending. Uses gcd with x^p - x followed by
/// randomized equal-degree splitting; small primes are brute-forced.
std::vector<Zp> roots_mod_p(const UniPolyModP& g, Rng& rng);

/// gcd(g, g') is constant.
bool is_squarefree(const UniPolyModP& g);

/// Degrees of the irreducible factors of a squarefree g, ascending
/// (distinct-degree factorization).
std::vector<unsigned> factor_degrees(const UniPolyModP& g);

}  // namespace parahess
