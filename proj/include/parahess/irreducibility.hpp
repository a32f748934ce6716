#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parahess/polynomial.hpp"

namespace parahess {

/// Probabilistic screen for a nontrivial factorization of f over Q.
/// A factor of degree k survives reduction mod p and restriction to any
/// line, so k must be a sum of factor degrees of every restriction. Degrees
/// never excluded after all lines are reported; an irreducible form usually
/// excludes them all within a few lines. Absolute irreducibility is not
/// tested.
struct IrreducibilitySmokeTest {
  std::uint64_t prime = 0;
  std::size_t lines = 0;
  /// Proper factor degrees 1 <= k <= d/2 consistent with every line.
  std::vector<unsigned> surviving_degrees;
  /// No restriction was squarefree: f likely has a repeated factor.
  bool repeated_factor = false;
  bool probably_irreducible() const { return surviving_degrees.empty() && !repeated_factor; }
};

IrreducibilitySmokeTest irreducibility_smoke_test(const QPoly& f, std::uint64_t seed,
                                                  std::size_t lines = 16);

}  // namespace parahess
