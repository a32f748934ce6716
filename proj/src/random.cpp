#include "parahess/random.hpp"

#include <cmath>
#include <numbers>

#include "parahess/field.hpp"

namespace parahess {

double Rng::normal() {
  double u1 = unit();
  while (u1 <= 0.0) u1 = unit();
  double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t random_31bit_prime(Rng& rng) {
  for (;;) {
    std::uint64_t candidate = (1ULL << 30) + rng.below(1ULL << 30);
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace parahess
