#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "parahess/form_io.hpp"
#include "parahess/linalg.hpp"
#include "parahess/poly_matrix.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/random.hpp"

namespace parahess {
inline void PrintTo(const QPoly& p, std::ostream* os) { *os << print_polynomial(p); }
}  // namespace parahess

namespace parahess::testing {

inline const RationalField kQ{};

inline QPoly P(const std::string& text, std::size_t nvars) { return parse_polynomial(text, nvars); }

inline Vector<RationalField> qv(std::initializer_list<long> v) {
  Vector<RationalField> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// Random polynomial with small integer coefficients and terms of total
/// degree <= max_degree (exactly max_degree when homogeneous).
inline QPoly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms,
                         bool homogeneous = false) {
  QPoly p(kQ, nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    unsigned deg = homogeneous ? max_degree : static_cast<unsigned>(rng.below(max_degree + 1));
    std::vector<unsigned> e(nvars, 0);
    for (unsigned k = 0; k < deg; ++k) ++e[rng.below(nvars)];
    long c = rng.between(-5, 5);
    if (c == 0) c = 1;
    p.add_term(Monomial(std::move(e)), mpq_class(c));
  }
  return p;
}

inline QPolyMatrix random_poly_matrix(Rng& rng, std::size_t nvars, std::size_t size, unsigned max_degree) {
  QPolyMatrix m(kQ, nvars, size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = random_poly(rng, nvars, max_degree, rng.below(3));
  return m;
}

/// Leibniz permutation expansion: independent of both production algorithms.
inline QPoly leibniz_det(const QPolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  QPoly sum(kQ, m.nvars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    QPoly term = QPoly::constant(kQ, m.nvars(), mpq_class(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace parahess::testing
