#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "parahess/linalg.hpp"
#include "parahess/polynomial.hpp"
#include "parahess/random.hpp"

namespace parahess {

/// Selects the OpenMP kernel or its serial reference.
enum class Execution { serial, parallel };

/// Square or rectangular matrix of polynomials sharing a ring.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix(F field, std::size_t nvars, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<F>(field, nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Polynomial<F>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial<F>& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const F& field() const { return entries_.front().field(); }
  std::size_t nvars() const { return entries_.front().nvars(); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const {
    PolyMatrix s(field(), nvars(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  Matrix<F> evaluate(std::span<const typename F::Element> point) const {
    Matrix<F> m(field(), rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial<F>> entries_;
};

using QPolyMatrix = PolyMatrix<RationalField>;

namespace detail {

template <class F>
Polynomial<F> cofactor_recursive(const PolyMatrix<F>& m, std::vector<std::size_t>& rows,
                                 std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m(rows[0], cols[0]);
  Polynomial<F> sum(m.field(), m.nvars());
  const std::size_t r0 = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < n; ++c) {
    const auto& e = m(r0, cols[c]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Polynomial<F> term = e * cofactor_recursive(m, sub_rows, sub_cols);
    if (c % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

inline bool smaller_pivot(std::size_t terms_a, unsigned deg_a, std::size_t terms_b,
                          unsigned deg_b) {
  return terms_a != terms_b ? terms_a < terms_b : deg_a < deg_b;
}

inline bool all_probes_vanish(const PolyMatrix<PrimeField>& m, Rng& rng, int probes) {
  const PrimeField& fp = m.field();
  for (int probe = 0; probe < probes; ++probe) {
    std::vector<Zp> pt;
    for (std::size_t i = 0; i < m.nvars(); ++i) pt.push_back(fp.from_uint(rng.below(fp.modulus())));
    if (!det_scalar(m.evaluate(pt)).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Laplace expansion along the first row. The top-level minors are
/// independent and are fanned out across threads under Execution::parallel;
/// the sum is accumulated in column order so the result does not depend on
/// the schedule.
template <class F>
Polynomial<F> det_cofactor(const PolyMatrix<F>& m, Execution exec = Execution::serial) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty polynomial matrix");
  if (n == 1) return m(0, 0);
  std::vector<Polynomial<F>> terms(n, Polynomial<F>(m.field(), m.nvars()));
  const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long c = 0; c < ln; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    if (m(0, uc).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t k = 1; k < n; ++k) rows.push_back(k);
    for (std::size_t k = 0; k < n; ++k)
      if (k != uc) cols.push_back(k);
    terms[uc] = m(0, uc) * detail::cofactor_recursive(m, rows, cols);
  }
  Polynomial<F> sum(m.field(), m.nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (c % 2 == 0) sum += terms[c];
    else sum -= terms[c];
  }
  return sum;
}

/// Fraction-free Bareiss elimination over the polynomial ring. Each step
/// pivots on the nonzero entry with the fewest terms (then lowest degree)
/// in the trailing submatrix; the row updates of a step are independent
/// and run in parallel under Execution::parallel.
template <class F>
Polynomial<F> det_bareiss(PolyMatrix<F> m, Execution exec = Execution::serial) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty polynomial matrix");
  const F field = m.field();
  const std::size_t nv = m.nvars();
  Polynomial<F> prev = Polynomial<F>::constant(field, nv, field.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pi = n, pj = n;
    std::size_t best_terms = 0;
    unsigned best_deg = 0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const auto& e = m(i, j);
        if (e.is_zero()) continue;
        if (pi == n || detail::smaller_pivot(e.term_count(), *e.total_degree(), best_terms,
                                             best_deg)) {
          pi = i;
          pj = j;
          best_terms = e.term_count();
          best_deg = *e.total_degree();
        }
      }
    }
    if (pi == n) return Polynomial<F>(field, nv);
    if (pi != k) {
      m.swap_rows(pi, k);
      negate = !negate;
    }
    if (pj != k) {
      m.swap_cols(pj, k);
      negate = !negate;
    }
    bool inexact = false;
    const long ln = static_cast<long>(n);
    const long lk = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long i = lk + 1; i < ln; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<F> num = m(k, k) * m(ui, j) - m(ui, k) * m(k, j);
        if (k == 0) {
          m(ui, j) = std::move(num);
          continue;
        }
        auto [q, r] = divide_once(num, prev);
        if (!r.is_zero()) {
#pragma omp atomic write
          inexact = true;
        }
        m(ui, j) = std::move(q);
      }
    }
    if (inexact) throw std::logic_error("Bareiss step produced an inexact division");
    prev = m(k, k);
  }
  Polynomial<F> d = m(n - 1, n - 1);
  return negate ? -d : d;
}

template <class F>
struct DeterminantResult {
  Polynomial<F> value;
  /// All random modular evaluations vanished; never replaces `value`.
  bool probably_zero = false;
  std::string algorithm;
};

struct DeterminantOptions {
  Execution execution = Execution::serial;
  std::uint64_t seed = 0x5eed;
  int probes = 3;
};

/// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond. A
/// Schwartz-Zippel pre-check at random points modulo a random 31-bit prime
/// sets the probably_zero flag.
template <class F>
DeterminantResult<F> det_poly(const PolyMatrix<F>& m, const DeterminantOptions& opts = {}) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Rng rng(opts.seed);
  bool all_vanish = true;
  if constexpr (std::is_same_v<F, RationalField>) {
    const PrimeField fp(random_31bit_prime(rng));
    try {
      PolyMatrix<PrimeField> reduced(fp, m.nvars(), m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = reduce_mod_p(m(i, j), fp);
      all_vanish = detail::all_probes_vanish(reduced, rng, opts.probes);
    } catch (const BadPrimeError&) {
      all_vanish = false;  // inconclusive, leave the flag unset
    }
  } else {
    all_vanish = detail::all_probes_vanish(m, rng, opts.probes);
  }
  DeterminantResult<F> r{Polynomial<F>(m.field(), m.nvars()), all_vanish, ""};
  if (m.rows() <= 4) {
    r.value = det_cofactor(m, opts.execution);
    r.algorithm = "cofactor";
  } else {
    r.value = det_bareiss(m, opts.execution);
    r.algorithm = "bareiss";
  }
  return r;
}

}  // namespace parahess
