#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parahess/field.hpp"
#include "parahess/monomial.hpp"

namespace parahess {

/// Sparse multivariate polynomial over a field F (RationalField or
/// PrimeField). Terms are kept in grlex-descending order with no stored
/// zero coefficients, so equality is structural.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using Element = typename F::Element;
  using TermMap = std::map<Monomial, Element, GrlexDescending>;

  Polynomial() : Polynomial(F{}, 0) {}
  Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(const F& field, std::size_t nvars, const Element& c) {
    Polynomial p(field, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(const F& field, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(field, nvars);
    p.add_term(Monomial::variable(nvars, i), field.one());
    return p;
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Zero polynomial has no degree.
  std::optional<unsigned> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  const std::pair<const Monomial, Element>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.begin();
  }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Accumulates c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Element& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Element(ca * cb));
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& s) const {
    Polynomial r(field_, nvars_);
    if (field_.is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, Element(c * s));
    return r;
  }

  /// Multiplies by c * m.
  Polynomial shifted(const Monomial& m, const Element& c) const {
    Polynomial r(field_, nvars_);
    if (field_.is_zero(c)) return r;
    for (const auto& [mt, ct] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), mt * m, Element(ct * c));
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    Polynomial b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

  Polynomial differentiate(std::size_t i) const {
    if (i >= nvars_) throw std::out_of_range("differentiation variable out of range");
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      r.add_term(m.lowered(i), Element(c * field_.from_int(m[i])));
    }
    return r;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point arity mismatch");
    std::vector<std::vector<Element>> powers(nvars_);
    Element sum = field_.zero();
    for (const auto& [m, c] : terms_) {
      Element t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = m[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(field_.one());
        while (pw.size() <= e) pw.push_back(Element(pw.back() * point[i]));
        t = t * pw[e];
      }
      sum = sum + t;
    }
    return sum;
  }

  /// Substitutes images[i] for x_i; all images share one parameter ring.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
    if (images.empty()) return *this;
    std::size_t k = images.front().nvars();
    for (const auto& im : images) {
      if (im.nvars() != k) throw std::invalid_argument("substitution images disagree on arity");
      if (!(im.field() == field_)) throw std::invalid_argument("substitution field mismatch");
    }
    std::vector<std::vector<Polynomial>> powers(nvars_);
    Polynomial result(field_, k);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(field_, k, c);
      for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i) {
        unsigned e = m[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(field_, k, field_.one()));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        t *= pw[e];
      }
      result += t;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
  }

  F field_;
  std::size_t nvars_;
  TermMap terms_;
};

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

template <class F>
struct DivisionResult {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Division by a single divisor under grlex: g = q*f + r with no term of r
/// divisible by LM(f). r == 0 exactly when f divides g.
template <class F>
DivisionResult<F> divide_once(const Polynomial<F>& g, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (g.nvars() != f.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  const auto& [lm, lc] = f.leading_term();
  const auto lc_inv = typename F::Element(g.field().one() / lc);
  Polynomial<F> q(g.field(), g.nvars());
  Polynomial<F> r(g.field(), g.nvars());
  Polynomial<F> p = g;
  while (!p.is_zero()) {
    auto [pm, pc] = p.leading_term();
    if (lm.divides(pm)) {
      Monomial t = lm.quotient_of(pm);
      typename F::Element c = pc * lc_inv;
      q.add_term(t, c);
      p -= f.shifted(t, c);
    } else {
      r.add_term(pm, pc);
      p.add_term(pm, -pc);
    }
  }
  return {std::move(q), std::move(r)};
}

/// Exact quotient g / f; throws if f does not divide g.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& g, const Polynomial<F>& f) {
  auto [q, r] = divide_once(g, f);
  if (!r.is_zero()) throw std::logic_error("exact division left a remainder");
  return q;
}

/// f restricted to span(basis): substitutes x = sum_i t_i * basis[i] and
/// returns a polynomial in basis.size() parameters. It is identically zero
/// iff the span lies in V(f).
template <class F>
Polynomial<F> restrict_to_subspace(const Polynomial<F>& f,
                                   const std::vector<std::vector<typename F::Element>>& basis) {
  if (basis.empty()) throw std::invalid_argument("restriction to an empty basis");
  const std::size_t k = basis.size();
  std::vector<Polynomial<F>> images;
  images.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Polynomial<F> xi(f.field(), k);
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != f.nvars())
        throw std::invalid_argument("basis vector arity mismatch");
      xi.add_term(Monomial::variable(k, j), basis[j][i]);
    }
    images.push_back(std::move(xi));
  }
  return f.substitute(images);
}

template <class F>
std::vector<Polynomial<F>> gradient(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.differentiate(i));
  return g;
}

/// Coefficient-wise reduction; throws BadPrimeError on a denominator
/// divisible by p.
FpPoly reduce_mod_p(const QPoly& f, const PrimeField& field);
FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p);

}  // namespace parahess
