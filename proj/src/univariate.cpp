#include "parahess/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace parahess {

namespace {

using Coeffs = std::vector<Zp>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// a mod b, b nonzero.
Coeffs rem(Coeffs a, const Coeffs& b) {
  const Zp inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Zp q = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Coeffs quo(Coeffs a, const Coeffs& b, const PrimeField& f) {
  if (a.size() < b.size()) return {};
  const Zp inv = b.back().inverse();
  Coeffs q(a.size() - b.size() + 1, f.zero());
  while (a.size() >= b.size()) {
    Zp c = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Coeffs monic(Coeffs a) {
  if (a.empty()) return a;
  Zp inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// base^e mod m.
Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m, const PrimeField& f) {
  Coeffs result{f.one()};
  result = rem(result, m);
  base = rem(base, m);
  while (e) {
    if (e & 1) result = rem(mul(result, base, f), m);
    e >>= 1;
    if (e) base = rem(mul(base, base, f), m);
  }
  return result;
}

void split(const Coeffs& h, const PrimeField& f, Rng& rng, std::vector<Zp>& out) {
  const int deg = static_cast<int>(h.size()) - 1;
  if (deg <= 0) return;
  if (deg == 1) {
    out.push_back(-h[0] / h[1]);
    return;
  }
  const std::uint64_t p = f.modulus();
  for (int tries = 0; tries < 200; ++tries) {
    Coeffs lin{f.from_uint(rng.below(p)), f.one()};
    Coeffs t = powmod(lin, (p - 1) / 2, h, f);
    if (t.empty()) t = {f.zero()};
    t[0] -= f.one();
    trim(t);
    Coeffs d = gcd(h, t);
    int dd = static_cast<int>(d.size()) - 1;
    if (dd > 0 && dd < deg) {
      split(d, f, rng, out);
      split(monic(quo(h, d, f)), f, rng, out);
      return;
    }
  }
  throw std::runtime_error("root splitting failed to separate factors");
}

}  // namespace

UniPolyModP::UniPolyModP(PrimeField field, std::vector<Zp> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim(c_);
}

Zp UniPolyModP::evaluate(Zp x) const {
  Zp acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Zp> roots_mod_p(const UniPolyModP& g, Rng& rng) {
  if (g.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const PrimeField& f = g.field();
  const std::uint64_t p = f.modulus();
  std::vector<Zp> out;
  if (g.degree() == 0) return out;
  if (p < 64) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (g.evaluate(f.from_uint(x)).is_zero()) out.push_back(f.from_uint(x));
    return out;
  }
  Coeffs gm = monic(g.coeffs());
  // gcd(g, x^p - x) isolates the product of distinct linear factors.
  Coeffs xp = powmod(Coeffs{f.zero(), f.one()}, p, gm, f);
  if (xp.size() < 2) xp.resize(2, f.zero());
  xp[1] -= f.one();
  trim(xp);
  Coeffs h = xp.empty() ? gm : gcd(gm, xp);
  split(h, f, rng, out);
  std::sort(out.begin(), out.end(),
            [](Zp a, Zp b) { return a.value() < b.value(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_squarefree(const UniPolyModP& g) {
  if (g.is_zero()) throw std::invalid_argument("squarefreeness of the zero polynomial");
  const PrimeField& f = g.field();
  const auto& c = g.coeffs();
  Coeffs d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * f.from_uint(i));
  trim(d);
  if (d.empty()) return g.degree() == 0;
  return gcd(c, d).size() == 1;
}

std::vector<unsigned> factor_degrees(const UniPolyModP& g) {
  if (!is_squarefree(g)) throw std::invalid_argument("factor_degrees needs a squarefree polynomial");
  const PrimeField& f = g.field();
  const std::uint64_t p = f.modulus();
  std::vector<unsigned> out;
  Coeffs rest = monic(g.coeffs());
  const Coeffs x{f.zero(), f.one()};
  Coeffs xpi = x;  // x^(p^i) mod rest
  for (unsigned i = 1; 2 * i + 1 <= rest.size(); ++i) {
    xpi = powmod(xpi, p, rest, f);
    Coeffs t = xpi;
    if (t.size() < 2) t.resize(2, f.zero());
    t[1] -= f.one();
    trim(t);
    Coeffs d = t.empty() ? rest : gcd(rest, t);
    const std::size_t dd = d.size() - 1;
    if (dd == 0) continue;
    out.insert(out.end(), dd / i, i);
    rest = monic(quo(rest, d, f));
    xpi = rem(xpi, rest);
  }
  if (rest.size() > 1) out.push_back(static_cast<unsigned>(rest.size() - 1));
  return out;
}

}  // namespace parahess
