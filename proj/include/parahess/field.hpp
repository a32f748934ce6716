#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace parahess {

/// Raised when a rational coefficient has a denominator divisible by the
/// chosen prime; callers retry with another prime.
class BadPrimeError : public std::runtime_error {
 public:
  explicit BadPrimeError(std::uint64_t p)
      : std::runtime_error("bad prime " + std::to_string(p) +
                           ": a denominator is divisible by it"),
        prime(p) {}
  std::uint64_t prime;
};

bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Element of Z/pZ for p < 2^32. The modulus travels with the value so the
/// usual operators work in generic code.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t value, std::uint64_t modulus)
      : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

  friend Zp operator+(Zp a, Zp b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    return raw(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Zp operator-(Zp a, Zp b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Zp operator*(Zp a, Zp b) {
    check(a, b);
    return raw((a.v_ * b.v_) % a.p_, a.p_);
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }

  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Zp a, Zp b) { return !(a == b); }

 private:
  static Zp raw(std::uint64_t v, std::uint64_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  static void check(Zp a, Zp b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixed prime moduli");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

struct RationalSpec {
  bool operator==(const RationalSpec&) const = default;
};
struct PrimeFieldSpec {
  std::uint64_t p = 0;
  bool operator==(const PrimeFieldSpec&) const = default;
};
using FieldSpec = std::variant<RationalSpec, PrimeFieldSpec>;

std::string to_string(const FieldSpec& spec);

/// The rationals, coefficients kept in lowest terms by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const;
  Element from_rational(const mpq_class& q) const { return q; }
  bool is_zero(const Element& e) const { return sgn(e) == 0; }
  std::string to_string(const Element& e) const { return e.get_str(); }
  FieldSpec spec() const { return RationalSpec{}; }

  bool operator==(const RationalField&) const = default;
};

/// Z/pZ with 2 <= p < 2^32 prime.
class PrimeField {
 public:
  using Element = Zp;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Element zero() const { return Zp(0, p_); }
  Element one() const { return Zp(1, p_); }
  Element from_int(long long v) const;
  /// Throws BadPrimeError when p divides the denominator.
  Element from_rational(const mpq_class& q) const;
  Element from_uint(std::uint64_t v) const { return Zp(v, p_); }
  bool is_zero(const Element& e) const { return e.is_zero(); }
  std::string to_string(const Element& e) const {
    return std::to_string(e.value());
  }
  FieldSpec spec() const { return PrimeFieldSpec{p_}; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// Default analysis prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Analysis entry points require p > 2^20 so that Schwartz-Zippel failure
/// rates stay negligible.
inline constexpr std::uint64_t kMinAnalysisPrime = 1ULL << 20;

void require_analysis_prime(std::uint64_t p);

}  // namespace parahess
