#include "parahess/field.hpp"

namespace parahess {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

Zp Zp::pow(std::uint64_t e) const {
  return Zp(powmod(v_, e, p_), p_);
}

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in Z/pZ");
  // Extended Euclid; p need not be prime-checked here.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return Zp(static_cast<std::uint64_t>(t), p_);
}

std::string to_string(const FieldSpec& spec) {
  if (std::holds_alternative<RationalSpec>(spec)) return "QQ";
  return "GF(" + std::to_string(std::get<PrimeFieldSpec>(spec).p) + ")";
}

RationalField::Element RationalField::from_int(long long v) const {
  mpz_class z;
  // mpz_class lacks a long long constructor on some platforms.
  z = static_cast<long>(v);
  return Element(z);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32)) throw std::invalid_argument("prime modulus must be < 2^32");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_int(long long v) const {
  auto m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return Zp(static_cast<std::uint64_t>(r), p_);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  auto reduce = [this](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return Zp(r.get_ui(), p_);
  };
  Zp den = reduce(q.get_den());
  if (den.is_zero()) throw BadPrimeError(p_);
  return reduce(q.get_num()) / den;
}

void require_analysis_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p <= kMinAnalysisPrime)
    throw std::invalid_argument("analysis prime must exceed 2^20, got " + std::to_string(p));
  if (p >= (1ULL << 32)) throw std::invalid_argument("analysis prime must be < 2^32");
}

}  // namespace parahess
