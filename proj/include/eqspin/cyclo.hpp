#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "eqspin/int_polynomial.hpp"

namespace eqspin {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored as rational coordinates in the power basis 1, zeta, ...,
/// zeta^(phi(n)-1), always reduced modulo Phi_n, so two values of the same
/// conductor are equal iff their coordinate vectors agree. Arithmetic
/// between different conductors is rejected; callers embed first.
class CyclotomicNumber {
 public:
  /// Zero in Q(zeta_1) = Q.
  CyclotomicNumber();
  /// Zero in Q(zeta_n).
  explicit CyclotomicNumber(std::uint32_t conductor);
  /// Coordinates must have length phi(conductor).
  CyclotomicNumber(std::uint32_t conductor, std::vector<mpq_class> coeffs);

  static CyclotomicNumber rational(std::uint32_t conductor, const mpq_class& value);
  /// zeta_n^k for any integer k.
  static CyclotomicNumber zeta(std::uint32_t conductor, long long k = 1);

  std::uint32_t conductor() const noexcept { return conductor_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size(); }

  bool is_zero() const;
  bool is_rational() const;
  /// conjugate() == *this
  bool is_real() const;
  /// Throws NotRational for irrational values.
  mpq_class to_rational() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator-=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const mpq_class& s);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(CyclotomicNumber a, const mpq_class& s) { return a *= s; }
  friend CyclotomicNumber operator*(const mpq_class& s, CyclotomicNumber a) { return a *= s; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Value equality; operands of different conductor are compared in the
  /// compositum.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_n over Q. Throws DivisionByZero for zero.
  CyclotomicNumber inverse() const;
  /// Integer power; negative exponents go through inverse().
  CyclotomicNumber pow(long long e) const;
  /// Complex conjugation, the automorphism zeta -> zeta^-1.
  CyclotomicNumber conjugate() const;
  /// Field trace down to Q.
  mpq_class trace() const;

  /// e.g. "1/2 + 3*z12^2 - z12^3" (z<n> denotes zeta_n)
  std::string to_string() const;

 private:
  std::uint32_t conductor_;
  std::vector<mpq_class> coeffs_;
};

/// num/den in lowest terms (gmp's two-argument constructor does not reduce).
mpq_class ratio(const mpz_class& num, const mpz_class& den);

CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_neg(const CyclotomicNumber& a);
CyclotomicNumber cyc_inverse(const CyclotomicNumber& a);

/// Ring automorphism zeta_n -> zeta_n^k. Throws std::invalid_argument when
/// gcd(k, n) != 1.
CyclotomicNumber galois_apply(const CyclotomicNumber& a, long long k);

/// Value-preserving embedding zeta_n -> zeta_m^(m/n); m must be a
/// multiple of the conductor.
CyclotomicNumber embed_conductor(const CyclotomicNumber& a, std::uint32_t m);

/// Representation of the same value in the smallest possible conductor.
CyclotomicNumber reduce_conductor(const CyclotomicNumber& a);

/// Embeds both values into Q(zeta_lcm).
std::pair<CyclotomicNumber, CyclotomicNumber> to_common_conductor(const CyclotomicNumber& a,
                                                                  const CyclotomicNumber& b);

/// csc(pi*l/p) exactly, in conductor 4p. Throws DivisionByZero when p | l.
CyclotomicNumber half_angle_csc(long long l, std::uint32_t p);
/// cos(pi*l/p) exactly, in conductor 4p.
CyclotomicNumber half_angle_cos(long long l, std::uint32_t p);

/// Floating-point value of the real part, rounded to `precision_bits`
/// bits and printed with enough digits. Advisory only.
std::string numeric_real_part(const CyclotomicNumber& a, unsigned precision_bits = 128);
double approximate_real(const CyclotomicNumber& a);

}  // namespace eqspin
