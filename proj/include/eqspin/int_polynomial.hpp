#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace eqspin {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first. The leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  /// c * x^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t k) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Exact division by a monic divisor. Throws std::domain_error if the
  /// divisor is not monic or the division leaves a remainder.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// The n-th cyclotomic polynomial, computed by dividing x^n - 1 by
/// Phi_d for every proper divisor d of n. Results are cached.
const IntPolynomial& cyclotomic_polynomial(std::uint32_t n);

}  // namespace eqspin
