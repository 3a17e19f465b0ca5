#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqspin/cyclo.hpp"
#include "eqspin/integer_kernel.hpp"

namespace eqspin {

/// Exponent pair of the monomial t^i xi^j, with j reduced mod p.
struct Monomial {
  long t = 0;
  std::uint32_t xi = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Element of R(S^1 x Z_p) = Z[xi]/(xi^p - 1)[t, t^-1].
///
/// Sparse, with zero coefficients never stored, so structural equality is
/// value equality.
class RepRingElement {
 public:
  explicit RepRingElement(std::uint32_t p);

  static RepRingElement constant(std::uint32_t p, const mpz_class& c);
  static RepRingElement monomial(std::uint32_t p, const mpz_class& c, long t_exp, long long xi_exp);
  static RepRingElement t(std::uint32_t p) { return monomial(p, 1, 1, 0); }
  static RepRingElement xi(std::uint32_t p, long long k = 1) { return monomial(p, 1, 0, k); }
  /// The norm element 1 + xi + ... + xi^(p-1).
  static RepRingElement sigma(std::uint32_t p);
  /// 1 - t xi^k
  static RepRingElement one_minus_t_xi(std::uint32_t p, long long k);

  std::uint32_t prime() const noexcept { return p_; }
  const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }
  mpz_class coeff(long t_exp, long long xi_exp) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Smallest and largest t-exponent; both 0 for the zero element.
  long min_t_degree() const;
  long max_t_degree() const;

  void add_term(const mpz_class& c, long t_exp, long long xi_exp);

  RepRingElement& operator+=(const RepRingElement& b);
  RepRingElement& operator-=(const RepRingElement& b);
  RepRingElement& operator*=(const mpz_class& s);
  RepRingElement operator-() const;
  friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }
  friend RepRingElement operator-(RepRingElement a, const RepRingElement& b) { return a -= b; }
  friend RepRingElement operator*(const RepRingElement& a, const RepRingElement& b);
  friend RepRingElement operator*(RepRingElement a, const mpz_class& s) { return a *= s; }
  friend RepRingElement operator*(const mpz_class& s, RepRingElement a) { return a *= s; }
  friend bool operator==(const RepRingElement& a, const RepRingElement& b) = default;

  RepRingElement pow(unsigned e) const;

  /// The evaluation xi -> 1, still as an element (all mass at xi^0).
  RepRingElement specialize_xi_to_one() const;
  /// The evaluation xi -> zeta_p^k, t -> zeta_p^(t_power * k).
  CyclotomicNumber evaluate(long long k, long long t_power = 0) const;

  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::map<Monomial, mpz_class> terms_;
};

RepRingElement rr_add(const RepRingElement& a, const RepRingElement& b);
RepRingElement rr_mul(const RepRingElement& a, const RepRingElement& b);

/// Adams operation: the ring endomorphism t -> t^q, xi -> xi^q.
RepRingElement adams(std::uint32_t q, const RepRingElement& a);

/// 1 + t xi^k + t^2 xi^(2k) + ... + t^(q-1) xi^((q-1)k), the quotient
/// (1 - t^q xi^(qk)) / (1 - t xi^k).
RepRingElement geometric_block(std::uint32_t p, std::uint32_t q, long long k);

/// Principal ideal generated by (1-t)^(m_0-d) (1-t xi)^(m_1) ... (1-t xi^(p-1))^(m_(p-1)).
class TruncationIdeal {
 public:
  TruncationIdeal(std::uint32_t p, std::vector<std::uint32_t> m_vector, std::uint32_t d = 0);

  std::uint32_t prime() const noexcept { return p_; }
  const std::vector<std::uint32_t>& m_vector() const noexcept { return m_; }
  std::uint32_t offset() const noexcept { return d_; }
  const RepRingElement& generator() const noexcept { return generator_; }
  /// t-degree of the generator; normal forms have t-degree below it.
  std::uint32_t degree() const noexcept { return degree_; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> m_;
  std::uint32_t d_;
  std::uint32_t degree_;
  RepRingElement generator_;
};

/// Unique representative of a modulo the ideal with t-exponents in
/// [0, degree()). Negative powers of t are first rewritten using the fact
/// that the generator has constant term 1.
RepRingElement normal_form(const RepRingElement& a, const TruncationIdeal& ideal);

/// Coordinates of a normal form in the basis t^i xi^j, index i*p + j.
std::vector<mpz_class> coefficient_vector(const RepRingElement& reduced, const TruncationIdeal& ideal);
RepRingElement element_from_vector(const std::vector<mpz_class>& v, const TruncationIdeal& ideal);

/// Numerical data of one finite-dimensional approximation.
struct InstanceParameters {
  std::uint32_t p = 3;
  std::vector<std::uint32_t> m;
  std::vector<std::uint32_t> n;
  std::uint32_t l = 0;
  std::uint32_t d = 0;
  /// Optional self-dual eigenspace dimensions, summing to 2l + 1.
  std::optional<std::vector<long>> t;

  /// k_i = m_i - n_i
  std::vector<long> k_vector() const;
  /// Throws InvalidParameters naming the first broken identity.
  void validate() const;
  TruncationIdeal ideal() const { return TruncationIdeal(p, m, d); }
};

/// Matrix of beta -> NF(psi^q(beta) - q^l beta prod_i block_i^(n_i)) on the
/// normal-form coordinates, one block of rows per q.
IntMatrix adams_constraint_matrix(const InstanceParameters& params, const std::vector<std::uint32_t>& qs);

/// Image of beta under the constraint map for a single q.
RepRingElement adams_constraint_image(const InstanceParameters& params, std::uint32_t q,
                                      const RepRingElement& beta);

struct AdamsKernel {
  std::vector<std::uint32_t> qs;
  /// Dimension of the coefficient space, p times the truncation degree.
  std::size_t dimension = 0;
  /// Saturated integer basis in Hermite normal form.
  std::vector<RepRingElement> basis;
  std::vector<std::vector<mpz_class>> basis_vectors;

  std::size_t rank() const noexcept { return basis.size(); }
  bool contains(const RepRingElement& reduced_beta, const TruncationIdeal& ideal) const;
};

/// Integer kernel of the Adams constraint, intersected over all q given.
AdamsKernel solve_adams_kernel(const InstanceParameters& params, std::vector<std::uint32_t> qs = {2});

/// sigma (1-t)^(M-1) with M the truncation degree, already reduced.
RepRingElement norm_element_top(const InstanceParameters& params);

/// The scalar constraint left on beta = a sigma (1-t)^(M-1) after xi -> 1.
///
/// Over Z[t] the constraint reads a p B^l = a p q^l (after cancelling the
/// common factor (1-t)^(M-1) B^(sum n)), where B = 1 + t + ... + t^(q-1).
/// The two sides differ as polynomials exactly when l >= 1, and then a = 0.
struct ScalarSpecialization {
  std::uint32_t q = 0;
  IntPolynomial lhs;  // p B^l
  IntPolynomial rhs;  // p q^l
  bool forces_zero = false;
  /// Whether sigma (1-t)^(M-1) satisfies the same constraint inside the
  /// truncated ring, where (1-t)^M already vanishes.
  bool truncated_image_vanishes = false;
};

ScalarSpecialization specialize_scalar_constraint(const InstanceParameters& params, std::uint32_t q);

/// Exponent table for the Z_p eigenspace factors of the trace formula.
enum class TomDieckSchedule {
  /// k_i at (1 + nu^((i+1)j)) for i <= p-2 and k_(p-1) at (1 + nu^(p-2j)).
  AsPrinted,
  /// k_i at (1 + nu^(2ij)) for every i.
  Character,
};

/// Exponent e with k_i attached to (1 + nu^e) at power j.
long long tom_dieck_k_exponent(std::uint32_t p, std::uint32_t i, std::uint32_t j, TomDieckSchedule schedule);

/// Indices i whose exponents differ between the two schedules for some j.
std::vector<std::uint32_t> tom_dieck_schedule_discrepancies(std::uint32_t p);

/// 2^(t_0 - k_0) prod_{i>=1} (1 + nu^(ij))^(t_i) (1 + nu^e_i)^(-k_i), in conductor p.
CyclotomicNumber tom_dieck_rhs(const std::vector<long>& t_vector, const std::vector<long>& k_vector,
                               std::uint32_t j, std::uint32_t p,
                               TomDieckSchedule schedule = TomDieckSchedule::AsPrinted);

/// prod_{j=1}^{p-1} tom_dieck_rhs / 2^(p-1), which must equal the integer
/// norm of the ideal element alpha_0. Returned as a rational.
mpq_class tom_dieck_norm(const std::vector<long>& t_vector, const std::vector<long>& k_vector, std::uint32_t p,
                         TomDieckSchedule schedule = TomDieckSchedule::AsPrinted);

/// Coefficient of T^(m-d-1) with T = 1 - t, after xi -> 1 and reduction
/// mod T^(m-d). Throws std::domain_error if lower T-powers survive.
mpz_class extract_sw(const RepRingElement& beta, long m, long d);

}  // namespace eqspin
