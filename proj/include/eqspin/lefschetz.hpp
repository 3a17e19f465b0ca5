#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqspin/cyclo.hpp"
#include "eqspin/dataset.hpp"

namespace eqspin {

/// Eigenspace defects (k_0, ..., k_(p-1)) of the equivariant Dirac index.
struct KVector {
  std::uint32_t p = 3;
  std::vector<mpz_class> k;

  mpz_class sum() const;
  std::string to_string() const;
  friend bool operator==(const KVector&, const KVector&) = default;
};

/// Spin numbers for the powers j = 0..p-1 of the lifted generator; entry 0
/// is the full index -sigma/8.
struct SpinNumberTuple {
  std::uint32_t p = 3;
  std::vector<CyclotomicNumber> values;
};

/// Equivariant spin number of the j-th power of the lift, from the
/// half-weight data. Returned in its smallest conductor.
CyclotomicNumber spin_number(const FixedPointDataset& d, std::uint32_t j);

/// The j = 1 fixed-point formula evaluated literally from the rotation
/// angles and signs with exact csc and cos values.
CyclotomicNumber spin_number_direct(const FixedPointDataset& d);

/// -sigma/8; throws InvalidParameters if not spin or if 8 does not divide sigma.
mpq_class spin_index(const ManifoldInvariants& m);

SpinNumberTuple spin_tuple(const FixedPointDataset& d);

/// Fourier inversion k_i = (1/p) sum_j nu^(-ij) Spin(j). Throws
/// NonIntegralKVector when some k_i is not an integer.
KVector k_vector(const SpinNumberTuple& s);

class NonIntegralKVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Spin(j) = sum_i k_i nu^(ij), the forward map that k_vector inverts.
SpinNumberTuple synthesize(const KVector& k);

/// Spin of the generator when k_1 = ... = k_(p-1): (p k_0 - s)/(p - 1)
/// where s = sum of all k_i.
mpq_class equal_defect_spin(std::uint32_t p, const mpz_class& k0, const mpz_class& total);

/// chi of the fixed set: isolated points plus 2 - 2g per surface.
mpz_class fixed_set_euler(const FixedPointDataset& d);

/// 3 sigma(X/Z_3) = sigma + (8/3) sum <F,F> + (2/3)(f1 - f2).
mpq_class signature_quotient_p3(const FixedPointDataset& d);
/// (chi + 2 chi(X^tau)) / 3.
mpq_class euler_quotient_p3(const FixedPointDataset& d);
/// (chi + (p-1) chi(X^tau)) / p for any p.
mpq_class euler_quotient(const FixedPointDataset& d);

}  // namespace eqspin
