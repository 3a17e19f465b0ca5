#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace eqspin {

/// Row-major integer matrix.
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Basis of the integer kernel {x in Z^ncols : A x = 0}.
///
/// Unimodular column reduction of A yields a saturated basis (every
/// integer kernel vector is an integer combination of it). The basis is
/// returned in row Hermite normal form, so it is canonical for a given
/// kernel lattice.
std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows are
/// dropped. Pivots are positive and entries above each pivot are reduced
/// into [0, pivot).
std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows);

std::vector<mpz_class> mat_vec(const IntMatrix& a, const std::vector<mpz_class>& x);

/// True when x is an integer combination of the HNF rows `basis`.
bool in_integer_span(const std::vector<std::vector<mpz_class>>& hnf_basis, std::vector<mpz_class> x);

}  // namespace eqspin
