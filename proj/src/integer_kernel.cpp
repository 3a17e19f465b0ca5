#include "eqspin/integer_kernel.hpp"

#include <stdexcept>
#include <utility>

namespace eqspin {
namespace {

// floor(a / b) for b != 0
mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& a, std::size_t ncols) {
  const std::size_t nrows = a.size();
  for (const auto& row : a) {
    if (row.size() != ncols) throw std::invalid_argument("integer_kernel: ragged matrix");
  }
  // column-major working copies of A and of the accumulated unimodular U
  std::vector<std::vector<mpz_class>> b(ncols, std::vector<mpz_class>(nrows));
  std::vector<std::vector<mpz_class>> u(ncols, std::vector<mpz_class>(ncols));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t r = 0; r < nrows; ++r) b[c][r] = a[r][c];
    u[c][c] = 1;
  }
  auto axpy = [](std::vector<mpz_class>& dst, const mpz_class& f, const std::vector<mpz_class>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (src[i] != 0) dst[i] -= f * src[i];
    }
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < nrows && pivot < ncols; ++r) {
    while (true) {
      std::size_t best = ncols;
      for (std::size_t c = pivot; c < ncols; ++c) {
        if (b[c][r] == 0) continue;
        if (best == ncols || abs(b[c][r]) < abs(b[best][r])) best = c;
      }
      if (best == ncols) break;  // row already zero beyond the pivot
      std::swap(b[best], b[pivot]);
      std::swap(u[best], u[pivot]);
      bool clean = true;
      for (std::size_t c = pivot + 1; c < ncols; ++c) {
        if (b[c][r] == 0) continue;
        const mpz_class q = floor_div(b[c][r], b[pivot][r]);
        axpy(b[c], q, b[pivot]);
        axpy(u[c], q, u[pivot]);
        if (b[c][r] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<mpz_class>> kernel(u.begin() + static_cast<std::ptrdiff_t>(pivot), u.end());
  return hermite_normal_form(std::move(kernel));
}

std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[best], rows[top]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const mpz_class q = floor_div(rows[r][col], rows[top][col]);
        for (std::size_t k = col; k < n; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[top][col] < 0) {
          for (auto& x : rows[top]) x = -x;
        }
        for (std::size_t r = 0; r < top; ++r) {
          const mpz_class q = floor_div(rows[r][col], rows[top][col]);
          if (q == 0) continue;
          for (std::size_t k = col; k < n; ++k) rows[r][k] -= q * rows[top][k];
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

std::vector<mpz_class> mat_vec(const IntMatrix& a, const std::vector<mpz_class>& x) {
  std::vector<mpz_class> y(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (a[r][c] != 0 && x[c] != 0) y[r] += a[r][c] * x[c];
    }
  }
  return y;
}

bool in_integer_span(const std::vector<std::vector<mpz_class>>& hnf_basis, std::vector<mpz_class> x) {
  // walk the echelon pivots, subtracting the forced multiple of each row
  for (const auto& row : hnf_basis) {
    std::size_t col = 0;
    while (col < row.size() && row[col] == 0) ++col;
    if (col == row.size()) continue;
    for (std::size_t k = 0; k < col; ++k) {
      if (x[k] != 0) return false;
    }
    if (x[col] % row[col] != 0) return false;
    const mpz_class q = x[col] / row[col];
    for (std::size_t k = col; k < row.size(); ++k) x[k] -= q * row[k];
  }
  for (const auto& v : x) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace eqspin
