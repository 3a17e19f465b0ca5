#include <doctest.h>

#include <random>

#include "eqspin/integer_kernel.hpp"

using namespace eqspin;

namespace {

IntMatrix to_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (long x : r) m.back().emplace_back(x);
  }
  return m;
}

}  // namespace

TEST_CASE("integer kernel of small matrices") {
  // 2x - 4y = 0 over Z has kernel generated by (2, 1)
  auto k = integer_kernel(to_matrix({{2, -4}}), 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpz_class>{2, 1});

  // full-rank square matrix has trivial kernel
  CHECK(integer_kernel(to_matrix({{1, 2}, {3, 4}}), 2).empty());

  // zero matrix: kernel is the whole lattice in canonical form
  k = integer_kernel(to_matrix({{0, 0, 0}}), 3);
  REQUIRE(k.size() == 3);
  CHECK(k[0] == std::vector<mpz_class>{1, 0, 0});
  CHECK(k[2] == std::vector<mpz_class>{0, 0, 1});

  // saturation: 6x + 10y + 15z = 0 has a rank-2 primitive lattice
  const auto a = to_matrix({{6, 10, 15}});
  k = integer_kernel(a, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(mat_vec(a, v)[0] == 0);
  CHECK(in_integer_span(k, {5, -3, 0}));
  CHECK(in_integer_span(k, {0, 3, -2}));
  CHECK(in_integer_span(k, {5, 0, -2}));
  CHECK_FALSE(in_integer_span(k, {1, 0, 0}));
}

TEST_CASE("random kernels are annihilated and saturated") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t rows = 2 + rep % 3, cols = 4 + rep % 3;
    IntMatrix a(rows, std::vector<mpz_class>(cols));
    for (auto& r : a)
      for (auto& x : r) x = entry(rng);
    const auto k = integer_kernel(a, cols);
    for (const auto& v : k)
      for (const auto& y : mat_vec(a, v)) CHECK(y == 0);
    // every small kernel vector found by brute force lies in the span
    std::vector<mpz_class> x(cols);
    std::vector<int> digits(cols, -2);
    while (true) {
      for (std::size_t i = 0; i < cols; ++i) x[i] = digits[i];
      bool zero = true;
      for (const auto& y : mat_vec(a, x)) zero = zero && y == 0;
      if (zero) CHECK(in_integer_span(k, x));
      std::size_t i = 0;
      while (i < cols && digits[i] == 2) digits[i++] = -2;
      if (i == cols) break;
      ++digits[i];
    }
  }
}
