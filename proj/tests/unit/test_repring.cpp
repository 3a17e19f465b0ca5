#include <doctest.h>

#include <random>

#include "eqspin/errors.hpp"
#include "eqspin/repring.hpp"

using namespace eqspin;

namespace {

RepRingElement random_element(std::uint32_t p, std::mt19937& rng, long min_t = 0, long max_t = 4) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<long> texp(min_t, max_t);
  std::uniform_int_distribution<int> xexp(0, static_cast<int>(p) - 1);
  RepRingElement r(p);
  for (int k = 0; k < 6; ++k) r.add_term(coef(rng), texp(rng), xexp(rng));
  return r;
}

InstanceParameters lemma33_instance() {
  InstanceParameters params;
  params.p = 3;
  params.m = {2, 2, 2};
  params.n = {2, 1, 1};
  params.l = 1;
  params.d = 0;
  return params;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const std::uint32_t p = 3;
  const auto one = RepRingElement::constant(p, 1);
  const auto t = RepRingElement::t(p);
  CHECK((one - t) * (one + t) == one - t * t);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto sigma = RepRingElement::sigma(q);
    for (long long k = 0; k < q; ++k) {
      CHECK(sigma * RepRingElement::one_minus_t_xi(q, k) == sigma * RepRingElement::one_minus_t_xi(q, 0));
    }
  }
  CHECK(RepRingElement::xi(p, 3) == one);
  CHECK(RepRingElement::xi(p, -1) == RepRingElement::xi(p, 2));
  CHECK_THROWS_AS(one + RepRingElement::constant(5, 1), PrimeMismatch);
  std::mt19937 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_element(p, rng, -2, 4), b = random_element(p, rng, -2, 4);
    CHECK(a * one == a);
    CHECK(rr_mul(a, b) == rr_mul(b, a));
    CHECK(rr_add(a, b) - b == a);
  }
}

TEST_CASE("Adams operations") {
  const std::uint32_t p = 3;
  const auto one = RepRingElement::constant(p, 1);
  const auto t = RepRingElement::t(p);
  CHECK(adams(2, one - t) == one - t * t);
  CHECK(adams(2, RepRingElement::monomial(p, 1, 1, 1)) == RepRingElement::monomial(p, 1, 2, 2));
  CHECK(adams(3, RepRingElement::xi(p)) == one);
  std::mt19937 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_element(p, rng, -2, 4), b = random_element(p, rng, -2, 4);
    CHECK(adams(1, a) == a);
    for (std::uint32_t q : {2u, 3u, 4u}) {
      CHECK(adams(q, a * b) == adams(q, a) * adams(q, b));
      CHECK(adams(q, a + b) == adams(q, a) + adams(q, b));
    }
  }
}

TEST_CASE("normal forms modulo the truncation ideal") {
  const std::uint32_t p = 3;
  const TruncationIdeal ideal(p, {2, 1, 1});
  CHECK(ideal.degree() == 4);
  CHECK(normal_form(ideal.generator(), ideal).is_zero());
  const TruncationIdeal linear(p, {1, 0, 0});
  CHECK(normal_form(RepRingElement::one_minus_t_xi(p, 0), linear).is_zero());
  CHECK(normal_form(RepRingElement::t(p), linear) == RepRingElement::constant(p, 1));
  CHECK(normal_form(RepRingElement::monomial(p, 1, -3, 1), linear) == RepRingElement::xi(p));

  std::mt19937 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const auto low = random_element(p, rng, 0, 3);
    CHECK(normal_form(low, ideal) == low);
    const auto a = random_element(p, rng, -3, 9), b = random_element(p, rng, -3, 9);
    const auto na = normal_form(a, ideal);
    CHECK(na.max_t_degree() < 4);
    CHECK(na.min_t_degree() >= 0);
    CHECK(normal_form(na, ideal) == na);
    CHECK(normal_form(a + b, ideal) == na + normal_form(b, ideal));
    CHECK(normal_form(a * ideal.generator(), ideal).is_zero());
    // t * t^-1 reduces to 1
    CHECK(normal_form(a * RepRingElement::monomial(p, 1, -1, 0) * RepRingElement::t(p), ideal) == na);
  }
  // leading coefficient of a generator is a unit +-xi^s
  const TruncationIdeal twisted(5, {0, 2, 1, 0, 3});
  const long top = twisted.generator().max_t_degree();
  CHECK(top == 6);
  int count = 0;
  for (const auto& [mono, c] : twisted.generator().terms()) {
    if (mono.t == top) {
      ++count;
      CHECK(abs(c) == 1);
    }
  }
  CHECK(count == 1);
}

TEST_CASE("instance parameter identities") {
  auto params = lemma33_instance();
  CHECK_NOTHROW(params.validate());
  CHECK(params.k_vector() == std::vector<long>{0, 1, 1});
  params.l = 2;
  CHECK_THROWS_AS(params.validate(), InvalidParameters);
  params = lemma33_instance();
  params.t = std::vector<long>{3, 0, 0};
  CHECK_NOTHROW(params.validate());
  params.t = std::vector<long>{1, 0, 0};
  CHECK_THROWS_AS(params.validate(), InvalidParameters);
  params = lemma33_instance();
  params.p = 9;
  CHECK_THROWS_AS(params.validate(), InvalidParameters);
}

TEST_CASE("Adams kernel on the k = (0,1,1) instance") {
  const auto params = lemma33_instance();
  const auto ideal = params.ideal();
  const auto top = norm_element_top(params);
  // sigma (1-t)^5 spelled out
  const auto expected = RepRingElement::sigma(3) * RepRingElement::one_minus_t_xi(3, 0).pow(5);
  CHECK(top == expected);
  CHECK(adams_constraint_image(params, 2, top).is_zero());
  CHECK(adams_constraint_image(params, 2, RepRingElement(3)).is_zero());

  const auto matrix = adams_constraint_matrix(params, {2});
  CHECK(matrix.size() == 18);
  CHECK(matrix[0].size() == 18);

  const auto kernel = solve_adams_kernel(params, {2});
  CHECK(kernel.dimension == 18);
  REQUIRE(kernel.rank() == 1);
  CHECK((kernel.basis[0] == top || kernel.basis[0] == -top));
  CHECK(kernel.contains(top, ideal));

  // elements outside the span have nonzero image
  std::mt19937 rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    auto beta = normal_form(random_element(3, rng, 0, 5), ideal);
    if (kernel.contains(beta, ideal)) continue;
    CHECK_FALSE(adams_constraint_image(params, 2, beta).is_zero());
  }
}

TEST_CASE("Adams kernels on further negative-spin instances") {
  struct Case {
    std::uint32_t p;
    std::vector<std::uint32_t> m, n;
    std::uint32_t l;
  };
  const std::vector<Case> cases = {
      {3, {1, 1, 1}, {1, 0, 0}, 1},
      {3, {3, 3, 3}, {3, 2, 2}, 1},
      {5, {2, 2, 2, 2, 2}, {4, 1, 1, 1, 1}, 1},
  };
  for (const auto& c : cases) {
    InstanceParameters params;
    params.p = c.p;
    params.m = c.m;
    params.n = c.n;
    params.l = c.l;
    const auto kernel = solve_adams_kernel(params, {2});
    REQUIRE(kernel.rank() == 1);
    const auto top = norm_element_top(params);
    CHECK((kernel.basis[0] == top || kernel.basis[0] == -top));
  }
}

TEST_CASE("scalar specialization forces a = 0") {
  const auto params = lemma33_instance();
  const auto scalar = specialize_scalar_constraint(params, 3);
  CHECK(scalar.lhs.to_string("t") == "3t^2 + 3t + 3");
  CHECK(scalar.rhs.to_string("t") == "9");
  CHECK(scalar.forces_zero);
  // inside the truncated ring the same element is not excluded
  CHECK(scalar.truncated_image_vanishes);

  auto b1 = params;
  b1.l = 0;
  b1.n = {3, 1, 1};
  const auto trivial = specialize_scalar_constraint(b1, 3);
  CHECK_FALSE(trivial.forces_zero);
}

TEST_CASE("Seiberg-Witten extraction") {
  const std::uint32_t p = 3;
  const auto T = RepRingElement::one_minus_t_xi(p, 0);
  CHECK(extract_sw(T.pow(5) * mpz_class(3), 6, 0) == 3);
  CHECK(extract_sw(RepRingElement(p), 6, 0) == 0);
  CHECK(extract_sw(RepRingElement::sigma(p) * T.pow(5), 6, 0) == 3);
  CHECK(extract_sw(RepRingElement::sigma(p) * T.pow(5) * mpz_class(0), 6, 0) == 0);
  CHECK(extract_sw(T.pow(3) * mpz_class(-2), 5, 1) == -2);
  CHECK_THROWS_AS(extract_sw(T.pow(2), 6, 0), std::domain_error);
  // t^-1 = 1 + T + T^2 + ... so t^-1 - 1 - T has lowest term T^2
  const auto shifted = RepRingElement::monomial(p, 1, -1, 0) - RepRingElement::constant(p, 1) - T;
  CHECK(extract_sw(shifted, 3, 0) == 1);
}

TEST_CASE("trace formula right-hand side") {
  CHECK(tom_dieck_rhs({3, 0, 0}, {2, 0, 0}, 1, 3).to_rational() == 2);
  CHECK(tom_dieck_rhs({3, 0, 0}, {0, 1, 1}, 1, 3).to_rational() == 8);
  CHECK(tom_dieck_rhs({3, 0, 0}, {0, 1, 1}, 2, 3).to_rational() == 8);
  CHECK(tom_dieck_norm({3, 0, 0}, {2, 0, 0}, 3) == 1);
  CHECK(tom_dieck_norm({3, 0, 0}, {3, -1, 0}, 3) == mpq_class(1, 4));
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (long k0 = -2; k0 <= 4; ++k0) {
      std::vector<long> t(p, 0), k(p, 0);
      t[0] = 3;
      k[0] = k0;
      k[1] = 2 - k0;
      const mpq_class norm = tom_dieck_norm(t, k, p);
      // 2^((p-1)(2-k0))
      mpq_class want = 1;
      for (std::uint32_t j = 1; j < p; ++j) {
        for (long e = 0; e < std::abs(2 - k0); ++e) want *= (2 - k0 >= 0 ? mpq_class(2) : mpq_class(1, 2));
      }
      CHECK(norm == want);
      CHECK((norm.get_den() == 1) == (k0 <= 2));
    }
  }
  CHECK(tom_dieck_schedule_discrepancies(3).empty());
  CHECK(tom_dieck_schedule_discrepancies(5) == std::vector<std::uint32_t>{2, 3});
  CHECK(tom_dieck_rhs({3, 0, 0}, {0, 1, 1}, 1, 3, TomDieckSchedule::Character) ==
        tom_dieck_rhs({3, 0, 0}, {0, 1, 1}, 1, 3, TomDieckSchedule::AsPrinted));
}
