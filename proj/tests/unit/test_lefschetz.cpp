#include <doctest.h>

#include <random>

#include "eqspin/errors.hpp"
#include "eqspin/lefschetz.hpp"

using namespace eqspin;

namespace {

FixedPointDataset k3_base(std::uint32_t p = 3) {
  FixedPointDataset d;
  d.p = p;
  d.manifold = ManifoldInvariants::k3();
  d.quotient_b_plus = 3;
  return d;
}

// Rotation data drawn at random; the sign is the one of an order-p lift
// unless `any_sign` is set.
FixedPointDataset random_dataset(std::uint32_t p, std::mt19937& rng, bool any_sign) {
  std::uniform_int_distribution<long> rot(1, p - 1), count(0, 5), ff(-6, 2), genus(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  auto d = k3_base(p);
  for (long i = count(rng); i > 0; --i) {
    IsolatedPoint pt{rot(rng), rot(rng), 1};
    pt.epsilon = any_sign ? (coin(rng) ? 1 : -1) : ((pt.l_alpha + pt.l_beta) % 2 == 0 ? 1 : -1);
    d.isolated.push_back(pt);
  }
  for (long i = count(rng) / 2; i > 0; --i) {
    FixedSurface s{ff(rng), genus(rng), rot(rng), 1};
    s.epsilon = any_sign ? (coin(rng) ? 1 : -1) : (s.l_theta % 2 == 0 ? 1 : -1);
    d.surfaces.push_back(s);
  }
  return d;
}

CyclotomicNumber rational(const mpq_class& q) { return CyclotomicNumber::rational(1, q); }

}  // namespace

TEST_CASE("spin numbers of reference datasets") {
  CHECK(spin_number(fermat_quartic_dataset(), 1) == rational(2));
  CHECK(spin_number(fermat_quartic_dataset(), 2) == rational(2));
  CHECK(spin_number_direct(fermat_quartic_dataset()) == rational(2));
  CHECK(spin_number(k3_base(), 1) == rational(0));

  auto sphere = k3_base();
  sphere.surfaces = {{-2, 0, 1, 1}};
  CHECK(spin_number(sphere, 1) == rational(mpq_class(-1, 3)));
  CHECK(spin_number_direct(sphere) == rational(mpq_class(-1, 3)));
  CHECK_THROWS_AS(spin_number(sphere, 3), InvalidParameters);
}

TEST_CASE("spin index") {
  CHECK(spin_index(ManifoldInvariants::k3()) == 2);
  ManifoldInvariants m;
  m.b_plus = 0;
  m.signature = 0;
  m.euler = 2;
  CHECK(spin_index(m) == 0);
  m.signature = -32;
  CHECK(spin_index(m) == 4);
  m.signature = -12;
  CHECK_THROWS_AS(spin_index(m), InvalidParameters);
}

TEST_CASE("k-vector inversion") {
  SpinNumberTuple s{3, {rational(2), rational(2), rational(2)}};
  CHECK(k_vector(s) == KVector{3, {2, 0, 0}});
  s.values = {rational(2), rational(-16), rational(-16)};
  CHECK(k_vector(s) == KVector{3, {-10, 6, 6}});
  s.values = {rational(2), rational(1), rational(1)};
  CHECK_THROWS_AS(k_vector(s), NonIntegralKVector);

  CHECK(k_vector(spin_tuple(fermat_quartic_dataset())) == KVector{3, {2, 0, 0}});

  std::mt19937 rng(17);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::uniform_int_distribution<long> entry(-6, 6);
    for (int rep = 0; rep < 30; ++rep) {
      KVector k{p, std::vector<mpz_class>(p)};
      mpz_class rest = 0;
      for (std::uint32_t i = 1; i < p; ++i) {
        k.k[i] = entry(rng);
        rest += k.k[i];
      }
      k.k[0] = 2 - rest;
      CHECK(k_vector(synthesize(k)) == k);
    }
  }
}

TEST_CASE("equal defects give the closed-form spin") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (long k0 = -8; k0 <= 2; ++k0) {
      KVector k{p, std::vector<mpz_class>(p, 3)};
      k.k[0] = k0;
      const auto spins = synthesize(k);
      CHECK(spins.values[1] == rational(equal_defect_spin(p, k0, k.sum())));
      // with total 2 this is p k0/(p-1) - 2/(p-1)
      if (k.sum() == 2) CHECK(equal_defect_spin(p, k0, 2) == ratio(p * k0 - 2, p - 1));
    }
  }
}

TEST_CASE("realness, power symmetry and p = 3 rationality on random data") {
  std::mt19937 rng(29);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int rep = 0; rep < 25; ++rep) {
      const auto lift = random_dataset(p, rng, false);
      const auto any = random_dataset(p, rng, true);
      for (std::uint32_t j = 1; j < p; ++j) {
        const auto s = spin_number(lift, j);
        CHECK(s.is_real());
        CHECK(s == spin_number(lift, p - j));
        CHECK(spin_number(any, j).is_real());
      }
      CHECK(spin_number(any, 1) == spin_number_direct(any));
      if (p == 3) {
        // Spin = sum_points (-eps)/3 + sum_surfaces (+-1/6) eps <F,F>
        mpq_class oracle = 0;
        for (const auto& pt : any.isolated) oracle -= ratio(pt.epsilon, 3);
        for (const auto& sf : any.surfaces) {
          oracle += ratio(sf.self_intersection * sf.epsilon * (sf.l_theta == 1 ? 1 : -1), 6);
        }
        const auto s = spin_number(any, 1);
        REQUIRE(s.is_rational());
        CHECK(s.to_rational() == oracle);
      }
    }
  }
}

TEST_CASE("quotient signature and Euler characteristic for p = 3") {
  const auto fermat = fermat_quartic_dataset();
  CHECK(signature_quotient_p3(fermat) == -4);
  CHECK(euler_quotient_p3(fermat) == 12);
  const auto free_action = k3_base();
  CHECK(signature_quotient_p3(free_action) == mpq_class(-16, 3));
  CHECK(euler_quotient_p3(free_action) == 8);
  auto sphere = k3_base();
  sphere.surfaces = {{6, 0, 1, 1}};
  CHECK(signature_quotient_p3(sphere) == 0);
  CHECK(euler_quotient_p3(sphere) == mpq_class(28, 3));
  CHECK_THROWS_AS(signature_quotient_p3(k3_base(5)), InvalidParameters);
  CHECK(euler_quotient(k3_base(5)) == mpq_class(24, 5));
}
