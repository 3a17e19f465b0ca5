#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqspin/errors.hpp"
#include "eqspin/rigidity.hpp"

using namespace eqspin;

namespace {

FixedPointDataset trivial_k3() {
  FixedPointDataset d;
  d.p = 3;
  d.manifold = ManifoldInvariants::k3();
  d.quotient_b_plus = 3;
  d.homologically_trivial = true;
  return d;
}

// Points of type (1,1) and spheres with even half-weights, sized so that
// chi and sigma of the quotient match a trivial action.
FixedPointDataset trivial_with(long f1, long f2, std::vector<long> sphere_ff) {
  auto d = trivial_k3();
  for (long i = 0; i < f1; ++i) d.isolated.push_back({1, 2, -1});
  for (long i = 0; i < f2; ++i) d.isolated.push_back({1, 1, 1});
  for (long ff : sphere_ff) d.surfaces.push_back({ff, 0, 2, 1});
  return d;
}

bool has_anchor(const RigidityVerdict& v, const std::string& anchor) {
  return std::any_of(v.reasons.begin(), v.reasons.end(), [&](const Reason& r) { return r.anchor == anchor; });
}

KVector kv(std::vector<mpz_class> k) { return KVector{static_cast<std::uint32_t>(k.size()), std::move(k)}; }

SpinClass rational_class(const mpq_class& q) { return classify_spin(CyclotomicNumber::rational(1, q)); }

}  // namespace

TEST_CASE("spin classification") {
  auto two = rational_class(2);
  CHECK(two.rational);
  CHECK(two.value == 2);
  CHECK(two.sign == SpinSign::Positive);
  CHECK(rational_class(-16).sign == SpinSign::Negative);
  CHECK(rational_class(0).sign == SpinSign::Zero);

  // csc(pi/5)^2 is irrational
  const auto c = half_angle_csc(1, 5);
  const auto irr = classify_spin(c * c);
  CHECK_FALSE(irr.rational);
  CHECK(irr.sign == SpinSign::UnknownIrrational);
  CHECK(irr.estimate.rfind("2.894", 0) == 0);

  CHECK_THROWS_AS(classify_spin(CyclotomicNumber::zeta(3)), InvalidParameters);
  CHECK(spin_sign_from_string(to_string(SpinSign::NonReal)) == SpinSign::NonReal);
}

TEST_CASE("k-vector constraints") {
  CHECK(check_k_constraints(kv({2, 0, 0}), rational_class(2), 3).empty());

  const auto big = check_k_constraints(kv({-10, 6, 6}), rational_class(-16), 3);
  REQUIRE_FALSE(big.empty());
  CHECK(big[0].anchor == "k-bound");
  CHECK(big[0].detail == "k_1 = 6 > 2");

  CHECK(check_k_constraints(kv({0, 1, 1}), rational_class(-1), 3).empty());
  CHECK(check_k_constraints(kv({-2, 2, 2}), rational_class(-4), 3).empty());
  CHECK_FALSE(check_k_constraints(kv({0, 1, 1}), rational_class(1), 3).empty());
  CHECK_FALSE(check_k_constraints(kv({2, 0, 0}), rational_class(-1), 3).empty());

  // the lemmas only apply when b_plus of the quotient is 3
  CHECK(check_k_constraints(kv({0, 1, 1}), rational_class(1), 5).empty());
  CHECK_FALSE(check_k_constraints(kv({0, 1, 1}), rational_class(-1), 1).empty());
}

TEST_CASE("for rational spin exactly one sign pattern survives") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (long k0 = -12; k0 <= 2; ++k0) {
      if ((2 - k0) % static_cast<long>(p - 1) != 0) continue;
      KVector k{p, std::vector<mpz_class>(p, (2 - k0) / static_cast<long>(p - 1))};
      k.k[0] = k0;
      const auto s = classify_spin(synthesize(k).values[1]);
      REQUIRE(s.rational);
      const bool clean = check_k_constraints(k, s, 3).empty();
      const bool nonneg_pattern = k0 == 2;
      const bool neg_pattern = k0 <= 0 && k.k[1] >= 1 && k.k[1] <= 2;
      CHECK(clean == (nonneg_pattern || neg_pattern));
      CHECK_FALSE((nonneg_pattern && neg_pattern));
      if (p == 3) {
        // 3 k_0 = -sigma/8 + 2 Spin
        CHECK(3 * mpq_class(k0) == 2 + 2 * s.value);
      }
    }
  }
}

TEST_CASE("lift sweep") {
  const auto sweep = lift_sweep(kv({2, 0, 0}), 3);
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].k == kv({2, 0, 0}));
  CHECK(sweep[1].k == kv({0, 0, 2}));
  CHECK(sweep[2].k == kv({0, 2, 0}));
  CHECK(sweep[0].spin.sign == SpinSign::Positive);
  CHECK(sweep[0].trace_norm == 1);
  for (const auto& e : sweep) CHECK(e.k.sum() == 2);
  CHECK(sweep[1].spin.sign == SpinSign::NonReal);

  for (const auto& e : lift_sweep(kv({-10, 6, 6}), 3)) {
    CHECK_FALSE(check_k_constraints(e.k, e.spin, 3).empty());
  }
  // k_0 above t_0 - 1 gives a fractional norm
  CHECK(lift_sweep(kv({3, -1, 0}), 3)[0].trace_norm.get_den() != 1);
}

TEST_CASE("Adams kernel verification on the negative-spin instance") {
  InstanceParameters params{3, {2, 2, 2}, {2, 1, 1}, 1, 0, std::nullopt};
  const auto r = verify_prop41(params);
  CHECK(r.hypotheses_met);
  CHECK(r.dimension == 18);
  CHECK(r.kernel_rank == 1);
  CHECK(r.top_in_kernel);
  CHECK(r.spanned_by_top);
  CHECK(r.scalar.forces_zero);
  CHECK(r.a_forced_zero);
  REQUIRE(r.sw_value);
  CHECK(*r.sw_value == 0);

  InstanceParameters bad{3, {2, 2, 2}, {2, 2, 1}, 1, 0, std::nullopt};
  CHECK_THROWS_AS(verify_prop41(bad), InvalidParameters);

  InstanceParameters trivial{3, {2, 0, 0}, {0, 0, 0}, 1, 0, std::nullopt};
  const auto t = verify_prop41(trivial);
  CHECK_FALSE(t.hypotheses_met);
  CHECK(t.note.find("hypotheses not met") != std::string::npos);
  CHECK(t.note.find("trivial action") != std::string::npos);

  const auto derived = derive_prop41_parameters(kv({0, 1, 1}), 1);
  CHECK(derived.m == params.m);
  CHECK(derived.n == params.n);
  CHECK(derived.l == 1);
  CHECK_THROWS_AS(derive_prop41_parameters(kv({0, 1, 1}), 2), InvalidParameters);
  const auto padded = derive_prop41_parameters(kv({1, 1, 1}), 1, 1);
  CHECK(padded.m[0] >= 1);
  CHECK(padded.k_vector() == std::vector<long>{1, 1, 1});
}

TEST_CASE("Adams kernel verification for larger primes") {
  for (std::uint32_t p : {5u, 7u}) {
    KVector k{p, std::vector<mpz_class>(p, 1)};
    k.k[0] = 2 - static_cast<long>(p - 1);
    const auto r = verify_prop41(derive_prop41_parameters(k, 1));
    CHECK(r.hypotheses_met);
    CHECK(r.spanned_by_top);
    CHECK(r.a_forced_zero);
  }
}

TEST_CASE("pseudofree enumeration") {
  using Pairs = std::vector<std::pair<long, long>>;
  CHECK(enumerate_pseudofree_p3(3, false) == Pairs{{0, 12}, {3, 6}, {6, 0}});
  CHECK(enumerate_pseudofree_p3(1, false) == Pairs{{0, 3}});
  CHECK(enumerate_pseudofree_p3(3, true).empty());
  for (long b : {1L, 3L}) {
    for (auto [f1, f2] : enumerate_pseudofree_p3(b, false)) CHECK(((f1 - f2) % 9 + 9) % 9 == 6);
  }
  CHECK_THROWS_AS(enumerate_pseudofree_p3(2, false), InvalidParameters);
  CHECK_THROWS_AS(enumerate_pseudofree_p3(5, false), InvalidParameters);
  CHECK_THROWS_AS(enumerate_pseudofree_p3(1, true), InvalidParameters);
}

TEST_CASE("verdict on the Fermat quartic") {
  const auto v = verdict(fermat_quartic_dataset());
  CHECK(v.outcome == Outcome::NoObstruction);
  CHECK(v.spin.value == 2);
  CHECK(v.k == kv({2, 0, 0}));
  REQUIRE(v.quotient);
  CHECK(v.quotient->sigma == -4);
  CHECK(v.quotient->euler == 12);
  CHECK(v.quotient->integral);
  CHECK(has_anchor(v, "nontrivial-on-h2"));
}

TEST_CASE("verdicts on homologically trivial data") {
  auto six = fermat_quartic_dataset();
  six.homologically_trivial = true;
  const auto v6 = verdict(six);
  CHECK(v6.outcome == Outcome::ConstraintViolation);
  CHECK(has_anchor(v6, "trivial-signature"));
  CHECK(has_anchor(v6, "lefschetz-number"));

  // f1 - f2 = -8 with spheres: spin -1, k = (0, 1, 1)
  const auto neg = verdict(trivial_with(0, 8, {-2, -2, -2, -1, -1, -1, -1, 0}));
  CHECK(neg.outcome == Outcome::Contradiction);
  CHECK(neg.spin.value == -1);
  CHECK(neg.k == kv({0, 1, 1}));
  CHECK(neg.kernel_rank == std::size_t{1});
  CHECK(neg.sw_value == mpz_class(0));
  CHECK(has_anchor(neg, "morgan-szabo"));

  // f1 = f2 = 0 with twelve spheres: spin 2, the equal-count branch
  const auto eq = verdict(trivial_with(0, 0, std::vector<long>(12, -1)));
  CHECK(eq.outcome == Outcome::Contradiction);
  CHECK(eq.spin.value == 2);
  CHECK(has_anchor(eq, "sphere-sign-branch"));

  // f1 - f2 = -16: k = (-2, 2, 2) and the lift exclusion
  const auto ex = verdict(trivial_with(0, 16, {-2, -2, -2, -2}));
  CHECK(ex.outcome == Outcome::Contradiction);
  CHECK(ex.k == kv({-2, 2, 2}));
  CHECK(ex.kernel_rank == std::size_t{3});
  CHECK(has_anchor(ex, "lift-exclusion"));

  // a trivial sphere with positive self-intersection breaks adjunction
  const auto adj = verdict(trivial_with(0, 0, {1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
  CHECK(adj.outcome == Outcome::ConstraintViolation);
  CHECK(has_anchor(adj, "adjunction"));

  // the free action
  CHECK(verdict(trivial_k3()).outcome == Outcome::ConstraintViolation);
}

TEST_CASE("negative rational spin with b_plus of the quotient 3 rules out a nontrivial action") {
  auto d = trivial_with(0, 8, {-2, -2, -2, -1, -1, -1, -1, 0});
  d.homologically_trivial = false;
  const auto v = verdict(d);
  CHECK(v.outcome == Outcome::ConstraintViolation);
  CHECK(has_anchor(v, "self-dual-trivial"));
}

TEST_CASE("odd residues cannot come from an order-p lift") {
  auto d = fermat_quartic_dataset();
  d.isolated[0].epsilon = 1;
  const auto v = verdict(d);
  CHECK(v.outcome == Outcome::ConstraintViolation);
  CHECK(has_anchor(v, "even-type-lift"));
}

TEST_CASE("irrational spins reach no conclusion") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> rot(1, 4), count(0, 6);
  int seen = 0;
  for (int rep = 0; rep < 4000 && seen < 5; ++rep) {
    FixedPointDataset d;
    d.p = 5;
    d.manifold = ManifoldInvariants::k3();
    d.quotient_b_plus = 3;
    for (long i = count(rng); i > 0; --i) {
      IsolatedPoint pt{rot(rng), rot(rng), 1};
      pt.epsilon = (pt.l_alpha + pt.l_beta) % 2 == 0 ? 1 : -1;
      d.isolated.push_back(pt);
    }
    const auto v = verdict(d);
    if (v.spin.rational || !v.k) continue;
    if (v.outcome == Outcome::ConstraintViolation) continue;
    ++seen;
    CHECK(v.outcome == Outcome::NoObstruction);
    CHECK(v.spin.sign == SpinSign::UnknownIrrational);
    CHECK(has_anchor(v, "rationality"));
  }
  CHECK(seen > 0);
}

TEST_CASE("verdict reports round-trip through JSON") {
  for (const auto& d : {fermat_quartic_dataset(), trivial_with(0, 8, {-2, -2, -2, -1, -1, -1, -1, 0}),
                        trivial_with(0, 16, {-2, -2, -2, -2})}) {
    const auto v = verdict(d);
    const Json j = verdict_to_json(v);
    CHECK(j.at("outcome").is_string());
    CHECK(j.at("spin").contains("sign"));
    const auto back = verdict_from_json(Json::parse(j.dump()));
    CHECK(verdict_to_json(back) == j);
    CHECK(back.outcome == v.outcome);
    CHECK(back.k == v.k);
    CHECK(back.reasons == v.reasons);
    CHECK(back.lift_sweep == v.lift_sweep);
    CHECK(verdict_to_text(back) == verdict_to_text(v));
  }
  const auto c = half_angle_csc(2, 7);
  CHECK(cyclotomic_from_json(cyclotomic_to_json(c)) == c);
}
