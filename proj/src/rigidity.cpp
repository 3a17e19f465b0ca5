#include "eqspin/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eqspin/errors.hpp"

namespace eqspin {
namespace {

std::string vec_string(const std::vector<mpz_class>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

SpinClass classify_any(const CyclotomicNumber& s, unsigned bits) {
  SpinClass c;
  if (!s.is_real()) {
    c.sign = SpinSign::NonReal;
    c.estimate = numeric_real_part(s, bits);
    return c;
  }
  if (!s.is_rational()) {
    c.sign = SpinSign::UnknownIrrational;
    c.estimate = numeric_real_part(s, bits);
    return c;
  }
  c.rational = true;
  c.value = s.to_rational();
  c.sign = c.value < 0 ? SpinSign::Negative : (c.value == 0 ? SpinSign::Zero : SpinSign::Positive);
  return c;
}

std::string spin_phrase(const SpinClass& s) {
  if (s.rational) return s.value.get_str() + " (" + to_string(s.sign) + ")";
  return "~" + s.estimate + " (" + to_string(s.sign) + ")";
}

mpz_class json_integer(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.dump());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer in report");
}

mpq_class json_rational(const Json& j) {
  if (j.is_number_integer()) return mpq_class(json_integer(j));
  mpq_class q(j.get<std::string>());
  q.canonicalize();
  return q;
}

Json spin_class_to_json(const SpinClass& s) {
  Json j;
  j["rational"] = s.rational;
  j["value"] = s.rational ? Json(s.value.get_str()) : Json(nullptr);
  j["sign"] = to_string(s.sign);
  if (!s.rational) j["estimate"] = s.estimate;
  return j;
}

SpinClass spin_class_from_json(const Json& j) {
  SpinClass s;
  s.rational = j.at("rational").get<bool>();
  if (s.rational) s.value = json_rational(j.at("value"));
  s.sign = spin_sign_from_string(j.at("sign").get<std::string>());
  if (j.contains("estimate")) s.estimate = j.at("estimate").get<std::string>();
  return s;
}

Json kvector_to_json(const KVector& k) {
  Json arr = Json::array();
  for (const auto& x : k.k) arr.push_back(integer_to_json(x));
  return arr;
}

KVector kvector_from_json(const Json& j) {
  KVector k;
  k.p = static_cast<std::uint32_t>(j.size());
  for (const auto& x : j) k.k.push_back(json_integer(x));
  return k;
}

}  // namespace

std::string to_string(SpinSign s) {
  switch (s) {
    case SpinSign::Negative: return "negative";
    case SpinSign::Zero: return "zero";
    case SpinSign::Positive: return "positive";
    case SpinSign::UnknownIrrational: return "unknown-irrational";
    case SpinSign::NonReal: return "non-real";
  }
  return "unknown-irrational";
}

SpinSign spin_sign_from_string(const std::string& s) {
  for (auto v : {SpinSign::Negative, SpinSign::Zero, SpinSign::Positive, SpinSign::UnknownIrrational,
                 SpinSign::NonReal}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown spin sign '" + s + "'");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Contradiction: return "Contradiction";
    case Outcome::ConstraintViolation: return "ConstraintViolation";
    case Outcome::NoObstruction: return "NoObstruction";
  }
  return "NoObstruction";
}

Outcome outcome_from_string(const std::string& s) {
  for (auto v : {Outcome::Contradiction, Outcome::ConstraintViolation, Outcome::NoObstruction}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

SpinClass classify_spin(const CyclotomicNumber& s, unsigned precision_bits) {
  if (!s.is_real()) throw InvalidParameters("classify_spin: spin number " + s.to_string() + " is not real");
  return classify_any(s, precision_bits);
}

std::vector<Reason> check_k_constraints(const KVector& k, const SpinClass& s, const mpz_class& quotient_b_plus) {
  std::vector<Reason> out;
  const mpz_class bound = quotient_b_plus - 1;
  for (std::size_t i = 0; i < k.k.size(); ++i) {
    if (k.k[i] > bound) {
      out.push_back({"k-bound", "k_" + std::to_string(i) + " = " + k.k[i].get_str() + " > " + bound.get_str()});
    }
  }
  if (quotient_b_plus != 3 || k.sum() != 2 || !s.rational || k.k.empty()) return out;
  const std::size_t p = k.k.size();
  if (s.value >= 0) {
    std::vector<mpz_class> expected(p, 0);
    expected[0] = 2;
    if (k.k != expected) {
      out.push_back({"nonnegative-spin-pattern",
                     "rational non-negative spin needs k = " + vec_string(expected) + ", got " + k.to_string()});
    }
    return out;
  }
  if (k.k[0] > 0) out.push_back({"negative-spin-pattern", "rational negative spin needs k_0 <= 0, got " + k.k[0].get_str()});
  const mpq_class common = ratio(2 - k.k[0], p - 1);
  for (std::size_t i = 1; i < p; ++i) {
    if (mpq_class(k.k[i]) != common) {
      out.push_back({"negative-spin-pattern", "rational negative spin needs k_" + std::to_string(i) + " = (2 - k_0)/(p - 1) = " +
                                                  common.get_str() + ", got " + k.k[i].get_str()});
    }
  }
  if (common < 1) {
    out.push_back({"negative-spin-pattern", "(2 - k_0)/(p - 1) = " + common.get_str() + " must be at least 1"});
  }
  mpz_class head = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) head += k.k[i];
  if (head != 2 - k.k[p - 1] || head < 0) {
    out.push_back({"negative-spin-pattern",
                   "k_0 + ... + k_(p-2) = " + head.get_str() + " must equal 2 - k_(p-1) and be non-negative"});
  }
  return out;
}

std::vector<LiftSweepEntry> lift_sweep(const KVector& k, const mpz_class& quotient_b_plus) {
  std::vector<LiftSweepEntry> out;
  const std::uint32_t p = k.p;
  std::vector<long> t(p, 0);
  t[0] = quotient_b_plus.get_si();
  for (std::uint32_t q = 0; q < p; ++q) {
    LiftSweepEntry e;
    e.q = q;
    e.k.p = p;
    for (std::uint32_t i = 0; i < p; ++i) e.k.k.push_back(k.k[(i + q) % p]);
    e.spin = classify_any(synthesize(e.k).values[1], 64);
    std::vector<long> kl;
    for (const auto& x : e.k.k) kl.push_back(x.get_si());
    e.trace_norm = tom_dieck_norm(t, kl, p);
    out.push_back(std::move(e));
  }
  return out;
}

InstanceParameters derive_prop41_parameters(const KVector& k, std::uint32_t l, std::uint32_t d) {
  if (k.sum() != static_cast<long>(l) + 1 + static_cast<long>(d)) {
    throw InvalidParameters("sum of k_i = " + k.sum().get_str() + " must equal l + 1 + d = " +
                            std::to_string(l + 1 + d));
  }
  InstanceParameters params;
  params.p = k.p;
  params.l = l;
  params.d = d;
  for (const auto& ki : k.k) {
    const mpz_class n = ki >= 2 ? mpz_class(0) : mpz_class(2 - ki);
    const mpz_class m = n + ki;
    if (!n.fits_uint_p() || !m.fits_uint_p()) throw InvalidParameters("k-vector entry out of range");
    params.n.push_back(static_cast<std::uint32_t>(n.get_ui()));
    params.m.push_back(static_cast<std::uint32_t>(m.get_ui()));
  }
  if (params.m[0] < d) {
    const std::uint32_t pad = d - params.m[0];
    params.m[0] += pad;
    params.n[0] += pad;
  }
  params.validate();
  return params;
}

Prop41Report verify_prop41(const InstanceParameters& params, std::vector<std::uint32_t> qs) {
  params.validate();
  Prop41Report r;
  const auto k = params.k_vector();
  const bool equal_rest = std::all_of(k.begin() + 1, k.end(), [&](long x) { return x == k[1]; });
  if (params.l == 0 || k[0] > static_cast<long>(params.l) || !equal_rest) {
    r.note = "hypotheses not met (need l >= 1, k_0 <= l and k_1 = ... = k_(p-1)); no conclusion";
    std::vector<long> trivial(params.p, 0);
    trivial[0] = 2;
    if (k == trivial) r.note += "; these defects are exactly those of the trivial action";
    return r;
  }
  r.hypotheses_met = true;
  const AdamsKernel kernel = solve_adams_kernel(params, qs);
  const TruncationIdeal ideal = params.ideal();
  const RepRingElement top = norm_element_top(params);
  r.kernel_rank = kernel.rank();
  r.dimension = kernel.dimension;
  r.top_in_kernel = kernel.contains(top, ideal);
  r.spanned_by_top = kernel.rank() == 1 && (kernel.basis[0] == top || kernel.basis[0] == -top);
  r.scalar = specialize_scalar_constraint(params, params.p);
  if (r.spanned_by_top) {
    r.a_forced_zero = r.scalar.forces_zero;
    if (r.a_forced_zero) {
      const long m = static_cast<long>(std::accumulate(params.m.begin(), params.m.end(), 0U));
      r.sw_value = extract_sw(top * mpz_class(0), m, params.d);
      r.note = "beta = a sigma (1-t)^" + std::to_string(ideal.degree() - 1) + " and a = 0, so SW = 0";
    } else {
      r.note = "beta = a sigma (1-t)^" + std::to_string(ideal.degree() - 1) + " with a unconstrained";
    }
  } else {
    r.note = "Adams kernel has rank " + std::to_string(kernel.rank()) + "; it is not spanned by sigma (1-t)^(M-1)";
  }
  return r;
}

std::vector<std::pair<long, long>> enumerate_pseudofree_p3(const mpz_class& quotient_b_plus, bool homologically_trivial,
                                                           const ManifoldInvariants& manifold) {
  if (quotient_b_plus < 0 || quotient_b_plus > manifold.b_plus || (manifold.b_plus - quotient_b_plus) % 2 != 0) {
    throw InvalidParameters("quotient_b_plus = " + quotient_b_plus.get_str() + " is impossible for b_plus = " +
                            manifold.b_plus.get_str() + " (need 0 <= b_plus(X/Z_3) <= b_plus with equal parity)");
  }
  if (homologically_trivial && quotient_b_plus != manifold.b_plus) {
    throw InvalidParameters("a homologically trivial action has quotient_b_plus = b_plus");
  }
  if (!manifold.euler.fits_slong_p()) throw InvalidParameters("Euler characteristic out of range");
  const long cap = manifold.euler.get_si();
  // 9 sigma_q = 3 sigma + 2 D and 3 chi_q = chi + 2(f1 + f2), with
  // chi_q = 2 + 2 b_plus_q - sigma_q, give 8 f1 + 4 f2 = 18 (b_plus_q + 1) - 3 (sigma + chi)
  const mpz_class rhs = 18 * (quotient_b_plus + 1) - 3 * (manifold.signature + manifold.euler);
  std::vector<std::pair<long, long>> out;
  for (long f1 = 0; f1 <= cap; ++f1) {
    for (long f2 = 0; f2 <= cap; ++f2) {
      if (8 * f1 + 4 * f2 != rhs) continue;
      const mpz_class diff = f1 - f2;
      mpz_class nine_sigma = 3 * manifold.signature + 2 * diff;
      if (nine_sigma % 9 != 0) continue;
      if ((manifold.euler + 2 * (f1 + f2)) % 3 != 0) continue;
      if (homologically_trivial && diff != 3 * manifold.signature) continue;
      out.emplace_back(f1, f2);
    }
  }
  return out;
}

namespace {

// Steps from a negative rational spin to the vanishing of SW; true when
// the chain reaches a conclusion (SW = 0, or the case is excluded).
bool sw_vanishing_chain(const KVector& k, std::uint32_t l, const VerdictOptions& options,
                        std::vector<Reason>& reasons, RigidityVerdict& v, bool& excluded) {
  excluded = false;
  InstanceParameters params;
  try {
    params = derive_prop41_parameters(k, l);
  } catch (const InvalidParameters& e) {
    reasons.push_back({"prop41-hypotheses", e.what()});
    return false;
  }
  const Prop41Report report = verify_prop41(params, options.adams_qs);
  std::ostringstream hyp;
  hyp << "instance m = " << vec_string({params.m.begin(), params.m.end()})
      << ", n = " << vec_string({params.n.begin(), params.n.end()}) << ", l = " << l << ", d = 0";
  if (!report.hypotheses_met) {
    reasons.push_back({"prop41-hypotheses", hyp.str() + ": " + report.note});
    return false;
  }
  reasons.push_back({"prop41-hypotheses", hyp.str() + ": k_0 = " + k.k[0].get_str() + " <= l and k_1 = ... = k_(p-1)"});
  v.kernel_rank = report.kernel_rank;
  std::string qlist;
  for (auto q : options.adams_qs) qlist += (qlist.empty() ? "" : ",") + std::to_string(q);
  reasons.push_back({"adams-kernel", "integer kernel of the Adams constraint (q = " + qlist + ") on the " +
                                         std::to_string(report.dimension) + "-dimensional coefficient space has rank " +
                                         std::to_string(report.kernel_rank) +
                                         (report.spanned_by_top ? ", spanned by sigma (1-t)^(M-1)" : "")});
  if (report.spanned_by_top) {
    reasons.push_back({"scalar-specialization",
                       "xi -> 1, q = p: " + report.scalar.lhs.to_string("t") + " = " + report.scalar.rhs.to_string("t") +
                           (report.a_forced_zero ? " cannot hold for a != 0, so a = 0" : " holds for every a")});
    if (!report.a_forced_zero) return false;
    v.sw_value = *report.sw_value;
    reasons.push_back({"sw-extraction", "beta = 0, so the coefficient of T^(m-d-1) gives SW(trivial spin^c) = " +
                                            report.sw_value->get_str()});
    return true;
  }
  // Rank above one happens when k_1 = ... = 2; the argument then passes to
  // the lift e^(2 pi i/p) tau-hat, whose defect vector has k_0 = 2.
  if (k.k.size() > 1 && k.k[1] == 2) {
    KVector shifted{k.p, {}};
    for (std::size_t i = 0; i < k.k.size(); ++i) shifted.k.push_back(k.k[(i + 1) % k.k.size()]);
    reasons.push_back({"lift-exclusion",
                       "the kernel is larger than the norm line, but k_1 = 2: the lift e^(2 pi i/p) tau-hat has defects " +
                           shifted.to_string() +
                           " with k_0 = 2, which the non-negative spin pattern only allows as (2, 0, ..., 0); "
                           "this case cannot occur"});
    excluded = true;
    return true;
  }
  reasons.push_back({"adams-kernel", "no conclusion: " + report.note});
  return false;
}

}  // namespace

RigidityVerdict verdict(const FixedPointDataset& d, const VerdictOptions& options) {
  d.validate();
  RigidityVerdict v;
  bool violated = false;
  bool contradiction = false;
  auto note = [&](std::string anchor, std::string detail) { v.reasons.push_back({std::move(anchor), std::move(detail)}); };
  auto violation = [&](std::string anchor, std::string detail) {
    violated = true;
    v.reasons.push_back({std::move(anchor), std::move(detail) + " [violated]"});
  };
  const std::uint32_t p = d.p;
  const bool k3 = d.manifold.is_homotopy_k3();
  const mpz_class& qbp = d.quotient_b_plus;

  // local data
  const HalfWeightData hw = normalize_half_weights(d);
  for (std::size_t i = 0; i < hw.points.size(); ++i) {
    if (!is_even_type_lift(hw.points[i])) {
      const auto& pt = d.isolated[i];
      violation("even-type-lift", "isolated[" + std::to_string(i) + "] = (" + std::to_string(pt.l_alpha) + ", " +
                                      std::to_string(pt.l_beta) + ", " + std::to_string(pt.epsilon) +
                                      ") has half-weights (" + std::to_string(hw.points[i].a) + ", " +
                                      std::to_string(hw.points[i].b) + ") with odd sum, so no lift of order p has this sign");
    }
  }
  for (std::size_t i = 0; i < hw.surfaces.size(); ++i) {
    if (!is_even_type_lift(hw.surfaces[i])) {
      violation("even-type-lift", "surfaces[" + std::to_string(i) + "] has odd half-weight " +
                                      std::to_string(hw.surfaces[i].c) + ", so no lift of order p has this sign");
    }
  }
  if (qbp > d.manifold.b_plus || (d.manifold.b_plus - qbp) % 2 != 0) {
    violation("quotient-b-plus", "b_plus(X/Z_p) = " + qbp.get_str() + " must be at most b_plus = " +
                                     d.manifold.b_plus.get_str() + " and of the same parity");
  }
  if (k3) {
    for (std::size_t i = 0; i < d.surfaces.size(); ++i) {
      const auto& s = d.surfaces[i];
      if (s.genus == 0 && s.self_intersection > 0) {
        violation("adjunction", "surfaces[" + std::to_string(i) + "] is a sphere with <F,F> = " +
                                    s.self_intersection.get_str() + " > 0");
      }
      if (d.homologically_trivial && s.genus > 0) {
        violation("fixed-spheres", "surfaces[" + std::to_string(i) + "] has genus " + s.genus.get_str() +
                                       ", but fixed surfaces of a homologically trivial action are spheres");
      }
    }
  }

  // spin numbers for every power
  const SpinNumberTuple tuple = spin_tuple(d);
  v.spin_value = tuple.values[1];
  bool real = true, symmetric = true;
  for (std::uint32_t j = 1; j < p; ++j) {
    if (!tuple.values[j].is_real()) {
      real = false;
      violation("realness", "Spin(tau-hat^" + std::to_string(j) + ") = " + tuple.values[j].to_string() + " is not real");
    }
    if (!(tuple.values[j] == tuple.values[p - j])) symmetric = false;
  }
  if (!symmetric) {
    violation("power-symmetry", "Spin(tau-hat^j) and Spin(tau-hat^(p-j)) differ");
  } else if (real) {
    note("power-symmetry", "Spin(tau-hat^j) is real and equals Spin(tau-hat^(p-j)) for j = 1..p-1");
  }
  v.spin = real ? classify_spin(tuple.values[1], options.precision_bits) : classify_any(tuple.values[1], options.precision_bits);
  note("spin-number", "Spin(tau-hat, X) = " + spin_phrase(v.spin));
  if (v.spin.sign == SpinSign::Zero) {
    // A rational spin has k_1 = ... = k_(p-1), so zero spin means p k_0 = -sigma/8.
    const mpq_class index = spin_index(d.manifold);
    if (ratio(index.get_num(), index.get_den() * p).get_den() != 1) {
      violation("spin-zero", "Spin = 0 needs p k_0 = -sigma/8 = " + index.get_str() + ", impossible for integer k_0");
    } else {
      note("spin-zero", "Spin = 0 with k_0 = " + ratio(index.get_num(), index.get_den() * p).get_str());
    }
  }

  try {
    v.k = k_vector(tuple);
    note("fourier-inversion", "k = " + v.k->to_string() + ", sum " + v.k->sum().get_str() + " = -sigma/8");
  } catch (const NonIntegralKVector& e) {
    violation("k-integrality", e.what());
  }
  if (v.k) {
    for (auto& r : check_k_constraints(*v.k, v.spin, qbp)) violation(r.anchor, r.detail);
    v.lift_sweep = lift_sweep(*v.k, qbp);
    std::string norms;
    for (const auto& e : v.lift_sweep) norms += (norms.empty() ? "" : ", ") + e.trace_norm.get_str();
    note("lift-sweep", "trace norms 2^((p-1)(t_0-1-k_0)) over the p lifts: " + norms);
  }

  // quotient invariants
  if (p == 3) {
    QuotientReport q;
    q.sigma = signature_quotient_p3(d);
    q.euler = euler_quotient_p3(d);
    q.integral = q.sigma.get_den() == 1 && q.euler.get_den() == 1;
    v.quotient = q;
    if (q.sigma.get_den() != 1) {
      violation("g-signature-integrality", "sigma(X/Z_3) = " + q.sigma.get_str() + " is not an integer");
    }
    if (q.euler.get_den() != 1) {
      violation("euler-integrality", "chi(X/Z_3) = " + q.euler.get_str() + " is not an integer");
    }
    if (q.integral) {
      const mpq_class expected = 2 + 2 * mpq_class(qbp) - q.sigma;
      if (q.euler != expected) {
        violation("quotient-betti", "chi(X/Z_3) = " + q.euler.get_str() + " but 2 + 2 b_plus(X/Z_3) - sigma(X/Z_3) = " +
                                        expected.get_str());
      } else {
        note("quotient-betti", "sigma(X/Z_3) = " + q.sigma.get_str() + ", chi(X/Z_3) = " + q.euler.get_str() +
                                   ", b_minus(X/Z_3) = " + mpq_class(mpq_class(qbp) - q.sigma).get_str());
      }
    }
    if (d.homologically_trivial && q.sigma != mpq_class(d.manifold.signature)) {
      violation("trivial-signature", "a homologically trivial action has sigma(X/Z_3) = sigma(X) = " +
                                         d.manifold.signature.get_str() + ", got " + q.sigma.get_str());
    }
  } else {
    const mpq_class chi_q = euler_quotient(d);
    if (chi_q.get_den() != 1) violation("euler-integrality", "chi(X/Z_p) = " + chi_q.get_str() + " is not an integer");
  }
  if (d.homologically_trivial && fixed_set_euler(d) != d.manifold.euler) {
    violation("lefschetz-number", "a homologically trivial action has chi(X^tau) = chi(X) = " + d.manifold.euler.get_str() +
                                      ", got " + fixed_set_euler(d).get_str());
  }

  if (violated) {
    v.outcome = Outcome::ConstraintViolation;
    return v;
  }

  const bool k3_regime = k3 && qbp == 3;
  if (!v.spin.rational) {
    note("rationality", "the spin number is irrational, so the rational-and-negative hypothesis is not met; no conclusion");
  } else if (k3_regime && v.spin.sign == SpinSign::Negative) {
    bool excluded = false;
    const bool concluded = sw_vanishing_chain(*v.k, 1, options, v.reasons, v, excluded);
    if (concluded && d.homologically_trivial) {
      contradiction = true;
      if (!excluded) {
        note("morgan-szabo", "SW of the trivial spin^c structure on a homotopy K3 is odd, but the chain gives 0");
      }
    } else if (concluded) {
      violated = true;
      note("self-dual-trivial", "b_plus(X/Z_p) = 3 means tau acts trivially on H^2_+, which a rational negative spin "
                                "number rules out [violated]");
    }
  }

  if (d.homologically_trivial && p == 3 && k3 && d.surfaces.size() + d.isolated.size() > 0) {
    const auto [f1, f2] = count_p3_types(d);
    mpz_class ff = 0;
    for (const auto& s : d.surfaces) ff += s.self_intersection;
    const long diff = f1 - f2;
    const mpq_class k0 = 2 + ratio(diff, 4);
    note("index-from-signature", "with sigma(X/Z_3) = sigma(X), k_0 = 2 + (f1 - f2)/4 = " + k0.get_str());
    if (diff == 0) {
      contradiction = true;
      note("sphere-sign-branch",
           "f1 = f2, so the spin number is (1/6) sum <F,F> = " + ratio(ff, 6).get_str() +
               " <= 0, while k_0 = 2 makes it positive; this case cannot occur (the half-weight evaluation of this "
               "dataset gives " + spin_phrase(v.spin) + ")");
    } else if (k0.get_den() != 1 || ratio(2 - k0.get_num(), 2).get_den() != 1) {
      violated = true;
      note("index-from-signature", "k_0 = " + k0.get_str() + " does not give integral k_1 = k_2 [violated]");
    } else {
      const mpz_class k0i = k0.get_num();
      const mpz_class k1 = (2 - k0i) / 2;
      note("index-from-signature", "f1 != f2 and k_0 <= 2 give k_0 < 2, so Spin = (3 k_0 - 2)/2 = " +
                                       ratio(3 * k0i - 2, 2).get_str() + " is negative");
      bool excluded = false;
      if (contradiction) {
        note("index-from-signature", "the vanishing chain above already covers this k-vector");
      } else if (sw_vanishing_chain(KVector{3, {k0i, k1, k1}}, 1, options, v.reasons, v, excluded)) {
        contradiction = true;
        if (!excluded) {
          note("morgan-szabo", "SW of the trivial spin^c structure on a homotopy K3 is odd, but the chain gives 0");
        }
      }
    }
  }

  if (violated) {
    v.outcome = Outcome::ConstraintViolation;
  } else if (contradiction) {
    v.outcome = Outcome::Contradiction;
  } else {
    v.outcome = Outcome::NoObstruction;
    if (v.quotient && v.quotient->sigma != mpq_class(d.manifold.signature)) {
      note("nontrivial-on-h2", "b_minus(X/Z_3) = " + mpq_class(mpq_class(qbp) - v.quotient->sigma).get_str() +
                                   " differs from b_minus(X) = " + d.manifold.b_minus().get_str() +
                                   ", so the action is nontrivial on H^2(X; R)");
    }
  }
  return v;
}

Json cyclotomic_to_json(const CyclotomicNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  std::vector<mpq_class> coeffs;
  for (const auto& x : j.at("coeffs")) coeffs.push_back(json_rational(x));
  return CyclotomicNumber(j.at("conductor").get<std::uint32_t>(), std::move(coeffs));
}

Json verdict_to_json(const RigidityVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  Json spin = spin_class_to_json(v.spin);
  spin["exact"] = v.spin_value ? cyclotomic_to_json(*v.spin_value) : Json(nullptr);
  j["spin"] = spin;
  j["k_vector"] = v.k ? kvector_to_json(*v.k) : Json(nullptr);
  j["lift_sweep"] = Json::array();
  for (const auto& e : v.lift_sweep) {
    j["lift_sweep"].push_back(
        {{"q", e.q}, {"k", kvector_to_json(e.k)}, {"spin", spin_class_to_json(e.spin)}, {"trace_norm", e.trace_norm.get_str()}});
  }
  if (v.quotient) {
    j["quotient"] = {{"sigma", v.quotient->sigma.get_str()},
                     {"euler", v.quotient->euler.get_str()},
                     {"integral", v.quotient->integral}};
  } else {
    j["quotient"] = nullptr;
  }
  j["prop41"] = {{"kernel_rank", v.kernel_rank ? Json(*v.kernel_rank) : Json(nullptr)},
                 {"sw_value", v.sw_value ? integer_to_json(*v.sw_value) : Json(nullptr)}};
  j["reasons"] = Json::array();
  for (const auto& r : v.reasons) j["reasons"].push_back({{"anchor", r.anchor}, {"detail", r.detail}});
  return j;
}

RigidityVerdict verdict_from_json(const Json& j) {
  RigidityVerdict v;
  v.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  v.spin = spin_class_from_json(j.at("spin"));
  if (!j.at("spin").at("exact").is_null()) v.spin_value = cyclotomic_from_json(j.at("spin").at("exact"));
  if (!j.at("k_vector").is_null()) v.k = kvector_from_json(j.at("k_vector"));
  for (const auto& e : j.at("lift_sweep")) {
    LiftSweepEntry entry;
    entry.q = e.at("q").get<std::uint32_t>();
    entry.k = kvector_from_json(e.at("k"));
    entry.spin = spin_class_from_json(e.at("spin"));
    entry.trace_norm = json_rational(e.at("trace_norm"));
    v.lift_sweep.push_back(std::move(entry));
  }
  if (!j.at("quotient").is_null()) {
    const Json& q = j.at("quotient");
    v.quotient = QuotientReport{json_rational(q.at("sigma")), json_rational(q.at("euler")), q.at("integral").get<bool>()};
  }
  const Json& prop = j.at("prop41");
  if (!prop.at("kernel_rank").is_null()) v.kernel_rank = prop.at("kernel_rank").get<std::size_t>();
  if (!prop.at("sw_value").is_null()) v.sw_value = json_integer(prop.at("sw_value"));
  for (const auto& r : j.at("reasons")) {
    v.reasons.push_back({r.at("anchor").get<std::string>(), r.at("detail").get<std::string>()});
  }
  return v;
}

std::string verdict_to_text(const RigidityVerdict& v) {
  std::ostringstream os;
  os << "outcome: " << to_string(v.outcome) << "\n";
  os << "spin: " << spin_phrase(v.spin) << "\n";
  if (v.spin_value && !v.spin.rational) os << "spin (exact): " << v.spin_value->to_string() << "\n";
  os << "k-vector: " << (v.k ? v.k->to_string() : std::string("not integral")) << "\n";
  for (const auto& e : v.lift_sweep) {
    os << "lift q=" << e.q << ": k = " << e.k.to_string() << ", spin " << spin_phrase(e.spin)
       << ", trace norm " << e.trace_norm.get_str() << "\n";
  }
  if (v.quotient) {
    os << "quotient: sigma = " << v.quotient->sigma.get_str() << ", euler = " << v.quotient->euler.get_str()
       << (v.quotient->integral ? " (integral)" : " (not integral)") << "\n";
  }
  if (v.kernel_rank) os << "adams kernel rank: " << *v.kernel_rank << "\n";
  if (v.sw_value) os << "SW(trivial spin^c): " << v.sw_value->get_str() << "\n";
  os << "reasons:\n";
  for (const auto& r : v.reasons) os << "  [" << r.anchor << "] " << r.detail << "\n";
  return os.str();
}

}  // namespace eqspin
