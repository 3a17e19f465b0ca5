#include "eqspin/lefschetz.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "eqspin/errors.hpp"

namespace eqspin {
namespace {

// zeta_(2p)^e - zeta_(2p)^-e
CyclotomicNumber sine_pair(std::uint32_t n, long long e) {
  return CyclotomicNumber::zeta(n, e) - CyclotomicNumber::zeta(n, -e);
}

CyclotomicNumber cosine_pair(std::uint32_t n, long long e) {
  return CyclotomicNumber::zeta(n, e) + CyclotomicNumber::zeta(n, -e);
}

}  // namespace

mpz_class KVector::sum() const { return std::accumulate(k.begin(), k.end(), mpz_class(0)); }

std::string KVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? ", " : "") << k[i].get_str();
  os << ")";
  return os.str();
}

CyclotomicNumber spin_number(const FixedPointDataset& d, std::uint32_t j) {
  if (j == 0 || j >= d.p) throw InvalidParameters("power j must lie in 1..p-1");
  const std::uint32_t n = 2 * d.p;
  const HalfWeightData hw = normalize_half_weights(d);
  const long long jj = j;

  // isolated points repeat a lot, so group equal half-weights first
  std::map<std::pair<long, long>, long> point_counts;
  for (const auto& w : hw.points) ++point_counts[{w.a, w.b}];
  std::map<long, mpz_class> surface_weight;  // c -> sum of self-intersections
  for (const auto& w : hw.surfaces) surface_weight[w.c] += w.self_intersection;

  CyclotomicNumber total(n);
  for (const auto& [ab, count] : point_counts) {
    const auto denom = sine_pair(n, jj * ab.first) * sine_pair(n, jj * ab.second);
    total += denom.inverse() * mpq_class(count);
  }
  for (const auto& [c, ff] : surface_weight) {
    if (ff == 0) continue;
    const auto s = sine_pair(n, jj * c);
    total -= cosine_pair(n, jj * c) * (s * s).inverse() * ratio(ff, 2);
  }
  return reduce_conductor(total);
}

CyclotomicNumber spin_number_direct(const FixedPointDataset& d) {
  const std::uint32_t n = 4 * d.p;
  CyclotomicNumber total(n);
  for (const auto& pt : d.isolated) {
    total -= half_angle_csc(pt.l_alpha, d.p) * half_angle_csc(pt.l_beta, d.p) * ratio(pt.epsilon, 4);
  }
  for (const auto& s : d.surfaces) {
    const auto csc = half_angle_csc(s.l_theta, d.p);
    total += half_angle_cos(s.l_theta, d.p) * csc * csc * ratio(s.self_intersection * s.epsilon, 4);
  }
  return reduce_conductor(total);
}

mpq_class spin_index(const ManifoldInvariants& m) {
  if (!m.is_spin) throw InvalidParameters("spin index needs a spin manifold");
  if (m.signature % 8 != 0) throw InvalidParameters("signature " + m.signature.get_str() + " is not divisible by 8");
  return ratio(-m.signature, 8);
}

SpinNumberTuple spin_tuple(const FixedPointDataset& d) {
  SpinNumberTuple out;
  out.p = d.p;
  out.values.push_back(CyclotomicNumber::rational(1, spin_index(d.manifold)));
  for (std::uint32_t j = 1; j < d.p; ++j) out.values.push_back(spin_number(d, j));
  return out;
}

KVector k_vector(const SpinNumberTuple& s) {
  const std::uint32_t p = s.p;
  if (s.values.size() != p) throw InvalidParameters("spin tuple must have p entries");
  std::uint32_t n = p;
  for (const auto& v : s.values) n = std::lcm(n, v.conductor());
  std::vector<CyclotomicNumber> spins;
  for (const auto& v : s.values) spins.push_back(embed_conductor(v, n));
  const std::uint32_t step = n / p;  // nu = zeta_n^step

  KVector out;
  out.p = p;
  for (std::uint32_t i = 0; i < p; ++i) {
    CyclotomicNumber acc(n);
    for (std::uint32_t j = 0; j < p; ++j) {
      acc += CyclotomicNumber::zeta(n, -static_cast<long long>(i) * j * step) * spins[j];
    }
    acc *= mpq_class(1, p);
    const auto reduced = reduce_conductor(acc);
    if (!reduced.is_rational() || reduced.to_rational().get_den() != 1) {
      throw NonIntegralKVector("k_" + std::to_string(i) + " = " + reduced.to_string() + " is not an integer");
    }
    out.k.push_back(reduced.to_rational().get_num());
  }
  return out;
}

SpinNumberTuple synthesize(const KVector& k) {
  if (k.k.size() != k.p) throw InvalidParameters("k-vector must have p entries");
  SpinNumberTuple out;
  out.p = k.p;
  for (std::uint32_t j = 0; j < k.p; ++j) {
    CyclotomicNumber v(k.p);
    for (std::uint32_t i = 0; i < k.p; ++i) {
      v += CyclotomicNumber::zeta(k.p, static_cast<long long>(i) * j) * mpq_class(k.k[i]);
    }
    out.values.push_back(reduce_conductor(v));
  }
  return out;
}

mpq_class equal_defect_spin(std::uint32_t p, const mpz_class& k0, const mpz_class& total) {
  return ratio(p * k0 - total, p - 1);
}

mpz_class fixed_set_euler(const FixedPointDataset& d) {
  mpz_class chi = static_cast<unsigned long>(d.isolated.size());
  for (const auto& s : d.surfaces) chi += 2 - 2 * s.genus;
  return chi;
}

mpq_class signature_quotient_p3(const FixedPointDataset& d) {
  if (d.p != 3) throw InvalidParameters("quotient signature formula is implemented for p = 3 only");
  const auto [f1, f2] = count_p3_types(d);
  mpz_class ff = 0;
  for (const auto& s : d.surfaces) ff += s.self_intersection;
  const mpq_class three_sigma = mpq_class(d.manifold.signature) + ratio(8 * ff, 3) + ratio(2 * (f1 - f2), 3);
  return three_sigma / 3;
}

mpq_class euler_quotient_p3(const FixedPointDataset& d) {
  if (d.p != 3) throw InvalidParameters("quotient Euler characteristic formula is implemented for p = 3 only");
  return euler_quotient(d);
}

mpq_class euler_quotient(const FixedPointDataset& d) {
  return ratio(d.manifold.euler + (d.p - 1) * fixed_set_euler(d), d.p);
}

}  // namespace eqspin
