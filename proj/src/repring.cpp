#include "eqspin/repring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqspin/errors.hpp"

namespace eqspin {
namespace {

std::uint32_t reduce_mod(long long k, std::uint32_t p) {
  const long long r = k % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void require_same_prime(const RepRingElement& a, const RepRingElement& b) {
  if (a.prime() != b.prime()) {
    throw PrimeMismatch("representation ring elements over Z_" + std::to_string(a.prime()) + " and Z_" +
                        std::to_string(b.prime()));
  }
}

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidParameters("p = " + std::to_string(p) + " is not an odd prime");
}

// Dense table coef[i][j] for t^i xi^j, i >= 0.
using Dense = std::vector<std::vector<mpz_class>>;

Dense to_dense(const RepRingElement& a, std::size_t rows) {
  Dense out(rows, std::vector<mpz_class>(a.prime()));
  for (const auto& [mono, c] : a.terms()) out[static_cast<std::size_t>(mono.t)][mono.xi] = c;
  return out;
}

}  // namespace

RepRingElement::RepRingElement(std::uint32_t p) : p_(p) {
  if (p == 0) throw InvalidParameters("group order must be positive");
}

RepRingElement RepRingElement::constant(std::uint32_t p, const mpz_class& c) { return monomial(p, c, 0, 0); }

RepRingElement RepRingElement::monomial(std::uint32_t p, const mpz_class& c, long t_exp, long long xi_exp) {
  RepRingElement r(p);
  r.add_term(c, t_exp, xi_exp);
  return r;
}

RepRingElement RepRingElement::sigma(std::uint32_t p) {
  RepRingElement r(p);
  for (std::uint32_t j = 0; j < p; ++j) r.add_term(1, 0, j);
  return r;
}

RepRingElement RepRingElement::one_minus_t_xi(std::uint32_t p, long long k) {
  RepRingElement r = constant(p, 1);
  r.add_term(-1, 1, k);
  return r;
}

mpz_class RepRingElement::coeff(long t_exp, long long xi_exp) const {
  auto it = terms_.find(Monomial{t_exp, reduce_mod(xi_exp, p_)});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

long RepRingElement::min_t_degree() const {
  long best = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.t < best) best = mono.t;
    first = false;
  }
  return best;
}

long RepRingElement::max_t_degree() const {
  long best = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.t > best) best = mono.t;
    first = false;
  }
  return best;
}

void RepRingElement::add_term(const mpz_class& c, long t_exp, long long xi_exp) {
  if (c == 0) return;
  const Monomial key{t_exp, reduce_mod(xi_exp, p_)};
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RepRingElement& RepRingElement::operator+=(const RepRingElement& b) {
  require_same_prime(*this, b);
  for (const auto& [mono, c] : b.terms_) add_term(c, mono.t, mono.xi);
  return *this;
}

RepRingElement& RepRingElement::operator-=(const RepRingElement& b) {
  require_same_prime(*this, b);
  for (const auto& [mono, c] : b.terms_) add_term(-c, mono.t, mono.xi);
  return *this;
}

RepRingElement& RepRingElement::operator*=(const mpz_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

RepRingElement RepRingElement::operator-() const {
  RepRingElement r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

RepRingElement operator*(const RepRingElement& a, const RepRingElement& b) {
  require_same_prime(a, b);
  RepRingElement r(a.p_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.t + mb.t, static_cast<long long>(ma.xi) + mb.xi);
  }
  return r;
}

RepRingElement RepRingElement::pow(unsigned e) const {
  RepRingElement result = constant(p_, 1);
  RepRingElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RepRingElement RepRingElement::specialize_xi_to_one() const {
  RepRingElement r(p_);
  for (const auto& [mono, c] : terms_) r.add_term(c, mono.t, 0);
  return r;
}

CyclotomicNumber RepRingElement::evaluate(long long k, long long t_power) const {
  CyclotomicNumber r(p_);
  for (const auto& [mono, c] : terms_) {
    r += CyclotomicNumber::zeta(p_, static_cast<long long>(mono.xi) * k + mono.t * t_power) * mpq_class(c);
  }
  return r;
}

std::string RepRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(mag.get_str());
    if (mono.t == 1) factors.emplace_back("t");
    if (mono.t != 0 && mono.t != 1) factors.push_back("t^" + std::to_string(mono.t));
    if (mono.xi == 1) factors.emplace_back("xi");
    if (mono.xi > 1) factors.push_back("xi^" + std::to_string(mono.xi));
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    first = false;
  }
  return os.str();
}

RepRingElement rr_add(const RepRingElement& a, const RepRingElement& b) { return a + b; }
RepRingElement rr_mul(const RepRingElement& a, const RepRingElement& b) { return a * b; }

RepRingElement adams(std::uint32_t q, const RepRingElement& a) {
  if (q == 0) throw std::invalid_argument("adams: q must be positive");
  RepRingElement r(a.prime());
  for (const auto& [mono, c] : a.terms()) {
    r.add_term(c, mono.t * static_cast<long>(q), static_cast<long long>(mono.xi) * q);
  }
  return r;
}

RepRingElement geometric_block(std::uint32_t p, std::uint32_t q, long long k) {
  RepRingElement r(p);
  for (std::uint32_t e = 0; e < q; ++e) r.add_term(1, e, k * e);
  return r;
}

TruncationIdeal::TruncationIdeal(std::uint32_t p, std::vector<std::uint32_t> m_vector, std::uint32_t d)
    : p_(p), m_(std::move(m_vector)), d_(d), degree_(0), generator_(p) {
  if (m_.size() != p) throw InvalidParameters("m_vector must have length p");
  if (m_[0] < d) throw InvalidParameters("m_0 must be at least d");
  generator_ = RepRingElement::constant(p, 1);
  for (std::uint32_t i = 0; i < p; ++i) {
    const std::uint32_t e = i == 0 ? m_[0] - d : m_[i];
    generator_ = generator_ * RepRingElement::one_minus_t_xi(p, i).pow(e);
    degree_ += e;
  }
}

RepRingElement normal_form(const RepRingElement& a, const TruncationIdeal& ideal) {
  const std::uint32_t p = ideal.prime();
  if (a.prime() != p) throw PrimeMismatch("normal_form: prime of element and ideal differ");
  const std::size_t deg = ideal.degree();
  if (deg == 0 || a.is_zero()) return RepRingElement(p);

  const RepRingElement& g = ideal.generator();
  // generator = 1 + t*g1, so t^-1 = -g1 modulo the ideal
  RepRingElement t_inverse(p);
  for (const auto& [mono, c] : g.terms()) {
    if (mono.t > 0) t_inverse.add_term(-c, mono.t - 1, mono.xi);
  }

  // top coefficient of the generator is +-xi^s
  std::uint32_t s = 0;
  mpz_class unit;
  for (const auto& [mono, c] : g.terms()) {
    if (mono.t == static_cast<long>(deg)) {
      s = mono.xi;
      unit = c;
    }
  }
  const Dense gd = to_dense(g, deg + 1);

  auto reduce_nonnegative = [&](const RepRingElement& x) {
    if (x.is_zero()) return RepRingElement(p);
    const std::size_t rows = std::max<std::size_t>(static_cast<std::size_t>(x.max_t_degree()) + 1, deg);
    Dense c = to_dense(x, rows);
    for (std::size_t e = rows; e-- > deg;) {
      for (std::uint32_t j = 0; j < p; ++j) {
        if (c[e][j] == 0) continue;
        // subtract coef * unit * xi^(j-s) * t^(e-deg) * generator
        const mpz_class f = c[e][j] * unit;
        const std::uint32_t shift = reduce_mod(static_cast<long long>(j) - s, p);
        for (std::size_t gi = 0; gi <= deg; ++gi) {
          for (std::uint32_t gj = 0; gj < p; ++gj) {
            if (gd[gi][gj] == 0) continue;
            c[e - deg + gi][(gj + shift) % p] -= f * gd[gi][gj];
          }
        }
      }
    }
    RepRingElement out(p);
    for (std::size_t i = 0; i < deg; ++i) {
      for (std::uint32_t j = 0; j < p; ++j) out.add_term(c[i][j], static_cast<long>(i), j);
    }
    return out;
  };

  RepRingElement positive(p);
  std::map<long, RepRingElement> negative;  // t-exponent -> xi-polynomial part
  for (const auto& [mono, c] : a.terms()) {
    if (mono.t >= 0) {
      positive.add_term(c, mono.t, mono.xi);
    } else {
      auto [it, ins] = negative.try_emplace(mono.t, RepRingElement(p));
      it->second.add_term(c, 0, mono.xi);
    }
  }
  RepRingElement result = reduce_nonnegative(positive);
  if (!negative.empty()) {
    RepRingElement inv_power = RepRingElement::constant(p, 1);
    long current = 0;
    // negative is ordered from most negative upward; walk it in reverse
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
      while (current > it->first) {
        inv_power = reduce_nonnegative(inv_power * t_inverse);
        --current;
      }
      result += reduce_nonnegative(it->second * inv_power);
    }
  }
  return result;
}

std::vector<mpz_class> coefficient_vector(const RepRingElement& reduced, const TruncationIdeal& ideal) {
  const std::uint32_t p = ideal.prime();
  std::vector<mpz_class> v(static_cast<std::size_t>(ideal.degree()) * p);
  for (const auto& [mono, c] : reduced.terms()) {
    if (mono.t < 0 || mono.t >= static_cast<long>(ideal.degree())) {
      throw std::invalid_argument("coefficient_vector: element is not in normal form");
    }
    v[static_cast<std::size_t>(mono.t) * p + mono.xi] = c;
  }
  return v;
}

RepRingElement element_from_vector(const std::vector<mpz_class>& v, const TruncationIdeal& ideal) {
  const std::uint32_t p = ideal.prime();
  if (v.size() != static_cast<std::size_t>(ideal.degree()) * p) {
    throw std::invalid_argument("element_from_vector: wrong length");
  }
  RepRingElement r(p);
  for (std::size_t idx = 0; idx < v.size(); ++idx) r.add_term(v[idx], static_cast<long>(idx / p), idx % p);
  return r;
}

std::vector<long> InstanceParameters::k_vector() const {
  std::vector<long> k(m.size());
  for (std::size_t i = 0; i < m.size() && i < n.size(); ++i) k[i] = static_cast<long>(m[i]) - static_cast<long>(n[i]);
  return k;
}

void InstanceParameters::validate() const {
  require_odd_prime(p);
  if (m.size() != p || n.size() != p) throw InvalidParameters("m and n must both have length p");
  if (m[0] < d) throw InvalidParameters("m_0 must be at least d");
  const long sum_m = std::accumulate(m.begin(), m.end(), 0L);
  const long sum_n = std::accumulate(n.begin(), n.end(), 0L);
  if (static_cast<long>(l) + sum_n != sum_m - 1 - static_cast<long>(d)) {
    throw InvalidParameters("dimension identity l + sum(n) = sum(m) - 1 - d fails: " + std::to_string(l) + " + " +
                            std::to_string(sum_n) + " != " + std::to_string(sum_m) + " - 1 - " + std::to_string(d));
  }
  if (t) {
    if (t->size() != p) throw InvalidParameters("t_vector must have length p");
    const long sum_t = std::accumulate(t->begin(), t->end(), 0L);
    if (sum_t != 2L * l + 1) throw InvalidParameters("t_vector must sum to b_plus = 2l + 1");
  }
}

namespace {

RepRingElement constraint_multiplier(const InstanceParameters& params, std::uint32_t q) {
  RepRingElement mult = RepRingElement::constant(params.p, 1);
  for (std::uint32_t i = 0; i < params.p; ++i) {
    if (params.n[i] > 0) mult = mult * geometric_block(params.p, q, i).pow(params.n[i]);
  }
  mpz_class ql;
  mpz_ui_pow_ui(ql.get_mpz_t(), q, params.l);
  return mult * ql;
}

}  // namespace

RepRingElement adams_constraint_image(const InstanceParameters& params, std::uint32_t q,
                                      const RepRingElement& beta) {
  params.validate();
  const TruncationIdeal ideal = params.ideal();
  return normal_form(adams(q, beta) - beta * constraint_multiplier(params, q), ideal);
}

IntMatrix adams_constraint_matrix(const InstanceParameters& params, const std::vector<std::uint32_t>& qs) {
  params.validate();
  const TruncationIdeal ideal = params.ideal();
  const std::size_t dim = static_cast<std::size_t>(ideal.degree()) * params.p;
  IntMatrix matrix;
  for (std::uint32_t q : qs) {
    if (q < 2) throw InvalidParameters("Adams constraint needs q >= 2");
    const RepRingElement mult = normal_form(constraint_multiplier(params, q), ideal);
    IntMatrix block(dim, std::vector<mpz_class>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      const auto basis = RepRingElement::monomial(params.p, 1, static_cast<long>(col / params.p), col % params.p);
      const auto image = normal_form(adams(q, basis) - basis * mult, ideal);
      const auto v = coefficient_vector(image, ideal);
      for (std::size_t row = 0; row < dim; ++row) block[row][col] = v[row];
    }
    matrix.insert(matrix.end(), block.begin(), block.end());
  }
  return matrix;
}

bool AdamsKernel::contains(const RepRingElement& reduced_beta, const TruncationIdeal& ideal) const {
  return in_integer_span(basis_vectors, coefficient_vector(reduced_beta, ideal));
}

AdamsKernel solve_adams_kernel(const InstanceParameters& params, std::vector<std::uint32_t> qs) {
  if (qs.empty()) qs.push_back(2);
  AdamsKernel out;
  out.qs = qs;
  const IntMatrix a = adams_constraint_matrix(params, qs);
  const TruncationIdeal ideal = params.ideal();
  out.dimension = static_cast<std::size_t>(ideal.degree()) * params.p;
  out.basis_vectors = integer_kernel(a, out.dimension);
  for (const auto& v : out.basis_vectors) out.basis.push_back(element_from_vector(v, ideal));
  return out;
}

RepRingElement norm_element_top(const InstanceParameters& params) {
  params.validate();
  const TruncationIdeal ideal = params.ideal();
  if (ideal.degree() == 0) return RepRingElement(params.p);
  const auto top = RepRingElement::sigma(params.p) * RepRingElement::one_minus_t_xi(params.p, 0).pow(ideal.degree() - 1);
  return normal_form(top, ideal);
}

ScalarSpecialization specialize_scalar_constraint(const InstanceParameters& params, std::uint32_t q) {
  params.validate();
  if (q < 2) throw InvalidParameters("scalar specialization needs q >= 2");
  ScalarSpecialization out;
  out.q = q;
  const IntPolynomial block(std::vector<mpz_class>(q, mpz_class(1)));
  IntPolynomial lhs = IntPolynomial::monomial(params.p, 0);
  for (std::uint32_t i = 0; i < params.l; ++i) lhs = lhs * block;
  mpz_class ql;
  mpz_ui_pow_ui(ql.get_mpz_t(), q, params.l);
  out.lhs = lhs;
  out.rhs = IntPolynomial::monomial(ql * params.p, 0);
  out.forces_zero = !(out.lhs == out.rhs);
  out.truncated_image_vanishes = adams_constraint_image(params, q, norm_element_top(params)).is_zero();
  return out;
}

long long tom_dieck_k_exponent(std::uint32_t p, std::uint32_t i, std::uint32_t j, TomDieckSchedule schedule) {
  if (schedule == TomDieckSchedule::Character) return 2LL * i * j;
  if (i + 1 < p) return static_cast<long long>(i + 1) * j;
  return static_cast<long long>(p) - 2LL * j;
}

std::vector<std::uint32_t> tom_dieck_schedule_discrepancies(std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::uint32_t j = 1; j < p; ++j) {
      const auto a = tom_dieck_k_exponent(p, i, j, TomDieckSchedule::AsPrinted);
      const auto b = tom_dieck_k_exponent(p, i, j, TomDieckSchedule::Character);
      if (reduce_mod(a, p) != reduce_mod(b, p)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

CyclotomicNumber tom_dieck_rhs(const std::vector<long>& t_vector, const std::vector<long>& k_vector,
                               std::uint32_t j, std::uint32_t p, TomDieckSchedule schedule) {
  require_odd_prime(p);
  if (t_vector.size() != p || k_vector.size() != p) throw InvalidParameters("t and k vectors must have length p");
  if (j == 0 || j >= p) throw InvalidParameters("power j must lie in 1..p-1");
  const auto one = CyclotomicNumber::rational(p, 1);
  const long two_exp = t_vector[0] - k_vector[0];
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(two_exp)));
  CyclotomicNumber result =
      CyclotomicNumber::rational(p, two_exp >= 0 ? mpq_class(two_pow) : mpq_class(mpz_class(1), two_pow));
  for (std::uint32_t i = 1; i < p; ++i) {
    if (t_vector[i] != 0) result *= (one + CyclotomicNumber::zeta(p, static_cast<long long>(i) * j)).pow(t_vector[i]);
    if (k_vector[i] != 0) {
      result *= (one + CyclotomicNumber::zeta(p, tom_dieck_k_exponent(p, i, j, schedule))).pow(-k_vector[i]);
    }
  }
  return result;
}

mpq_class tom_dieck_norm(const std::vector<long>& t_vector, const std::vector<long>& k_vector, std::uint32_t p,
                         TomDieckSchedule schedule) {
  auto prod = CyclotomicNumber::rational(p, 1);
  for (std::uint32_t j = 1; j < p; ++j) prod *= tom_dieck_rhs(t_vector, k_vector, j, p, schedule);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, p - 1);
  // the product of Galois conjugates is a norm, hence rational
  return prod.to_rational() / two_pow;
}

mpz_class extract_sw(const RepRingElement& beta, long m, long d) {
  const long n = m - d;
  if (n <= 0) throw std::invalid_argument("extract_sw: m - d must be positive");
  std::vector<mpz_class> series(static_cast<std::size_t>(n));
  mpz_class binom;
  const RepRingElement flat = beta.specialize_xi_to_one();
  for (const auto& [mono, c] : flat.terms()) {
    // t^i = (1 - T)^i as a power series in T up to T^(n-1); for i < 0 the
    // coefficients are C(-i+k-1, k) with no alternating sign
    for (long k = 0; k < n; ++k) {
      if (mono.t >= 0) {
        if (k > mono.t) break;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(mono.t), static_cast<unsigned long>(k));
      } else {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(-mono.t + k - 1), static_cast<unsigned long>(k));
      }
      const bool flip = mono.t >= 0 && k % 2 == 1;
      series[static_cast<std::size_t>(k)] += (flip ? mpz_class(-c) : c) * binom;
    }
  }
  for (long k = 0; k + 1 < n; ++k) {
    if (series[static_cast<std::size_t>(k)] != 0) {
      throw std::domain_error("extract_sw: beta has a nonzero T^" + std::to_string(k) +
                              " coefficient below the top degree " + std::to_string(n - 1));
    }
  }
  return series.back();
}

}  // namespace eqspin
