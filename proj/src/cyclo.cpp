#include "eqspin/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "eqspin/errors.hpp"

namespace eqspin {
namespace {

// Power-basis coordinates of zeta_n^k for 0 <= k < n.
struct FieldTables {
  std::uint32_t n = 1;
  std::size_t phi = 1;
  std::vector<std::vector<mpz_class>> zeta_powers;
};

const FieldTables& tables(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<FieldTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  auto t = std::make_unique<FieldTables>();
  t->n = n;
  const IntPolynomial& phi_n = cyclotomic_polynomial(n);
  t->phi = static_cast<std::size_t>(phi_n.degree());
  t->zeta_powers.resize(n, std::vector<mpz_class>(t->phi));
  std::vector<mpz_class> cur(t->phi);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    t->zeta_powers[k] = cur;
    // multiply by zeta: shift up, then fold the top coefficient with Phi_n
    mpz_class top = cur[t->phi - 1];
    for (std::size_t i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < t->phi; ++i) cur[i] -= top * phi_n.coeffs()[i];
    }
  }
  auto [it, ok] = cache.emplace(n, std::move(t));
  return *it->second;
}

long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Rational polynomials for the extended Euclidean algorithm.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// Solves E x = v over Q where E is given column-wise; nullopt if inconsistent.
std::optional<std::vector<mpq_class>> solve_columns(const std::vector<std::vector<mpq_class>>& cols,
                                                    const std::vector<mpq_class>& v) {
  const std::size_t rows = v.size();
  const std::size_t ncols = cols.size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][ncols] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(ncols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][ncols];
  return x;
}

void require_same(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() != b.conductor()) {
    throw ConductorMismatch("cyclotomic conductors differ: " + std::to_string(a.conductor()) +
                            " vs " + std::to_string(b.conductor()));
  }
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(std::uint32_t conductor)
    : conductor_(conductor), coeffs_(tables(conductor).phi) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
}

CyclotomicNumber::CyclotomicNumber(std::uint32_t conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  if (coeffs_.size() != tables(conductor).phi) {
    throw std::invalid_argument("coefficient vector length must equal phi(conductor)");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CyclotomicNumber CyclotomicNumber::rational(std::uint32_t conductor, const mpq_class& value) {
  CyclotomicNumber r(conductor);
  r.coeffs_[0] = value;
  r.coeffs_[0].canonicalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::zeta(std::uint32_t conductor, long long k) {
  const FieldTables& t = tables(conductor);
  const auto& pw = t.zeta_powers[static_cast<std::size_t>(mod_ll(k, conductor))];
  std::vector<mpq_class> c(pw.begin(), pw.end());
  return CyclotomicNumber(conductor, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_real() const { return conjugate() == *this; }

mpq_class CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw NotRational("value is not rational: " + to_string());
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) {
  require_same(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) {
  require_same(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) {
  *this = *this * b;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const mpq_class& scalar) {
  mpq_class s = scalar;
  s.canonicalize();
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same(a, b);
  const FieldTables& t = tables(a.conductor_);
  const std::size_t phi = t.phi;
  std::vector<mpq_class> raw(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<mpq_class> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t e = phi; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const auto& pw = t.zeta_powers[e % t.n];
    for (std::size_t i = 0; i < phi; ++i) {
      if (pw[i] != 0) out[i] += raw[e] * pw[i];
    }
  }
  return CyclotomicNumber(a.conductor_, std::move(out));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a * b.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  auto [x, y] = to_common_conductor(a, b);
  return x.coeffs_ == y.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  const IntPolynomial& phi_n = cyclotomic_polynomial(conductor_);
  QPoly modulus(phi_n.coeffs().begin(), phi_n.coeffs().end());
  QPoly a = coeffs_;
  trim(a);
  // invariant: s_i * a == r_i (mod Phi_n)
  QPoly r0 = modulus, r1 = a;
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_n is irreducible, so the last nonzero remainder is a unit
  const mpq_class c = r1.at(0);
  QPoly q, inv;
  qdivmod(s1, modulus, q, inv);
  std::vector<mpq_class> out(coeffs_.size());
  for (std::size_t i = 0; i < inv.size(); ++i) out[i] = inv[i] / c;
  return CyclotomicNumber(conductor_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::pow(long long e) const {
  CyclotomicNumber base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  CyclotomicNumber result = rational(conductor_, 1);
  while (k) {
    if (k & 1ULL) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  return galois_apply(*this, static_cast<long long>(conductor_) - 1);
}

mpq_class CyclotomicNumber::trace() const {
  CyclotomicNumber sum(conductor_);
  for (std::uint32_t k = 1; k <= conductor_; ++k) {
    if (std::gcd(k, conductor_) == 1) sum += galois_apply(*this, k);
  }
  return sum.to_rational();
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; }
CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
CyclotomicNumber cyc_neg(const CyclotomicNumber& a) { return -a; }
CyclotomicNumber cyc_inverse(const CyclotomicNumber& a) { return a.inverse(); }

CyclotomicNumber galois_apply(const CyclotomicNumber& a, long long k) {
  const std::uint32_t n = a.conductor();
  const long long kk = mod_ll(k, n);
  if (std::gcd(static_cast<unsigned long long>(kk), static_cast<unsigned long long>(n)) != 1) {
    throw std::invalid_argument("galois_apply: exponent " + std::to_string(k) +
                                " is not coprime to conductor " + std::to_string(n));
  }
  const FieldTables& t = tables(n);
  std::vector<mpq_class> out(t.phi);
  for (std::size_t i = 0; i < t.phi; ++i) {
    const mpq_class& c = a.coeffs()[i];
    if (c == 0) continue;
    const auto& pw = t.zeta_powers[static_cast<std::size_t>((static_cast<unsigned long long>(i) * kk) % n)];
    for (std::size_t j = 0; j < t.phi; ++j) {
      if (pw[j] != 0) out[j] += c * pw[j];
    }
  }
  return CyclotomicNumber(n, std::move(out));
}

CyclotomicNumber embed_conductor(const CyclotomicNumber& a, std::uint32_t m) {
  const std::uint32_t n = a.conductor();
  if (m == 0 || m % n != 0) {
    throw std::invalid_argument("embed_conductor: " + std::to_string(m) +
                                " is not a multiple of " + std::to_string(n));
  }
  if (m == n) return a;
  const std::uint32_t step = m / n;
  const FieldTables& t = tables(m);
  std::vector<mpq_class> out(t.phi);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const mpq_class& c = a.coeffs()[i];
    if (c == 0) continue;
    const auto& pw = t.zeta_powers[(i * step) % m];
    for (std::size_t j = 0; j < t.phi; ++j) {
      if (pw[j] != 0) out[j] += c * pw[j];
    }
  }
  return CyclotomicNumber(m, std::move(out));
}

CyclotomicNumber reduce_conductor(const CyclotomicNumber& a) {
  const std::uint32_t n = a.conductor();
  if (a.is_rational()) return CyclotomicNumber::rational(1, a.coeffs()[0]);
  for (std::uint64_t d64 : divisors(n)) {
    const auto d = static_cast<std::uint32_t>(d64);
    if (d == n) break;
    const std::size_t phi_d = tables(d).phi;
    std::vector<std::vector<mpq_class>> cols;
    cols.reserve(phi_d);
    for (std::size_t i = 0; i < phi_d; ++i) {
      std::vector<mpq_class> e(phi_d);
      e[i] = 1;
      cols.push_back(embed_conductor(CyclotomicNumber(d, std::move(e)), n).coeffs());
    }
    if (auto x = solve_columns(cols, a.coeffs())) return CyclotomicNumber(d, std::move(*x));
  }
  return a;
}

std::pair<CyclotomicNumber, CyclotomicNumber> to_common_conductor(const CyclotomicNumber& a,
                                                                  const CyclotomicNumber& b) {
  const std::uint32_t m = std::lcm(a.conductor(), b.conductor());
  return {embed_conductor(a, m), embed_conductor(b, m)};
}

CyclotomicNumber half_angle_csc(long long l, std::uint32_t p) {
  if (mod_ll(l, p) == 0) throw DivisionByZero("csc(pi*l/p) has a pole at l = " + std::to_string(l));
  const std::uint32_t n = 4 * p;
  // sin(pi l/p) = (z^{2l} - z^{-2l}) / (2i) with z = zeta_{4p}, i = z^p
  const CyclotomicNumber diff = CyclotomicNumber::zeta(n, 2 * l) - CyclotomicNumber::zeta(n, -2 * l);
  return CyclotomicNumber::zeta(n, p) * mpq_class(2) * diff.inverse();
}

CyclotomicNumber half_angle_cos(long long l, std::uint32_t p) {
  const std::uint32_t n = 4 * p;
  return (CyclotomicNumber::zeta(n, 2 * l) + CyclotomicNumber::zeta(n, -2 * l)) * mpq_class(1, 2);
}

std::string numeric_real_part(const CyclotomicNumber& a, unsigned precision_bits) {
  const auto prec = static_cast<mpfr_prec_t>(std::max(precision_bits, 16u));
  mpfr_t sum, term, angle, pi, q;
  mpfr_inits2(prec, sum, term, angle, pi, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const mpq_class& c = a.coeffs()[k];
    if (c == 0) continue;
    // c * cos(2 pi k / n)
    mpfr_mul_ui(angle, pi, 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle, angle, a.conductor(), MPFR_RNDN);
    mpfr_cos(term, angle, MPFR_RNDN);
    mpfr_set_q(q, c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, q, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }
  // decimal digits ~ bits * log10(2)
  const int digits = std::max(6, static_cast<int>(precision_bits * 0.30103) - 2);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, sum);
  mpfr_clears(sum, term, angle, pi, q, static_cast<mpfr_ptr>(nullptr));
  return std::string(buf.data());
}

double approximate_real(const CyclotomicNumber& a) { return std::stod(numeric_real_part(a, 64)); }

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("ratio: zero denominator");
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace eqspin
