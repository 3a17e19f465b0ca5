#include "eqspin/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "eqspin/cyclo.hpp"
#include "eqspin/int_polynomial.hpp"
#include "eqspin/integer_kernel.hpp"
#include "eqspin/lefschetz.hpp"
#include "eqspin/repring.hpp"
#include "eqspin/rigidity.hpp"

namespace eqspin::acceptance {
namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failed_.size() < 8) failed_.push_back(what);
    if (!ok) ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::string failures() const {
    std::string s;
    for (const auto& f : failed_) s += (s.empty() ? "" : "; ") + f;
    if (failures_ > failed_.size()) s += "; ... " + std::to_string(failures_) + " failures in all";
    return s;
  }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::string> failed_;
  std::size_t failures_ = 0;
  std::size_t total_ = 0;
};

template <class Body>
CriterionResult timed(int id, std::string name, double budget, Body body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  Checks checks;
  std::string summary;
  try {
    summary = body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && r.seconds > budget) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "took %.3f s, budget %.0f s", r.seconds, budget);
    checks.expect(false, buf);
  }
  r.passed = checks.ok();
  r.detail = r.passed ? summary : checks.failures();
  return r;
}

CyclotomicNumber rat(const mpq_class& q) { return CyclotomicNumber::rational(1, q); }

std::string str(const mpq_class& q) { return q.get_str(); }

// --- dense int64 model of the Adams constraint, kept apart from the library ---

using Dense = std::vector<std::vector<long long>>;  // [t-degree][xi-exponent]

Dense dense_mul(const Dense& a, const Dense& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Dense c(a.size() + b.size() - 1, std::vector<long long>(p, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint32_t x = 0; x < p; ++x)
      if (a[i][x] != 0)
        for (std::size_t j = 0; j < b.size(); ++j)
          for (std::uint32_t y = 0; y < p; ++y) c[i + j][(x + y) % p] += a[i][x] * b[j][y];
  return c;
}

struct DenseInstance {
  std::uint32_t p;
  std::size_t deg;
  Dense generator;
  std::uint32_t top_xi;
  long long top_unit;

  DenseInstance(std::uint32_t prime, const std::vector<std::uint32_t>& m, std::uint32_t d) : p(prime) {
    generator = Dense{std::vector<long long>(p, 0)};
    generator[0][0] = 1;
    deg = 0;
    for (std::uint32_t i = 0; i < p; ++i) {
      Dense factor(2, std::vector<long long>(p, 0));
      factor[0][0] = 1;
      factor[1][i] = -1;
      const std::uint32_t e = i == 0 ? m[0] - d : m[i];
      for (std::uint32_t r = 0; r < e; ++r) generator = dense_mul(generator, factor, p);
      deg += e;
    }
    top_xi = 0;
    top_unit = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
      if (generator[deg][x] != 0) {
        top_xi = x;
        top_unit = generator[deg][x];
      }
    }
  }

  Dense reduce(Dense c) const {
    for (std::size_t e = c.size(); e-- > deg;) {
      for (std::uint32_t x = 0; x < p; ++x) {
        const long long f = c[e][x] * top_unit;  // the unit is +-1
        if (f == 0) continue;
        const std::uint32_t shift = (x + p - top_xi) % p;
        for (std::size_t gi = 0; gi <= deg; ++gi)
          for (std::uint32_t gx = 0; gx < p; ++gx) c[e - deg + gi][(gx + shift) % p] -= f * generator[gi][gx];
      }
    }
    c.resize(deg, std::vector<long long>(p, 0));
    return c;
  }
};

// Columns of the map beta -> psi^q(beta) - q^l prod_i B_i^(n_i) beta, with
// B_i = sum_(e<q) t^e xi^(ie), on the basis t^a xi^b (index a p + b).
std::vector<std::vector<long long>> dense_constraint_columns(const InstanceParameters& params,
                                                             const std::vector<std::uint32_t>& qs) {
  const std::uint32_t p = params.p;
  const DenseInstance inst(p, params.m, params.d);
  const std::size_t dim = inst.deg * p;
  std::vector<std::vector<long long>> cols(dim);
  for (std::uint32_t q : qs) {
    Dense mult{std::vector<long long>(p, 0)};
    long long ql = 1;
    for (std::uint32_t r = 0; r < params.l; ++r) ql *= q;
    mult[0][0] = ql;
    for (std::uint32_t i = 0; i < p; ++i) {
      Dense block(q, std::vector<long long>(p, 0));
      for (std::uint32_t e = 0; e < q; ++e) block[e][(static_cast<std::size_t>(i) * e) % p] = 1;
      for (std::uint32_t r = 0; r < params.n[i]; ++r) mult = dense_mul(mult, block, p);
    }
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t a = col / p, b = col % p;
      Dense basis(a + 1, std::vector<long long>(p, 0));
      basis[a][b] = 1;
      Dense image = dense_mul(basis, mult, p);
      const std::size_t ta = a * q;
      if (image.size() <= ta) image.resize(ta + 1, std::vector<long long>(p, 0));
      for (auto& row : image) for (auto& v : row) v = -v;
      image[ta][(b * q) % p] += 1;
      const Dense reduced = inst.reduce(image);
      for (std::size_t t = 0; t < inst.deg; ++t)
        for (std::uint32_t x = 0; x < p; ++x) cols[col].push_back(reduced[t][x]);
    }
  }
  return cols;
}

std::size_t rational_rank(const std::vector<std::vector<long long>>& cols) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols[0].size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = static_cast<long>(cols[c][r]);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols.size(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Membership in the lattice spanned by echelon rows, in int64.
bool in_echelon_span(const std::vector<std::vector<long long>>& rows, std::vector<long long> x) {
  for (const auto& row : rows) {
    std::size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) continue;
    if (x[piv] % row[piv] != 0) return false;
    const long long f = x[piv] / row[piv];
    if (f != 0)
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= f * row[k];
  }
  for (long long v : x)
    if (v != 0) return false;
  return true;
}

struct OracleStats {
  std::size_t instances = 0;
  std::size_t box_vectors = 0;
};

// Every kernel vector in [-3,3]^dim by meet in the middle; each must lie in
// the solver's lattice, and the solver's basis must lie in the dense kernel
// with matching rank.
void check_oracle_instance(const InstanceParameters& params, const std::vector<std::uint32_t>& qs, Checks& checks,
                           OracleStats& stats) {
  constexpr long long box = 3;
  const auto cols = dense_constraint_columns(params, qs);
  const std::size_t dim = cols.size();
  const std::size_t rows = dim ? cols[0].size() : 0;
  const AdamsKernel kernel = solve_adams_kernel(params, qs);
  std::ostringstream tag;
  tag << "m=(" << params.m[0] << "," << params.m[1] << "," << params.m[2] << ") n=(" << params.n[0] << ","
      << params.n[1] << "," << params.n[2] << ") l=" << params.l << " d=" << params.d << " q=" << qs[0];

  std::vector<std::vector<long long>> basis;
  for (const auto& v : kernel.basis_vectors) {
    std::vector<long long> b;
    for (const auto& x : v) {
      checks.expect(x.fits_slong_p(), tag.str() + ": basis entry too large");
      b.push_back(x.get_si());
    }
    std::vector<long long> image(rows, 0);
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < rows; ++r) image[r] += cols[c][r] * b[c];
    checks.expect(std::all_of(image.begin(), image.end(), [](long long v) { return v == 0; }),
                  tag.str() + ": solver basis vector outside the dense kernel");
    basis.push_back(std::move(b));
  }
  checks.expect(kernel.dimension == dim, tag.str() + ": dimension mismatch");
  checks.expect(kernel.rank() == dim - rational_rank(cols), tag.str() + ": kernel rank differs from dim - rank");

  const std::size_t left = dim / 2, right = dim - left;
  auto enumerate = [&](std::size_t offset, std::size_t count, auto&& visit) {
    std::vector<long long> coeff(count, -box), image(rows, 0);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t r = 0; r < rows; ++r) image[r] += cols[offset + i][r] * -box;
    while (true) {
      visit(coeff, image);
      std::size_t i = 0;
      while (i < count && coeff[i] == box) {
        for (std::size_t r = 0; r < rows; ++r) image[r] -= cols[offset + i][r] * 2 * box;
        coeff[i] = -box;
        ++i;
      }
      if (i == count) break;
      ++coeff[i];
      for (std::size_t r = 0; r < rows; ++r) image[r] += cols[offset + i][r];
    }
  };
  std::map<std::vector<long long>, std::vector<std::vector<long long>>> right_images;
  enumerate(left, right, [&](const std::vector<long long>& c, const std::vector<long long>& image) {
    right_images[image].push_back(c);
  });
  std::size_t found = 0;
  bool all_in_span = true;
  enumerate(0, left, [&](const std::vector<long long>& c, const std::vector<long long>& image) {
    std::vector<long long> target(rows);
    for (std::size_t r = 0; r < rows; ++r) target[r] = -image[r];
    const auto it = right_images.find(target);
    if (it == right_images.end()) return;
    for (const auto& rc : it->second) {
      std::vector<long long> x(c);
      x.insert(x.end(), rc.begin(), rc.end());
      ++found;
      if (all_in_span && !in_echelon_span(basis, x)) all_in_span = false;
    }
  });
  checks.expect(all_in_span, tag.str() + ": brute-force kernel vector outside the solver lattice");
  stats.instances += 1;
  stats.box_vectors += found;
}

FixedPointDataset base(std::uint32_t p, const ManifoldInvariants& m, bool trivial) {
  FixedPointDataset d;
  d.p = p;
  d.manifold = m;
  d.quotient_b_plus = m.b_plus;
  d.homologically_trivial = trivial;
  return d;
}

int lift_sign(long residue_sum) { return residue_sum % 2 == 0 ? 1 : -1; }

}  // namespace

FixedPointDataset random_dataset(std::uint32_t p, std::mt19937_64& rng, const ManifoldInvariants& m, bool lift_signs) {
  std::uniform_int_distribution<long> rot(1, p - 1), points(0, 6), surfaces(0, 3), ff(-6, 6), genus(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  auto d = base(p, m, false);
  for (long i = points(rng); i > 0; --i) {
    IsolatedPoint pt{rot(rng), rot(rng), 1};
    pt.epsilon = lift_signs ? lift_sign(pt.l_alpha + pt.l_beta) : (coin(rng) ? 1 : -1);
    d.isolated.push_back(pt);
  }
  for (long i = surfaces(rng); i > 0; --i) {
    FixedSurface s{ff(rng), genus(rng), rot(rng), 1};
    s.epsilon = lift_signs ? lift_sign(s.l_theta) : (coin(rng) ? 1 : -1);
    d.surfaces.push_back(s);
  }
  return d;
}

std::vector<FixedPointDataset> trivial_k3_corpus(std::size_t size, std::mt19937_64& rng, const ManifoldInvariants& m) {
  std::uniform_int_distribution<long> rot(1, 2), few(0, 30), sphere_count(1, 14), ff(-4, 0);
  std::uniform_int_distribution<int> coin(0, 1), percent(0, 99);
  auto point = [&]() {
    IsolatedPoint pt{rot(rng), rot(rng), 1};
    pt.epsilon = percent(rng) < 85 ? lift_sign(pt.l_alpha + pt.l_beta) : (coin(rng) ? 1 : -1);
    return pt;
  };
  auto sphere = [&](long self) {
    FixedSurface s{self, 0, rot(rng), 1};
    s.epsilon = percent(rng) < 85 ? lift_sign(s.l_theta) : (coin(rng) ? 1 : -1);
    return s;
  };
  std::vector<FixedPointDataset> out;
  const std::size_t survivors = size / 5;
  const std::size_t per_kind = (size - survivors + 2) / 3;
  for (std::size_t i = 0; i < per_kind; ++i) {
    auto d = base(3, m, true);
    const long n = coin(rng) ? 24 : few(rng);
    for (long k = 0; k < n; ++k) d.isolated.push_back(point());
    out.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    auto d = base(3, m, true);
    for (long k = sphere_count(rng); k > 0; --k) d.surfaces.push_back(sphere(ff(rng)));
    out.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    auto d = base(3, m, true);
    for (long k = few(rng) % 25; k > 0; --k) d.isolated.push_back(point());
    for (long k = sphere_count(rng) % 12 + 1; k > 0; --k) d.surfaces.push_back(sphere(ff(rng)));
    out.push_back(std::move(d));
  }
  // Data passing the signature and Lefschetz checks for a trivial action:
  // f1 - f2 = D in {0, -8, -16}, 24 - f1 - f2 points' worth of spheres and
  // total self-intersection -12 - D/4.
  const long diffs[] = {0, -8, -16};
  for (std::size_t i = 0; out.size() < size; ++i) {
    const long diff = diffs[i % 3];
    const long max_f1 = 11 + diff / 2;
    const long f1 = std::uniform_int_distribution<long>(0, max_f1)(rng);
    const long f2 = f1 - diff;
    const long spheres = 12 - f1 + diff / 2;
    auto d = base(3, m, true);
    for (long k = 0; k < f1; ++k) d.isolated.push_back(coin(rng) ? IsolatedPoint{1, 2, -1} : IsolatedPoint{2, 1, -1});
    for (long k = 0; k < f2; ++k) d.isolated.push_back(coin(rng) ? IsolatedPoint{1, 1, 1} : IsolatedPoint{2, 2, 1});
    std::vector<long> self(spheres, 0);
    std::uniform_int_distribution<long> pick(0, spheres - 1);
    for (long e = 12 + diff / 4; e > 0; --e) self[pick(rng)] -= 1;
    for (long s : self) {
      const long l = rot(rng);
      d.surfaces.push_back({s, 0, l, lift_sign(l)});
    }
    out.push_back(std::move(d));
  }
  return out;
}

CriterionResult fermat_regression(const Options& o) {
  return timed(1, "fermat-regression", 1.0, [&](Checks& c) {
    auto d = fermat_quartic_dataset();
    d.manifold = o.k3;
    const mpq_class index = spin_index(o.k3);
    c.expect(index == 2, "spin_index: got " + str(index) + ", expected 2");
    const auto s = spin_number(d, 1);
    c.expect(s == rat(2), "spin number: got " + s.to_string() + ", expected 2");
    c.expect(spin_number_direct(d) == rat(2), "literal fixed-point formula differs from 2");
    const mpq_class sigma_q = signature_quotient_p3(d);
    c.expect(sigma_q == -4, "sigma(X/Z_3): got " + str(sigma_q) + ", expected -4");
    c.expect(mpq_class(3) - sigma_q == 7, "b_minus(X/Z_3): expected 7");
    const mpq_class chi_q = euler_quotient_p3(d);
    c.expect(chi_q == 12, "chi(X/Z_3): got " + str(chi_q) + ", expected 12");
    try {
      const auto k = k_vector(spin_tuple(d));
      c.expect(k == KVector{3, {2, 0, 0}}, "k-vector: got " + k.to_string() + ", expected (2, 0, 0)");
    } catch (const std::exception& e) {
      c.expect(false, std::string("k-vector: ") + e.what());
    }
    const auto v = verdict(d);
    c.expect(v.outcome == Outcome::NoObstruction, "verdict: got " + to_string(v.outcome));
    return std::string("spin 2, sigma(X/Z_3) -4, b_minus 7, chi(X/Z_3) 12, k (2, 0, 0), NoObstruction");
  });
}

CriterionResult pseudofree_enumeration(const Options& o) {
  return timed(2, "pseudofree-enumeration", 1.0, [&](Checks& c) {
    using Pairs = std::vector<std::pair<long, long>>;
    c.expect(enumerate_pseudofree_p3(1, false, o.k3) == Pairs{{0, 3}}, "b_plus(X/Z_3) = 1: expected {(0,3)}");
    c.expect(enumerate_pseudofree_p3(3, false, o.k3) == Pairs{{0, 12}, {3, 6}, {6, 0}},
             "b_plus(X/Z_3) = 3: expected {(0,12),(3,6),(6,0)}");
    c.expect(enumerate_pseudofree_p3(3, true, o.k3).empty(), "trivial: expected the empty set");
    return std::string("{(0,3)}, {(0,12),(3,6),(6,0)}, trivial {}");
  });
}

CriterionResult adams_kernel_instance(const Options&) {
  return timed(3, "adams-kernel", 1.0, [&](Checks& c) {
    const InstanceParameters params{3, {2, 2, 2}, {2, 1, 1}, 1, 0, std::nullopt};
    const IntMatrix a = adams_constraint_matrix(params, {2});
    c.expect(a.size() == 18 && a[0].size() == 18, "constraint matrix is not 18x18");
    const auto r = verify_prop41(params, {2});
    c.expect(r.hypotheses_met, "hypotheses reported unmet");
    c.expect(r.top_in_kernel, "sigma (1-t)^5 not in the kernel");
    c.expect(r.kernel_rank == 1, "kernel rank " + std::to_string(r.kernel_rank) + ", expected 1");
    c.expect(r.spanned_by_top, "kernel not spanned by sigma (1-t)^5");
    c.expect(r.a_forced_zero, "specialization leaves a free");
    c.expect(r.sw_value && *r.sw_value == 0, "SW not 0");
    return std::string("18x18, rank 1, spanned by sigma (1-t)^5, a = 0, SW = 0");
  });
}

CriterionResult contradiction_pipeline(const Options& o) {
  return timed(4, "contradiction-pipeline", 0, [&](Checks& c) {
    std::mt19937_64 rng(o.seed ^ 0x4b33);
    const auto corpus = trivial_k3_corpus(o.trivial_corpus, rng, o.k3);
    c.expect(corpus.size() >= 500, "corpus smaller than 500");
    std::size_t kinds[3] = {0, 0, 0};
    std::map<Outcome, std::size_t> outcomes;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& d = corpus[i];
      kinds[d.surfaces.empty() ? 0 : (d.isolated.empty() ? 1 : 2)] += 1;
      const auto v = verdict(d);
      outcomes[v.outcome] += 1;
      c.expect(v.outcome != Outcome::NoObstruction, "dataset " + std::to_string(i) + " reached NoObstruction");
    }
    c.expect(kinds[0] > 0 && kinds[1] > 0 && kinds[2] > 0, "corpus misses a fixed-set kind");
    c.expect(outcomes[Outcome::Contradiction] > 0, "no dataset reached the contradiction chain");
    std::ostringstream os;
    os << corpus.size() << " datasets (" << kinds[0] << " isolated-only, " << kinds[1] << " surfaces-only, " << kinds[2]
       << " mixed): " << outcomes[Outcome::Contradiction] << " Contradiction, "
       << outcomes[Outcome::ConstraintViolation] << " ConstraintViolation";
    return os.str();
  });
}

CriterionResult property_suites(const Options& o) {
  return timed(5, "property-suites", 0, [&](Checks& c) {
    std::mt19937_64 rng(o.seed ^ 0x5e7);
    const std::uint32_t primes[] = {3, 5, 7};
    for (std::size_t n = 0; n < o.property_datasets; ++n) {
      const std::uint32_t p = primes[n % 3];
      const auto lift = random_dataset(p, rng, o.k3, true);
      const auto any = random_dataset(p, rng, o.k3, false);
      const std::string tag = "dataset " + std::to_string(n) + " (p=" + std::to_string(p) + ")";
      for (std::uint32_t j = 1; j < p; ++j) {
        const auto s = spin_number(lift, j);
        c.expect(s.is_real(), tag + ": Spin(" + std::to_string(j) + ") not real");
        c.expect(s == spin_number(lift, p - j), tag + ": Spin(" + std::to_string(j) + ") != Spin(p-j)");
        c.expect(spin_number(any, j).is_real(), tag + ": unconstrained signs, Spin(" + std::to_string(j) + ") not real");
      }
      c.expect(spin_number(any, 1) == spin_number_direct(any), tag + ": half-weight and literal formulas differ");
      if (p == 3) {
        // csc(pi/3) csc(2 pi/3) = 4/3 and cos(pi l/3) csc^2(pi l/3) = +-2/3
        mpq_class expected = 0;
        for (const auto& pt : any.isolated) expected -= ratio(pt.epsilon, 3);
        for (const auto& s : any.surfaces) expected += ratio(s.self_intersection * s.epsilon * (s.l_theta == 1 ? 1 : -1), 6);
        const auto s = spin_number(any, 1);
        c.expect(s.is_rational() && s.to_rational() == expected, tag + ": p = 3 spin is not " + str(expected));
      }
    }
    std::uniform_int_distribution<long> entry(-6, 6), common(-3, 3);
    std::size_t tuples = 0;
    for (std::uint32_t p : primes) {
      for (int rep = 0; rep < 120; ++rep, ++tuples) {
        KVector k{p, std::vector<mpz_class>(p)};
        mpz_class rest = 0;
        for (std::uint32_t i = 1; i < p; ++i) rest += (k.k[i] = entry(rng));
        k.k[0] = 2 - rest;
        c.expect(k_vector(synthesize(k)) == k, "k-vector round trip fails for " + k.to_string());
      }
      for (long e = -3; e <= 3; ++e) {
        KVector k{p, std::vector<mpz_class>(p, e)};
        k.k[0] = 2 - static_cast<long>(p - 1) * e;
        const mpq_class k0(k.k[0]);
        const mpq_class closed = mpq_class(p) * k0 / (p - 1) - mpq_class(2) / (p - 1);
        c.expect(synthesize(k).values[1] == rat(closed), "equal-defect spin fails for " + k.to_string());
      }
    }
    return std::to_string(o.property_datasets * 2) + " random datasets over p = 3, 5, 7, " + std::to_string(tuples) +
           " random k-tuples; " + std::to_string(c.total()) + " checks";
  });
}

CriterionResult algebraic_identities(const Options&) {
  return timed(6, "algebraic-identities", 0, [&](Checks& c) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      CyclotomicNumber prod = CyclotomicNumber::rational(p, 1);
      for (std::uint32_t j = 1; j < p; ++j) prod = prod * (CyclotomicNumber::rational(p, 1) + CyclotomicNumber::zeta(p, j));
      c.expect(prod == CyclotomicNumber::rational(p, 1), "prod (1 + zeta_p^j) != 1 for p = " + std::to_string(p));
      const auto sigma = RepRingElement::sigma(p);
      for (std::uint32_t k = 0; k < p; ++k) {
        c.expect(sigma * RepRingElement::one_minus_t_xi(p, k) == sigma * RepRingElement::one_minus_t_xi(p, 0),
                 "sigma (1 - t xi^k) != sigma (1 - t) for p = " + std::to_string(p));
      }
    }
    const auto csc = half_angle_csc(1, 3);
    c.expect(csc * csc == CyclotomicNumber::rational(1, mpq_class(4, 3)), "csc^2(pi/3) != 4/3");
    for (std::uint32_t n = 1; n <= 60; ++n) {
      const auto z = CyclotomicNumber::zeta(n);
      CyclotomicNumber acc(n);
      const auto& coeffs = cyclotomic_polynomial(n).coeffs();
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + CyclotomicNumber::rational(n, mpq_class(coeffs[i]));
      c.expect(acc.is_zero(), "Phi_" + std::to_string(n) + "(zeta_" + std::to_string(n) + ") != 0");
    }
    return std::string("p = 3, 5, 7 norms and sigma identities, csc^2(pi/3) = 4/3, Phi_n(zeta_n) = 0 for n <= 60");
  });
}

CriterionResult kernel_oracle(const Options&) {
  return timed(7, "kernel-oracle", 30.0, [&](Checks& c) {
    OracleStats stats;
    for (std::uint32_t total = 1; total <= 3; ++total) {
      for (std::uint32_t m0 = 0; m0 <= total; ++m0) {
        for (std::uint32_t m1 = 0; m0 + m1 <= total; ++m1) {
          const std::vector<std::uint32_t> m{m0, m1, total - m0 - m1};
          for (std::uint32_t d = 0; d <= std::min(m0, total - 1); ++d) {
            for (std::uint32_t l = 0; l + d + 1 <= total; ++l) {
              const std::uint32_t sum_n = total - 1 - d - l;
              for (std::uint32_t n0 = 0; n0 <= sum_n; ++n0) {
                for (std::uint32_t n1 = 0; n0 + n1 <= sum_n; ++n1) {
                  const InstanceParameters params{3, m, {n0, n1, sum_n - n0 - n1}, l, d, std::nullopt};
                  for (std::uint32_t q : {2u, 3u}) check_oracle_instance(params, {q}, c, stats);
                }
              }
            }
          }
        }
      }
    }
    return std::to_string(stats.instances) + " instances with p = 3, sum m <= 3; " + std::to_string(stats.box_vectors) +
           " kernel vectors in [-3,3]^dim, all in the solver lattice";
  });
}

std::vector<CriterionResult> run_all(const Options& o) {
  return {fermat_regression(o),      pseudofree_enumeration(o), adams_kernel_instance(o), contradiction_pipeline(o),
          property_suites(o),        algebraic_identities(o),   kernel_oracle(o)};
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

std::string to_text(const std::vector<CriterionResult>& results, bool timings) {
  std::ostringstream os;
  for (const auto& r : results) {
    char timing[48];
    std::snprintf(timing, sizeof timing, "%.3f s", r.seconds);
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name;
    if (timings) os << " (" << timing << ")";
    os << "  " << r.detail << "\n";
  }
  return os.str();
}

Json to_json(const std::vector<CriterionResult>& results, bool timings) {
  Json items = Json::array();
  for (const auto& r : results) {
    Json item{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) {
      item["seconds"] = r.seconds;
      item["budget_seconds"] = r.budget_seconds;
    }
    items.push_back(std::move(item));
  }
  return Json{{"passed", all_passed(results)}, {"criteria", items}};
}

}  // namespace eqspin::acceptance
