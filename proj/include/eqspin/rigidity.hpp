#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqspin/cyclo.hpp"
#include "eqspin/dataset.hpp"
#include "eqspin/lefschetz.hpp"
#include "eqspin/repring.hpp"

namespace eqspin {

enum class SpinSign { Negative, Zero, Positive, UnknownIrrational, NonReal };

std::string to_string(SpinSign s);
SpinSign spin_sign_from_string(const std::string& s);

struct SpinClass {
  bool rational = false;
  /// Meaningful only when rational.
  mpq_class value = 0;
  SpinSign sign = SpinSign::UnknownIrrational;
  /// Decimal estimate of the real part for irrational values.
  std::string estimate;

  friend bool operator==(const SpinClass&, const SpinClass&) = default;
};

/// Exact rationality and sign of a real spin number. Throws
/// InvalidParameters for a non-real input.
SpinClass classify_spin(const CyclotomicNumber& s, unsigned precision_bits = 128);

/// One step of a verdict: a short slug naming the constraint or argument
/// applied, plus a human-readable account of what was checked.
struct Reason {
  std::string anchor;
  std::string detail;
  friend bool operator==(const Reason&, const Reason&) = default;
};

/// Every violated constraint on the eigenspace defects. The bound
/// k_i <= quotient_b_plus - 1 always applies; the sign-pattern lemmas
/// apply when quotient_b_plus = 3 and the k_i sum to 2.
std::vector<Reason> check_k_constraints(const KVector& k, const SpinClass& s, const mpz_class& quotient_b_plus);

struct LiftSweepEntry {
  std::uint32_t q = 0;
  KVector k;
  SpinClass spin;
  /// Norm of the trace identity for this lift, 2^((p-1)(t_0-1-k_0)).
  mpq_class trace_norm = 0;
  friend bool operator==(const LiftSweepEntry&, const LiftSweepEntry&) = default;
};

/// The p lifts e^(2 pi i q/p) tau-hat: shifted vectors k^q_i = k_(i+q),
/// each with the spin number its vector implies and the trace norm.
std::vector<LiftSweepEntry> lift_sweep(const KVector& k, const mpz_class& quotient_b_plus);

struct Prop41Report {
  bool hypotheses_met = false;
  std::string note;
  std::size_t kernel_rank = 0;
  std::size_t dimension = 0;
  bool top_in_kernel = false;
  bool spanned_by_top = false;
  ScalarSpecialization scalar;
  bool a_forced_zero = false;
  /// Present when the kernel pins beta down to a sigma (1-t)^(M-1).
  std::optional<mpz_class> sw_value;
};

/// Parameters (m_i, n_i) with m_i - n_i = k_i, n_i = max(0, 2 - k_i), and
/// l = (b_plus - 1)/2. Throws InvalidParameters if sum k != l + 1 + d.
InstanceParameters derive_prop41_parameters(const KVector& k, std::uint32_t l, std::uint32_t d = 0);

/// Runs the Adams kernel, checks that sigma (1-t)^(M-1) spans it, and
/// applies the xi -> 1, q = p specialization to the scalar a.
Prop41Report verify_prop41(const InstanceParameters& params, std::vector<std::uint32_t> qs = {2});

/// Pseudofree p = 3 fixed-point counts (f1, f2) consistent with the
/// G-signature and Lefschetz relations. Throws InvalidParameters for an
/// impossible quotient_b_plus.
std::vector<std::pair<long, long>> enumerate_pseudofree_p3(const mpz_class& quotient_b_plus, bool homologically_trivial,
                                                           const ManifoldInvariants& manifold = ManifoldInvariants::k3());

enum class Outcome { Contradiction, ConstraintViolation, NoObstruction };

std::string to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

struct QuotientReport {
  mpq_class sigma = 0;
  mpq_class euler = 0;
  bool integral = false;
  friend bool operator==(const QuotientReport&, const QuotientReport&) = default;
};

struct RigidityVerdict {
  Outcome outcome = Outcome::NoObstruction;
  std::optional<CyclotomicNumber> spin_value;
  SpinClass spin;
  std::optional<KVector> k;
  std::vector<LiftSweepEntry> lift_sweep;
  /// Only for p = 3.
  std::optional<QuotientReport> quotient;
  std::optional<std::size_t> kernel_rank;
  std::optional<mpz_class> sw_value;
  std::vector<Reason> reasons;
};

struct VerdictOptions {
  std::vector<std::uint32_t> adams_qs = {2};
  unsigned precision_bits = 128;
};

/// The full constraint pipeline. Throws DatasetError for invalid input.
RigidityVerdict verdict(const FixedPointDataset& d, const VerdictOptions& options = {});

Json cyclotomic_to_json(const CyclotomicNumber& c);
CyclotomicNumber cyclotomic_from_json(const Json& j);
Json verdict_to_json(const RigidityVerdict& v);
RigidityVerdict verdict_from_json(const Json& j);
std::string verdict_to_text(const RigidityVerdict& v);

}  // namespace eqspin
