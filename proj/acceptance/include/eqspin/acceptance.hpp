#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqspin/dataset.hpp"

namespace eqspin::acceptance {

struct Options {
  /// Invariants used wherever the battery needs a homotopy K3. Swapping
  /// in a wrong value is the negative control for the battery itself.
  ManifoldInvariants k3 = ManifoldInvariants::k3();
  std::uint64_t seed = 20241016;
  std::size_t property_datasets = 1002;
  std::size_t trivial_corpus = 660;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Summary on success; the failing checks otherwise.
  std::string detail;
  double seconds = 0;
  /// Zero when the criterion has no runtime budget.
  double budget_seconds = 0;
};

CriterionResult fermat_regression(const Options& o);
CriterionResult pseudofree_enumeration(const Options& o);
CriterionResult adams_kernel_instance(const Options& o);
CriterionResult contradiction_pipeline(const Options& o);
CriterionResult property_suites(const Options& o);
CriterionResult algebraic_identities(const Options& o);
CriterionResult kernel_oracle(const Options& o);

std::vector<CriterionResult> run_all(const Options& o = {});
bool all_passed(const std::vector<CriterionResult>& results);

/// One "PASS"/"FAIL" line per criterion. Without timings the output is
/// byte-identical across runs.
std::string to_text(const std::vector<CriterionResult>& results, bool timings = true);
Json to_json(const std::vector<CriterionResult>& results, bool timings = true);

/// Generators shared by the battery and the unit tests.
FixedPointDataset random_dataset(std::uint32_t p, std::mt19937_64& rng, const ManifoldInvariants& m, bool lift_signs);
std::vector<FixedPointDataset> trivial_k3_corpus(std::size_t size, std::mt19937_64& rng, const ManifoldInvariants& m);

}  // namespace eqspin::acceptance
