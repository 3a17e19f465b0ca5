#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace eqspin {

using Json = nlohmann::ordered_json;

struct ManifoldInvariants {
  mpz_class b1 = 0;
  mpz_class b_plus = 0;
  mpz_class signature = 0;
  mpz_class euler = 2;
  bool is_spin = true;

  /// Homotopy K3: sigma = -16, chi = 24, b_plus = 3.
  static ManifoldInvariants k3();

  mpz_class b_minus() const { return b_plus - signature; }
  bool is_homotopy_k3() const;
  /// Names of broken invariants (empty when consistent).
  std::vector<std::string> violations() const;

  friend bool operator==(const ManifoldInvariants&, const ManifoldInvariants&) = default;
};

/// Isolated fixed point with rotation angles 2 pi l / p on the two
/// normal planes and the sign of the lifted action on the spin fibre.
struct IsolatedPoint {
  long l_alpha = 1;
  long l_beta = 1;
  int epsilon = 1;
  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};

struct FixedSurface {
  mpz_class self_intersection = 0;
  mpz_class genus = 0;
  long l_theta = 1;
  int epsilon = 1;
  friend bool operator==(const FixedSurface&, const FixedSurface&) = default;
};

struct FixedPointDataset {
  std::uint32_t p = 3;
  ManifoldInvariants manifold;
  mpz_class quotient_b_plus = 0;
  bool homologically_trivial = false;
  std::vector<IsolatedPoint> isolated;
  std::vector<FixedSurface> surfaces;

  /// Every violated structural invariant, one message each.
  std::vector<std::string> violations() const;
  /// Throws DatasetError when violations() is non-empty.
  void validate() const;

  friend bool operator==(const FixedPointDataset&, const FixedPointDataset&) = default;
};

/// Residues mod 2p carrying the rotation number and the spin sign at once.
struct HalfWeightPoint {
  long a = 0;
  long b = 0;
};

struct HalfWeightSurface {
  long c = 0;
  mpz_class self_intersection = 0;
  mpz_class genus = 0;
};

struct HalfWeightData {
  std::uint32_t p = 3;
  std::vector<HalfWeightPoint> points;
  std::vector<HalfWeightSurface> surfaces;
};

/// Reads a dataset document; rotation numbers are reduced into 1..p-1.
/// Throws DatasetError listing every schema or invariant violation.
FixedPointDataset parse_dataset(const std::string& document);
FixedPointDataset dataset_from_json(const Json& document);
/// Throws std::ios_base::failure when the file cannot be read.
FixedPointDataset load_dataset(const std::filesystem::path& path);

Json dataset_to_json(const FixedPointDataset& d);
std::string serialize_dataset(const FixedPointDataset& d);

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones
/// as decimal strings.
Json integer_to_json(const mpz_class& v);

/// Point (l_alpha, l_beta, +1) -> (l_alpha, l_beta); sign -1 shifts a by p.
/// Surface (l_theta, +1) -> c = l_theta; sign -1 shifts c by p.
HalfWeightData normalize_half_weights(const FixedPointDataset& d);

/// True when the residues are those of an order-p lift: a + b even for
/// points and c even for surfaces.
bool is_even_type_lift(const HalfWeightPoint& w);
bool is_even_type_lift(const HalfWeightSurface& w);

/// (f1, f2): points of type (1,2) and of type (1,1), up to order and
/// simultaneous sign. Throws InvalidParameters unless p = 3.
std::pair<long, long> count_p3_types(const FixedPointDataset& d);

/// The order-3 symmetry of the Fermat quartic: six isolated points of
/// type (1,2), no fixed surfaces, b_plus of the quotient equal to 3.
FixedPointDataset fermat_quartic_dataset();

}  // namespace eqspin
