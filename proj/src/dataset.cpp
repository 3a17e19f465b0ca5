#include "eqspin/dataset.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "eqspin/errors.hpp"
#include "eqspin/int_polynomial.hpp"

namespace eqspin {
namespace {

// Collects schema problems while walking a document, so that one parse
// reports all of them.
class Reader {
 public:
  std::vector<std::string> errors;

  void expect_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) {
      errors.push_back(where + ": expected an object");
      return;
    }
    for (const auto& item : obj.items()) {
      if (!allowed.count(item.key())) errors.push_back(where + ": unknown key '" + item.key() + "'");
    }
    for (const auto& key : allowed) {
      if (!obj.contains(key)) errors.push_back(where + ": missing key '" + key + "'");
    }
  }

  mpz_class integer(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) return 0;
    const Json& v = obj.at(key);
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? mpz_class(std::to_string(v.get<std::uint64_t>()))
                                    : mpz_class(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
      mpz_class out;
      const auto& s = v.get_ref<const std::string&>();
      if (!s.empty() && out.set_str(s, 10) == 0) return out;
    }
    errors.push_back(where + "." + key + ": expected an integer");
    return 0;
  }

  long small_integer(const Json& obj, const std::string& key, const std::string& where) {
    const mpz_class v = integer(obj, key, where);
    if (!v.fits_slong_p()) {
      errors.push_back(where + "." + key + ": value out of range");
      return 0;
    }
    return v.get_si();
  }

  bool boolean(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) return false;
    const Json& v = obj.at(key);
    if (v.is_boolean()) return v.get<bool>();
    errors.push_back(where + "." + key + ": expected a boolean");
    return false;
  }

  const Json* array(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) return nullptr;
    const Json& v = obj.at(key);
    if (v.is_array()) return &v;
    errors.push_back(where + "." + key + ": expected an array");
    return nullptr;
  }
};

long reduce_residue(long l, std::uint32_t p) {
  const long r = l % static_cast<long>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

ManifoldInvariants ManifoldInvariants::k3() {
  ManifoldInvariants m;
  m.b1 = 0;
  m.b_plus = 3;
  m.signature = -16;
  m.euler = 24;
  m.is_spin = true;
  return m;
}

bool ManifoldInvariants::is_homotopy_k3() const { return *this == k3(); }

std::vector<std::string> ManifoldInvariants::violations() const {
  std::vector<std::string> out;
  if (b1 != 0) out.emplace_back("manifold.b1 must be 0");
  if (b_plus < 0) out.emplace_back("manifold.b_plus must be non-negative");
  if (b_minus() < 0) out.emplace_back("manifold.b_plus - signature (b_minus) must be non-negative");
  if (euler != 2 + b_plus + b_minus()) {
    out.emplace_back("manifold.euler must equal 2 + b_plus + b_minus = " + mpz_class(2 + b_plus + b_minus()).get_str());
  }
  if (!is_spin) {
    out.emplace_back("manifold.is_spin must be true: spin numbers need a spin structure");
  } else if (signature % 16 != 0) {
    out.emplace_back("manifold.signature must be divisible by 16 for a spin manifold");
  }
  return out;
}

std::vector<std::string> FixedPointDataset::violations() const {
  std::vector<std::string> out;
  if (p < 3 || !is_prime(p)) out.push_back("p = " + std::to_string(p) + " is not an odd prime");
  for (auto& v : manifold.violations()) out.push_back(std::move(v));
  if (quotient_b_plus < 0) out.emplace_back("quotient_b_plus must be non-negative");
  if (homologically_trivial && quotient_b_plus != manifold.b_plus) {
    out.emplace_back("homologically trivial action needs quotient_b_plus = manifold.b_plus");
  }
  if (p == 0) return out;
  for (std::size_t i = 0; i < isolated.size(); ++i) {
    const auto& pt = isolated[i];
    const std::string where = "isolated[" + std::to_string(i) + "]";
    if (reduce_residue(pt.l_alpha, p) == 0 || reduce_residue(pt.l_beta, p) == 0) {
      out.push_back(where + ": rotation number divisible by p");
    }
    if (pt.epsilon != 1 && pt.epsilon != -1) out.push_back(where + ": epsilon must be +1 or -1");
  }
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    const auto& s = surfaces[i];
    const std::string where = "surfaces[" + std::to_string(i) + "]";
    if (reduce_residue(s.l_theta, p) == 0) out.push_back(where + ": rotation number divisible by p");
    if (s.epsilon != 1 && s.epsilon != -1) out.push_back(where + ": epsilon must be +1 or -1");
    if (s.genus < 0) out.push_back(where + ": genus must be non-negative");
  }
  return out;
}

void FixedPointDataset::validate() const {
  auto v = violations();
  if (!v.empty()) throw DatasetError(std::move(v));
}

FixedPointDataset dataset_from_json(const Json& doc) {
  Reader r;
  FixedPointDataset d;
  r.expect_keys(doc, "document", {"p", "manifold", "quotient_b_plus", "homologically_trivial", "isolated", "surfaces"});
  const long p = r.small_integer(doc, "p", "document");
  if (p < 3 || p > std::numeric_limits<std::int32_t>::max() || !is_prime(static_cast<std::uint64_t>(p))) {
    r.errors.push_back("p = " + std::to_string(p) + " is not an odd prime");
  } else {
    d.p = static_cast<std::uint32_t>(p);
  }
  if (doc.is_object() && doc.contains("manifold")) {
    const Json& m = doc.at("manifold");
    r.expect_keys(m, "manifold", {"b1", "b_plus", "signature", "euler", "is_spin"});
    d.manifold.b1 = r.integer(m, "b1", "manifold");
    d.manifold.b_plus = r.integer(m, "b_plus", "manifold");
    d.manifold.signature = r.integer(m, "signature", "manifold");
    d.manifold.euler = r.integer(m, "euler", "manifold");
    d.manifold.is_spin = r.boolean(m, "is_spin", "manifold");
  }
  d.quotient_b_plus = r.integer(doc, "quotient_b_plus", "document");
  d.homologically_trivial = r.boolean(doc, "homologically_trivial", "document");
  if (const Json* pts = r.array(doc, "isolated", "document")) {
    for (std::size_t i = 0; i < pts->size(); ++i) {
      const std::string where = "isolated[" + std::to_string(i) + "]";
      const Json& e = (*pts)[i];
      r.expect_keys(e, where, {"l_alpha", "l_beta", "epsilon"});
      IsolatedPoint pt;
      pt.l_alpha = r.small_integer(e, "l_alpha", where);
      pt.l_beta = r.small_integer(e, "l_beta", where);
      pt.epsilon = static_cast<int>(r.small_integer(e, "epsilon", where));
      d.isolated.push_back(pt);
    }
  }
  if (const Json* sfs = r.array(doc, "surfaces", "document")) {
    for (std::size_t i = 0; i < sfs->size(); ++i) {
      const std::string where = "surfaces[" + std::to_string(i) + "]";
      const Json& e = (*sfs)[i];
      r.expect_keys(e, where, {"self_intersection", "genus", "l_theta", "epsilon"});
      FixedSurface s;
      s.self_intersection = r.integer(e, "self_intersection", where);
      s.genus = r.integer(e, "genus", where);
      s.l_theta = r.small_integer(e, "l_theta", where);
      s.epsilon = static_cast<int>(r.small_integer(e, "epsilon", where));
      d.surfaces.push_back(s);
    }
  }
  if (!r.errors.empty()) {
    for (auto& v : d.manifold.violations()) r.errors.push_back(std::move(v));
    throw DatasetError(std::move(r.errors));
  }
  d.validate();
  for (auto& pt : d.isolated) {
    pt.l_alpha = reduce_residue(pt.l_alpha, d.p);
    pt.l_beta = reduce_residue(pt.l_beta, d.p);
  }
  for (auto& s : d.surfaces) s.l_theta = reduce_residue(s.l_theta, d.p);
  return d;
}

FixedPointDataset parse_dataset(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw DatasetError({std::string("malformed JSON: ") + e.what()});
  }
  return dataset_from_json(doc);
}

FixedPointDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read " + path.string());
  return parse_dataset(buf.str());
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json dataset_to_json(const FixedPointDataset& d) {
  Json doc;
  doc["p"] = d.p;
  doc["manifold"] = {{"b1", integer_to_json(d.manifold.b1)},
                     {"b_plus", integer_to_json(d.manifold.b_plus)},
                     {"signature", integer_to_json(d.manifold.signature)},
                     {"euler", integer_to_json(d.manifold.euler)},
                     {"is_spin", d.manifold.is_spin}};
  doc["quotient_b_plus"] = integer_to_json(d.quotient_b_plus);
  doc["homologically_trivial"] = d.homologically_trivial;
  doc["isolated"] = Json::array();
  for (const auto& pt : d.isolated) {
    doc["isolated"].push_back({{"l_alpha", pt.l_alpha}, {"l_beta", pt.l_beta}, {"epsilon", pt.epsilon}});
  }
  doc["surfaces"] = Json::array();
  for (const auto& s : d.surfaces) {
    doc["surfaces"].push_back({{"self_intersection", integer_to_json(s.self_intersection)},
                               {"genus", integer_to_json(s.genus)},
                               {"l_theta", s.l_theta},
                               {"epsilon", s.epsilon}});
  }
  return doc;
}

std::string serialize_dataset(const FixedPointDataset& d) { return dataset_to_json(d).dump(2); }

HalfWeightData normalize_half_weights(const FixedPointDataset& d) {
  HalfWeightData out;
  out.p = d.p;
  const long p = d.p;
  for (const auto& pt : d.isolated) {
    const long a = reduce_residue(pt.l_alpha, d.p);
    const long b = reduce_residue(pt.l_beta, d.p);
    out.points.push_back({pt.epsilon == 1 ? a : a + p, b});
  }
  for (const auto& s : d.surfaces) {
    const long c = reduce_residue(s.l_theta, d.p);
    out.surfaces.push_back({s.epsilon == 1 ? c : c + p, s.self_intersection, s.genus});
  }
  return out;
}

bool is_even_type_lift(const HalfWeightPoint& w) { return (w.a + w.b) % 2 == 0; }
bool is_even_type_lift(const HalfWeightSurface& w) { return w.c % 2 == 0; }

std::pair<long, long> count_p3_types(const FixedPointDataset& d) {
  if (d.p != 3) throw InvalidParameters("point types (1,2)/(1,1) are only defined for p = 3");
  long f1 = 0, f2 = 0;
  for (const auto& pt : d.isolated) {
    // (1,2) ~ (2,1) have product 2 mod 3, (1,1) ~ (2,2) have product 1
    const long prod = reduce_residue(pt.l_alpha * pt.l_beta, 3);
    if (prod == 2) ++f1;
    if (prod == 1) ++f2;
  }
  return {f1, f2};
}

FixedPointDataset fermat_quartic_dataset() {
  FixedPointDataset d;
  d.p = 3;
  d.manifold = ManifoldInvariants::k3();
  d.quotient_b_plus = 3;
  d.homologically_trivial = false;
  d.isolated.assign(6, IsolatedPoint{1, 2, -1});
  return d;
}

}  // namespace eqspin
