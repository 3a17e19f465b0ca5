#include <doctest.h>

#include "eqspin/dataset.hpp"
#include "eqspin/errors.hpp"

using namespace eqspin;

namespace {

const char* kFermat = R"({
  "p": 3,
  "manifold": {"b1": 0, "b_plus": 3, "signature": -16, "euler": 24, "is_spin": true},
  "quotient_b_plus": 3,
  "homologically_trivial": false,
  "isolated": [
    {"l_alpha": 1, "l_beta": 2, "epsilon": -1}, {"l_alpha": 1, "l_beta": 2, "epsilon": -1},
    {"l_alpha": 1, "l_beta": 2, "epsilon": -1}, {"l_alpha": 1, "l_beta": 2, "epsilon": -1},
    {"l_alpha": 1, "l_beta": 2, "epsilon": -1}, {"l_alpha": 1, "l_beta": 2, "epsilon": -1}
  ],
  "surfaces": []
})";

std::vector<std::string> errors_of(const std::string& doc) {
  try {
    parse_dataset(doc);
  } catch (const DatasetError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
  for (const auto& e : errors) {
    if (e.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parsing the Fermat quartic document") {
  const auto d = parse_dataset(kFermat);
  CHECK(d == fermat_quartic_dataset());
  CHECK(d.manifold.is_homotopy_k3());
  CHECK(count_p3_types(d) == std::pair<long, long>{6, 0});
  // serialization is a fixed point after one parse
  CHECK(parse_dataset(serialize_dataset(d)) == d);
  CHECK(serialize_dataset(parse_dataset(serialize_dataset(d))) == serialize_dataset(d));
}

TEST_CASE("schema and invariant violations are all reported") {
  std::string doc = kFermat;
  doc.replace(doc.find("\"l_alpha\": 1"), 12, "\"l_alpha\": 0");
  CHECK(mentions(errors_of(doc), "rotation number divisible by p"));

  doc = kFermat;
  doc.replace(doc.find("\"homologically_trivial\": false"), 30, "\"homologically_trivial\": true");
  doc.replace(doc.find("\"quotient_b_plus\": 3"), 20, "\"quotient_b_plus\": 1");
  CHECK(mentions(errors_of(doc), "quotient_b_plus = manifold.b_plus"));

  doc = kFermat;
  doc.replace(doc.find("\"surfaces\": []"), 14, "\"surfaces\": [], \"color\": 1");
  CHECK(mentions(errors_of(doc), "unknown key 'color'"));

  doc = kFermat;
  doc.replace(doc.find("\"p\": 3"), 6, "\"p\": 4");
  doc.replace(doc.find("\"euler\": 24"), 11, "\"euler\": 25");
  const auto errs = errors_of(doc);
  CHECK(mentions(errs, "not an odd prime"));
  CHECK(mentions(errs, "manifold.euler"));

  CHECK(mentions(errors_of("{"), "malformed JSON"));
  CHECK(mentions(errors_of("[]"), "expected an object"));
  CHECK(mentions(errors_of(R"({"p": 3})"), "missing key 'manifold'"));
}

TEST_CASE("arbitrary precision integers and residue reduction") {
  std::string doc = kFermat;
  doc.replace(doc.find("\"isolated\": ["), 13,
              "\"isolated\": [{\"l_alpha\": -2, \"l_beta\": 5, \"epsilon\": 1},");
  doc.replace(doc.find("\"surfaces\": []"), 14,
              R"("surfaces": [{"self_intersection": "-123456789012345678901234567890", "genus": 0, "l_theta": 1, "epsilon": 1}])");
  const auto d = parse_dataset(doc);
  CHECK(d.isolated.front() == IsolatedPoint{1, 2, 1});
  CHECK(d.surfaces.front().self_intersection == mpz_class("-123456789012345678901234567890"));
  const auto json = dataset_to_json(d);
  CHECK(json["surfaces"][0]["self_intersection"] == "-123456789012345678901234567890");
  CHECK(parse_dataset(serialize_dataset(d)) == d);
}

TEST_CASE("half-weight normalization") {
  FixedPointDataset d;
  d.p = 3;
  d.manifold = ManifoldInvariants::k3();
  d.quotient_b_plus = 3;
  d.isolated = {{1, 1, -1}, {1, 1, 1}, {1, 2, -1}};
  d.surfaces = {{-2, 0, 1, -1}, {-2, 0, 1, 1}};
  const auto hw = normalize_half_weights(d);
  CHECK(hw.points[0].a == 4);
  CHECK(hw.points[0].b == 1);
  CHECK(hw.points[1].a == 1);
  CHECK(hw.points[1].b == 1);
  CHECK(hw.points[2].a == 4);
  CHECK(hw.surfaces[0].c == 4);
  CHECK(hw.surfaces[1].c == 1);
  CHECK_FALSE(is_even_type_lift(hw.points[0]));
  CHECK(is_even_type_lift(hw.points[1]));
  CHECK(is_even_type_lift(hw.points[2]));
  CHECK(is_even_type_lift(hw.surfaces[0]));
  CHECK_FALSE(is_even_type_lift(hw.surfaces[1]));
}

TEST_CASE("p = 3 point types") {
  FixedPointDataset d;
  d.p = 3;
  d.manifold = ManifoldInvariants::k3();
  CHECK(count_p3_types(d) == std::pair<long, long>{0, 0});
  d.isolated = {{1, 1, 1}, {2, 2, 1}};
  CHECK(count_p3_types(d) == std::pair<long, long>{0, 2});
  d.isolated = {{1, 2, 1}, {2, 1, -1}, {2, 2, 1}};
  CHECK(count_p3_types(d) == std::pair<long, long>{2, 1});
  d.p = 5;
  CHECK_THROWS_AS(count_p3_types(d), InvalidParameters);
}

TEST_CASE("manifold invariants") {
  CHECK(ManifoldInvariants::k3().violations().empty());
  auto m = ManifoldInvariants::k3();
  m.signature = -8;
  m.euler = 16;
  CHECK(m.violations().size() == 1);  // Rochlin only
  m = ManifoldInvariants::k3();
  m.b1 = 1;
  CHECK_FALSE(m.violations().empty());
}
