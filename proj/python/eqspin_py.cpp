#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqspin/acceptance.hpp"
#include "eqspin/errors.hpp"
#include "eqspin/lefschetz.hpp"
#include "eqspin/rigidity.hpp"

namespace py = pybind11;
using namespace eqspin;

namespace {

// Reports cross the boundary as JSON text; the Python layer decodes them.
std::string spin_json(const std::string& document, std::uint32_t power, unsigned precision) {
  const auto d = parse_dataset(document);
  if (power < 1 || power >= d.p) throw InvalidParameters("power must lie in 1..p-1");
  const auto value = spin_number(d, power);
  Json j{{"power", power}, {"exact", cyclotomic_to_json(value)}};
  if (value.is_real()) {
    const auto c = classify_spin(value, precision);
    j["rational"] = c.rational;
    j["value"] = c.rational ? Json(c.value.get_str()) : Json(nullptr);
    j["sign"] = to_string(c.sign);
    if (!c.rational) j["estimate"] = c.estimate;
  } else {
    j["rational"] = false;
    j["value"] = nullptr;
    j["sign"] = to_string(SpinSign::NonReal);
    j["estimate"] = numeric_real_part(value, precision);
  }
  return j.dump();
}

std::string quotient_json(const std::string& document) {
  const auto d = parse_dataset(document);
  if (d.p != 3) {
    const mpq_class chi = euler_quotient(d);
    return Json{{"euler", chi.get_str()}, {"integral", chi.get_den() == 1}}.dump();
  }
  const mpq_class sigma = signature_quotient_p3(d);
  const mpq_class chi = euler_quotient_p3(d);
  return Json{{"sigma", sigma.get_str()}, {"euler", chi.get_str()}, {"integral", sigma.get_den() == 1 && chi.get_den() == 1}}
      .dump();
}

std::vector<std::string> k_vector_strings(const std::string& document) {
  std::vector<std::string> out;
  for (const auto& x : k_vector(spin_tuple(parse_dataset(document))).k) out.push_back(x.get_str());
  return out;
}

std::string verdict_json(const std::string& document, unsigned precision) {
  VerdictOptions options;
  options.precision_bits = precision;
  return verdict_to_json(verdict(parse_dataset(document), options)).dump();
}

std::string verdict_text(const std::string& document) { return verdict_to_text(verdict(parse_dataset(document))); }

std::string prop41_json(std::uint32_t p, std::vector<std::uint32_t> m, std::vector<std::uint32_t> n, std::uint32_t l,
                        std::uint32_t d, std::vector<std::uint32_t> qs) {
  const auto r = verify_prop41(InstanceParameters{p, std::move(m), std::move(n), l, d, std::nullopt}, qs);
  return Json{{"hypotheses_met", r.hypotheses_met},
              {"note", r.note},
              {"dimension", r.dimension},
              {"kernel_rank", r.kernel_rank},
              {"top_in_kernel", r.top_in_kernel},
              {"spanned_by_top", r.spanned_by_top},
              {"a_forced_zero", r.a_forced_zero},
              {"sw_value", r.sw_value ? Json(r.sw_value->get_str()) : Json(nullptr)}}
      .dump();
}

std::string selftest_json(long k3_signature) {
  acceptance::Options options;
  options.k3.signature = k3_signature;
  return acceptance::to_json(acceptance::run_all(options), false).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact equivariant spin numbers and rigidity checks";

  py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
  py::register_exception<NonIntegralKVector>(m, "NonIntegralKVector", PyExc_ValueError);
  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);

  m.def("spin_json", &spin_json, py::arg("document"), py::arg("power") = 1, py::arg("precision") = 128);
  m.def("quotient_json", &quotient_json, py::arg("document"));
  m.def("k_vector", &k_vector_strings, py::arg("document"));
  m.def("verdict_json", &verdict_json, py::arg("document"), py::arg("precision") = 128);
  m.def("verdict_text", &verdict_text, py::arg("document"));
  m.def("normalize_dataset", [](const std::string& doc) { return serialize_dataset(parse_dataset(doc)); },
        py::arg("document"));
  m.def("enumerate_pseudofree_p3",
        [](long quotient_b_plus, bool trivial) { return enumerate_pseudofree_p3(quotient_b_plus, trivial); },
        py::arg("quotient_b_plus"), py::arg("homologically_trivial") = false);
  m.def("prop41_json", &prop41_json, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("l"), py::arg("d") = 0,
        py::arg("qs") = std::vector<std::uint32_t>{2});
  m.def("selftest_json", &selftest_json, py::arg("k3_signature") = -16);
  m.def("fermat_quartic", []() { return serialize_dataset(fermat_quartic_dataset()); });
}
