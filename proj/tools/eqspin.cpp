#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "eqspin/acceptance.hpp"
#include "eqspin/errors.hpp"
#include "eqspin/lefschetz.hpp"
#include "eqspin/rigidity.hpp"

namespace fs = std::filesystem;
using namespace eqspin;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kIo = 3;

struct Settings {
  std::string format = "text";
  std::uint32_t power = 1;
  unsigned precision = 128;
  bool json() const { return format == "json"; }
};

struct Report {
  int code = kOk;
  Json json;
  std::string text;
};

Report failure(int code, const std::string& message) {
  return {code, Json{{"error", message}}, "error: " + message + "\n"};
}

Json spin_json(const CyclotomicNumber& s, const SpinClass& c) {
  Json j{{"rational", c.rational},
         {"value", c.rational ? Json(c.value.get_str()) : Json(nullptr)},
         {"sign", to_string(c.sign)}};
  if (!c.rational) j["estimate"] = c.estimate;
  j["exact"] = cyclotomic_to_json(s);
  return j;
}

Report spin_report(const FixedPointDataset& d, const Settings& s) {
  if (s.power < 1 || s.power >= d.p) {
    throw InvalidParameters("--power must lie in 1.." + std::to_string(d.p - 1));
  }
  const auto value = spin_number(d, s.power);
  const bool real = value.is_real();
  SpinClass c;
  if (real) {
    c = classify_spin(value, s.precision);
  } else {
    c.sign = SpinSign::NonReal;
    c.estimate = numeric_real_part(value, s.precision);
  }
  Report r;
  r.json = Json{{"power", s.power}};
  r.json.update(spin_json(value, c));
  std::ostringstream os;
  os << "Spin(tau-hat^" << s.power << ", X) = " << value.to_string() << "\n";
  os << (c.rational ? "rational, value " + c.value.get_str() : "irrational, ~" + c.estimate) << ", sign "
     << to_string(c.sign) << "\n";
  r.text = os.str();
  return r;
}

Report quotient_report(const FixedPointDataset& d, const Settings&) {
  Report r;
  std::ostringstream os;
  const mpq_class chi_fixed(fixed_set_euler(d));
  r.json["p"] = d.p;
  r.json["fixed_set_euler"] = chi_fixed.get_str();
  if (d.p == 3) {
    const mpq_class sigma = signature_quotient_p3(d);
    const mpq_class chi = euler_quotient_p3(d);
    const bool integral = sigma.get_den() == 1 && chi.get_den() == 1;
    r.json["sigma"] = sigma.get_str();
    r.json["euler"] = chi.get_str();
    r.json["integral"] = integral;
    os << "sigma(X/Z_3) = " << sigma.get_str() << "\n";
    os << "chi(X/Z_3) = " << chi.get_str() << "\n";
    if (integral) {
      r.json["b_minus"] = mpq_class(mpq_class(d.quotient_b_plus) - sigma).get_str();
      os << "b_minus(X/Z_3) = " << r.json["b_minus"].get<std::string>() << "\n";
    } else {
      os << "not integral: no Z_3 action has these fixed-point data\n";
    }
  } else {
    const mpq_class chi = euler_quotient(d);
    r.json["euler"] = chi.get_str();
    r.json["integral"] = chi.get_den() == 1;
    os << "chi(X/Z_" << d.p << ") = " << chi.get_str() << (chi.get_den() == 1 ? "" : " (not integral)") << "\n";
  }
  r.text = os.str();
  return r;
}

Report kvector_report(const FixedPointDataset& d, const Settings&) {
  const KVector k = k_vector(spin_tuple(d));
  Report r;
  Json arr = Json::array();
  for (const auto& x : k.k) arr.push_back(integer_to_json(x));
  r.json = Json{{"p", d.p}, {"k_vector", arr}, {"sum", integer_to_json(k.sum())}};
  r.text = "k = " + k.to_string() + "\n";
  return r;
}

Report verdict_report(const FixedPointDataset& d, const Settings& s) {
  VerdictOptions options;
  options.precision_bits = s.precision;
  const auto v = verdict(d, options);
  return {kOk, verdict_to_json(v), verdict_to_text(v)};
}

using DatasetCommand = std::function<Report(const FixedPointDataset&, const Settings&)>;

Report evaluate_file(const fs::path& path, const DatasetCommand& command, const Settings& s) {
  try {
    return command(load_dataset(path), s);
  } catch (const std::ios_base::failure&) {
    return failure(kIo, "cannot read " + path.string());
  } catch (const DatasetError& e) {
    Report r = failure(kInvalid, "invalid dataset");
    r.json["violations"] = e.violations();
    std::string text;
    for (const auto& v : e.violations()) text += "error: " + v + "\n";
    r.text = text;
    return r;
  } catch (const std::exception& e) {
    return failure(kInvalid, e.what());
  }
}

int emit(const Report& r, const Settings& s) {
  if (s.json()) {
    std::cout << r.json.dump(2) << "\n";
  } else {
    (r.code == kOk ? std::cout : std::cerr) << r.text;
  }
  return r.code;
}

int run_dataset_command(const DatasetCommand& command, const std::string& input, const std::string& batch,
                        const Settings& s) {
  if (batch.empty()) {
    if (input.empty()) return emit(failure(kInvalid, "an input file is required"), s);
    return emit(evaluate_file(input, command, s), s);
  }
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(batch, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
  }
  if (ec) return emit(failure(kIo, "cannot read directory " + batch + ": " + ec.message()), s);
  std::sort(files.begin(), files.end());
  std::vector<std::future<Report>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, evaluate_file, f, command, s));
  int code = kOk;
  Json all = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Report r = jobs[i].get();
    code = std::max(code, r.code);
    if (s.json()) {
      all.push_back(Json{{"file", files[i].filename().string()}, {"exit_code", r.code}, {"report", r.json}});
    } else {
      std::cout << "== " << files[i].filename().string() << " ==\n" << r.text;
    }
  }
  if (s.json()) std::cout << all.dump(2) << "\n";
  return code;
}

int run_enumerate(std::uint32_t p, long quotient_b_plus, bool trivial, const Settings& s) {
  try {
    if (p != 3) throw InvalidParameters("enumeration is implemented for p = 3 only");
    const auto pairs = enumerate_pseudofree_p3(quotient_b_plus, trivial);
    Report r;
    Json arr = Json::array();
    std::ostringstream os;
    os << "pseudofree Z_3 fixed-point counts (f1, f2), b_plus(X/Z_3) = " << quotient_b_plus
       << (trivial ? ", homologically trivial" : "") << ":\n";
    for (auto [f1, f2] : pairs) {
      arr.push_back(Json::array({f1, f2}));
      os << "(" << f1 << "," << f2 << ")\n";
    }
    if (pairs.empty()) os << "none\n";
    r.json = Json{{"p", p}, {"quotient_b_plus", quotient_b_plus}, {"trivial", trivial}, {"solutions", arr}};
    r.text = os.str();
    return emit(r, s);
  } catch (const std::exception& e) {
    return emit(failure(kInvalid, e.what()), s);
  }
}

int run_prop41(std::uint32_t p, std::vector<std::uint32_t> m, std::vector<std::uint32_t> n, std::uint32_t l,
               std::uint32_t d, std::vector<std::uint32_t> qs, const Settings& s) {
  try {
    const InstanceParameters params{p, std::move(m), std::move(n), l, d, std::nullopt};
    const auto r = verify_prop41(params, qs);
    Report out;
    out.json = Json{{"hypotheses_met", r.hypotheses_met}, {"note", r.note}};
    std::ostringstream os;
    if (r.hypotheses_met) {
      out.json["dimension"] = r.dimension;
      out.json["kernel_rank"] = r.kernel_rank;
      out.json["top_in_kernel"] = r.top_in_kernel;
      out.json["spanned_by_top"] = r.spanned_by_top;
      out.json["specialization"] = {{"lhs", r.scalar.lhs.to_string("t")},
                                    {"rhs", r.scalar.rhs.to_string("t")},
                                    {"forces_zero", r.scalar.forces_zero},
                                    {"truncated_image_vanishes", r.scalar.truncated_image_vanishes}};
      out.json["a_forced_zero"] = r.a_forced_zero;
      out.json["sw_value"] = r.sw_value ? integer_to_json(*r.sw_value) : Json(nullptr);
      os << "coefficient space dimension " << r.dimension << ", kernel rank " << r.kernel_rank << "\n";
      os << "sigma (1-t)^(M-1) in kernel: " << (r.top_in_kernel ? "yes" : "no")
         << ", spans it: " << (r.spanned_by_top ? "yes" : "no") << "\n";
      os << "xi -> 1, q = p: " << r.scalar.lhs.to_string("t") << " vs " << r.scalar.rhs.to_string("t")
         << (r.scalar.forces_zero ? ", so a = 0" : "") << "\n";
      if (r.sw_value) os << "SW = " << r.sw_value->get_str() << "\n";
    }
    os << r.note << "\n";
    out.text = os.str();
    return emit(out, s);
  } catch (const std::exception& e) {
    return emit(failure(kInvalid, e.what()), s);
  }
}

int run_selftest(long k3_signature, bool timings, const Settings& s) {
  acceptance::Options options;
  options.k3.signature = k3_signature;
  const auto results = acceptance::run_all(options);
  if (s.json()) {
    std::cout << acceptance::to_json(results, timings).dump(2) << "\n";
  } else {
    std::cout << acceptance::to_text(results, timings);
  }
  return acceptance::all_passed(results) ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant spin numbers and rigidity checks for cyclic actions on spin 4-manifolds"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--precision", settings.precision, "Bits for advisory numeric estimates")->capture_default_str();

  std::string input, batch;
  auto dataset_command = [&](const std::string& name, const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("input", input, "Dataset file (JSON)");
    sub->add_option("--batch", batch, "Evaluate every *.json file in a directory");
    sub->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--precision", settings.precision, "Bits for advisory numeric estimates");
    return sub;
  };
  auto* spin = dataset_command("spin", "Spin number of a power of the lifted generator");
  spin->add_option("--power", settings.power, "Power j in 1..p-1")->capture_default_str();
  auto* quotient = dataset_command("quotient", "Signature and Euler characteristic of the quotient");
  auto* kvector = dataset_command("kvector", "Eigenspace defects of the equivariant index");
  auto* verdict_cmd = dataset_command("verdict", "Full constraint pipeline");

  std::uint32_t p = 3;
  long quotient_b_plus = 3;
  bool trivial = false;
  auto* enumerate = app.add_subcommand("enumerate", "Pseudofree fixed-point counts for p = 3");
  enumerate->add_option("--p", p, "Prime")->capture_default_str();
  enumerate->add_option("--quotient-b-plus", quotient_b_plus, "b_plus of the quotient")->capture_default_str();
  enumerate->add_flag("--trivial", trivial, "Require a homologically trivial action");
  enumerate->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::uint32_t> m{2, 2, 2}, n{2, 1, 1}, qs{2};
  std::uint32_t l = 1, d = 0;
  auto* prop41 = app.add_subcommand("prop41", "Adams-kernel verification for one finite-dimensional approximation");
  prop41->add_option("--p", p, "Prime")->capture_default_str();
  prop41->add_option("--m", m, "Comma-separated m_0,...,m_(p-1)")->delimiter(',')->capture_default_str();
  prop41->add_option("--n", n, "Comma-separated n_0,...,n_(p-1)")->delimiter(',')->capture_default_str();
  prop41->add_option("--l", l, "l = (b_plus - 1)/2")->capture_default_str();
  prop41->add_option("--d", d, "Index shift d")->capture_default_str();
  prop41->add_option("--q", qs, "Adams operations to impose")->delimiter(',')->capture_default_str();
  prop41->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  long k3_signature = -16;
  bool timings = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance battery");
  selftest->add_option("--k3-signature", k3_signature, "Signature preset for the K3 invariants (negative control)")
      ->capture_default_str();
  selftest->add_flag("--timings", timings, "Report runtimes");
  selftest->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (spin->parsed()) return run_dataset_command(spin_report, input, batch, settings);
  if (quotient->parsed()) return run_dataset_command(quotient_report, input, batch, settings);
  if (kvector->parsed()) return run_dataset_command(kvector_report, input, batch, settings);
  if (verdict_cmd->parsed()) return run_dataset_command(verdict_report, input, batch, settings);
  if (enumerate->parsed()) return run_enumerate(p, quotient_b_plus, trivial, settings);
  if (prop41->parsed()) return run_prop41(p, m, n, l, d, qs, settings);
  if (selftest->parsed()) return run_selftest(k3_signature, timings, settings);
  return kInvalid;
}
