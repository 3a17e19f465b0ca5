#include "eqspin/errors.hpp"

namespace eqspin {
namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "invalid dataset";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += i == 0 ? ": " : "; ";
    out += v[i];
  }
  return out;
}

}  // namespace

DatasetError::DatasetError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace eqspin
