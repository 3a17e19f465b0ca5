#include <iostream>

#include "eqspin/acceptance.hpp"

int main() {
  const auto results = eqspin::acceptance::run_all();
  std::cout << eqspin::acceptance::to_text(results);
  return eqspin::acceptance::all_passed(results) ? 0 : 1;
}
