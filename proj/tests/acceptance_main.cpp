// Runs every acceptance criterion and prints one pass/fail line each.
#include <iostream>

#include "qtaft/selftest.hpp"

int main() {
  const auto results = qtaft::run_selftest(20240801, &std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES") << "\n";
  return all ? 0 : 1;
}
