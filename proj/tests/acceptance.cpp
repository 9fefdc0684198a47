#include <cstdlib>
#include <iostream>
#include <string>

#include "cdirac_app/acceptance.hpp"

int main(int argc, char** argv) {
  std::size_t jobs = 1;
  if (argc > 1) jobs = std::stoul(argv[1]);
  bool ok = true;
  for (const auto& r : cdirac::app::run_acceptance(jobs)) {
    std::cout << cdirac::app::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
