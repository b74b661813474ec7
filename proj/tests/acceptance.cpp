// One PASS/FAIL line per acceptance criterion; failing criteria list their checks.

#include <iostream>

#include "sadic/suite/paper_suite.hpp"

int main(int argc, char** argv) {
  sadic::suite::SuiteOptions opts;
  opts.data_dir = argc > 1 ? argv[1] : SADIC_DATA_DIR;
  int failed = 0;
  sadic::suite::run_paper_suite(opts, [&](const sadic::suite::CriterionResult& r) {
    std::cout << sadic::suite::summary_line(r) << '\n';
    for (const auto& d : r.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    failed += !r.passed();
  });
  std::cout << (sadic::suite::criterion_count() - failed) << '/' << sadic::suite::criterion_count() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
