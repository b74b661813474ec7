#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sadic::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;  // every exact check held
  double seconds = 0;
  double limit = 0;            // wall-clock budget in seconds
  std::vector<std::string> details;

  bool passed() const { return checks_passed && seconds <= limit; }
};

struct SuiteOptions {
  std::string data_dir;
  std::vector<int> only;  // empty: all criteria
};

int criterion_count();
std::vector<CriterionResult> run_paper_suite(const SuiteOptions& opts,
                                             const std::function<void(const CriterionResult&)>& on_result = {});
// "AC<id> PASS|FAIL <title> [<seconds>s/<limit>s]"
std::string summary_line(const CriterionResult& r);

}  // namespace sadic::suite
