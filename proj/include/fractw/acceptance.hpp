#pragma once

#include <string>
#include <vector>

namespace fractw {

// Smoke keeps every check's shape but trims repetition counts so the whole
// suite finishes in seconds; Desk runs the full advertised volumes.
enum class Scale { Smoke, Desk };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the numbered acceptance criteria (all ten when `only` is empty) and
// returns one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(Scale scale, const std::vector<int>& only = {});

// Criterion ids for a named suite: all, game, adversary, oracle, bounds,
// universal, replay. Throws Errc::bad_params for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

// "PASS criterion 3: ..." / "FAIL criterion 3: ..." line for a result.
std::string format_result(const CriterionResult& r);

}  // namespace fractw
