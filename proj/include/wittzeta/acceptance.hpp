#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wittzeta::acceptance {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

struct Result {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

const std::vector<Criterion>& criteria();

// Runs one criterion, failing it when it throws or exceeds its time limit.
Result run(const Criterion& c);

// "all", a numeric id, or a criterion name. Throws InputError when nothing
// matches.
std::vector<const Criterion*> select(const std::string& suite);

}  // namespace wittzeta::acceptance
