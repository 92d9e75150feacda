#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qhall/core.hpp"
#include "qhall/monoid.hpp"

namespace qhall {

enum class VerifyLevel { Quick, Full };

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double limit_seconds = 0;
  std::function<Outcome()> run;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// The acceptance checks that need no brute-force oracle. Quick keeps the
/// golden examples and shrinks the sweeps.
std::vector<Criterion> library_criteria(VerifyLevel level);

CriterionResult run_criterion(const Criterion& c);
/// "PASS [4] order-coincidence (1.20 s / 120 s) detail"
std::string format_result(const CriterionResult& r);

/// Fixed reference data shared by the checks and the tests.
namespace reference {
MultiPartition large_separated();       // n = 3, size 22
MultiPartition small_separated();       // n = 3, size 9
std::vector<Word> large_fiber_words();  // nine words
std::vector<Word> small_fiber_words();  // seven words, first five distinguished
/// alpha, beta, gamma, delta for n = 2, d = (2,1)
MultiPartition alpha();
MultiPartition beta();
MultiPartition gamma();
MultiPartition delta();
}  // namespace reference

}  // namespace qhall
