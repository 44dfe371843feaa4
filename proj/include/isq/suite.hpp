#ifndef ISQ_SUITE_HPP_
#define ISQ_SUITE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "isq/semigroup.hpp"

namespace isq {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  double seconds;
  double budget_seconds;
  std::string detail;  // nonempty on failure

  bool within_budget() const { return seconds < budget_seconds; }
  bool ok() const { return pass && within_budget(); }
};

// The desk fixtures with at most 50 elements, plus I_3-scale companions,
// used by the exhaustive suites.
std::vector<std::pair<std::string, FiniteInvSemigroup>> small_fixtures();

// Runs every worked example and property suite of the verification
// programme; one result per criterion.
std::vector<CriterionResult> run_paper_suite(unsigned seed = 1);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace isq

#endif  // ISQ_SUITE_HPP_
