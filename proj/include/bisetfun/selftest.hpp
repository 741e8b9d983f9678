#ifndef BISETFUN_SELFTEST_HPP
#define BISETFUN_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bisetfun/isomorphism.hpp"
#include "bisetfun/lattice.hpp"

namespace bisetfun {

struct SelftestOptions {
  unsigned long long lattice_limit = kDefaultLatticeLimit;
  unsigned long long iso_limit = kDefaultIsoLimit;
  bool include_stretch = false; // also run the large S7 vanishing check
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail; // case counts on success, first failure otherwise
};

/// Runs the full self-test catalog (eight criteria) and returns one result
/// per criterion. Limit violations propagate as limit_error.
std::vector<CriterionResult> run_selftest(const SelftestOptions &opts);

/// "criterion <n> <name>: PASS/FAIL (<seconds>s) <detail>"
std::string format_result(const CriterionResult &r);

} // namespace bisetfun

#endif
