#ifndef SUPERKIT_VERIFY_HPP
#define SUPERKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superkit/roots.hpp"

namespace superkit {

struct CriterionResult {
  int id = 0;
  std::string key;    // construction, classification, ghost, djokovic, crossval, ds, splitting, properties
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per check
  std::string failure;               // first failing check, empty on pass
  double seconds = 0;
  double budget_seconds = 0;         // 0 = no bound
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  // Criterion key or number; empty runs everything.
  std::string filter;
  // Perturb one structure constant of every family the driver builds.
  bool corrupt_structure = false;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool ok() const;
  const CriterionResult* first_failure() const;
};

const std::vector<std::string>& criterion_keys();
// Throws InvalidArgument for an unknown filter.
VerifyReport verify_all(const VerifyOptions& opts = {});

}  // namespace superkit

#endif  // SUPERKIT_VERIFY_HPP
