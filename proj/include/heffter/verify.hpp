#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heffter/spaces.hpp"

namespace heffter {

struct Violation {
  std::string axiom;
  std::string detail;
};

/// Outcome of an axiom audit. Passing means no violations; notes carry
/// informational findings (e.g. global simplicity) that do not affect the
/// verdict. At most 100 violations are recorded per axiom.
struct VerificationReport {
  std::string subject;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::string>> notes;

  bool pass() const { return violations.empty(); }
  void add(const std::string& axiom, const std::string& detail);
  void note(const std::string& key, const std::string& value);
};

/// Checks one parallel class: every block zero-sum, blocks pairwise disjoint,
/// union a half-set of Z_w \ J, every stored order simple.
VerificationReport verify_system(const HeffterSystem& sys);

/// Checks a whole space: each class as above, common point set, orthogonality
/// of all cross-class block pairs, pairwise point coverage <= 1, uniform
/// point degree.
VerificationReport verify_space(const RelativeHeffterSpace& space);

}  // namespace heffter
