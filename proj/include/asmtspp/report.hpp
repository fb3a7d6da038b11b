#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asmtspp/polynomial.hpp"

namespace asmtspp {

/// One equality checked as part of an identity.
struct ReportPart {
  std::string label;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  bool passed = false;
  /// Largest monomial where the two sides disagree, with both coefficients.
  std::optional<std::string> witness;
  /// Full polynomial texts, kept only when small or on request.
  std::optional<std::string> lhs_text;
  std::optional<std::string> rhs_text;
};

struct IdentityReport {
  std::string id;
  std::map<std::string, int> params;
  std::vector<ReportPart> parts;
  bool passed = false;
  double millis = 0;

  /// Compare two polynomials and append the outcome as a part.
  void compare(const std::string& label, const MVLaurent& lhs, const MVLaurent& rhs, bool keep_text = false);
  /// Append a part that is a plain boolean check.
  void check(const std::string& label, bool ok, const std::string& detail = {});
  /// passed = every part passed (and there is at least one part).
  void finish();
};

}  // namespace asmtspp
