#include "asmtspp/report.hpp"

#include <algorithm>

namespace asmtspp {

namespace {
constexpr std::size_t kTextLimit = 40;
}

void IdentityReport::compare(const std::string& label, const MVLaurent& lhs, const MVLaurent& rhs, bool keep_text) {
  ReportPart part;
  part.label = label;
  part.lhs_terms = lhs.size();
  part.rhs_terms = rhs.size();
  part.passed = lhs == rhs;
  if (!part.passed) {
    if (auto m = first_difference(lhs, rhs)) {
      part.witness = monomial_str(*lhs.table(), *m) + ": lhs " + lhs.coefficient(*m).str() + ", rhs " +
                     rhs.coefficient(*m).str();
    } else {
      part.witness = "variable tables differ";
    }
  }
  if (keep_text || std::max(lhs.size(), rhs.size()) <= kTextLimit) {
    part.lhs_text = lhs.str();
    part.rhs_text = rhs.str();
  }
  parts.push_back(std::move(part));
}

void IdentityReport::check(const std::string& label, bool ok, const std::string& detail) {
  ReportPart part;
  part.label = label;
  part.passed = ok;
  if (!ok && !detail.empty()) part.witness = detail;
  parts.push_back(std::move(part));
}

void IdentityReport::finish() {
  passed = !parts.empty() && std::all_of(parts.begin(), parts.end(), [](const ReportPart& p) { return p.passed; });
}

}  // namespace asmtspp
