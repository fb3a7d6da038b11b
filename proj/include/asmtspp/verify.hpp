#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "asmtspp/report.hpp"

namespace asmtspp {

using Params = std::map<std::string, int>;

struct ParamSpec {
  std::string name;
  int min = 0;
  int max = 0;
};

struct CatalogEntry {
  std::string id;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<IdentityReport(const Params&)> run;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity: " + id) {}
};

class ParamOutOfBounds : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every identity check, sorted by id.
const std::vector<CatalogEntry>& catalog();
/// nullptr if the id is unknown.
const CatalogEntry* find_identity(const std::string& id);

/// Run one identity. Missing parameters are an error, as are values outside
/// the catalog bounds and names the identity does not take.
IdentityReport verify(const std::string& id, const Params& params);

enum class SuiteLevel { quick, full, extended };
SuiteLevel parse_level(const std::string& text);
std::string level_name(SuiteLevel level);

struct SuiteItem {
  std::string id;
  Params params;
};
/// The (id, params) pairs of a suite, sorted by id then params.
std::vector<SuiteItem> suite_plan(SuiteLevel level);

/// Runs the plan on up to `threads` workers (0 = hardware concurrency, capped
/// by ASMTSPP_THREADS). Failures are collected; the order matches the plan.
std::vector<IdentityReport> run_suite(SuiteLevel level, unsigned threads = 0);
std::vector<IdentityReport> run_items(const std::vector<SuiteItem>& items, unsigned threads = 0);

/// Worker count after applying the ASMTSPP_THREADS cap.
unsigned worker_count(unsigned requested);

nlohmann::json report_json(const IdentityReport& r);
/// One line per report plus a totals line.
std::string summary_table(const std::vector<IdentityReport>& reports);
/// Multi-line text for a single report.
std::string report_text(const IdentityReport& r);

}  // namespace asmtspp
