// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "asmtspp/asm.hpp"
#include "asmtspp/orientations.hpp"
#include "asmtspp/plane_partitions.hpp"
#include "asmtspp/verify.hpp"

using namespace asmtspp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string note;
};

// Runs the items one at a time and records the first failure.
Outcome run_all(const std::vector<SuiteItem>& items, double limit_s = 0) {
  Outcome out;
  auto start = Clock::now();
  for (auto& it : items) {
    auto rep = run_items({it}, 1).front();
    if (!rep.passed && out.ok) {
      out.ok = false;
      out.note = report_text(rep);
    }
  }
  double s = seconds_since(start);
  if (limit_s > 0 && s > limit_s && out.ok) {
    out.ok = false;
    out.note = "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s";
  }
  if (out.note.empty()) out.note = std::to_string(items.size()) + " checks, " + std::to_string(s) + " s";
  return out;
}

std::vector<SuiteItem> range(const std::string& id, int lo, int hi) {
  std::vector<SuiteItem> v;
  for (int n = lo; n <= hi; ++n) v.push_back({id, {{"n", n}}});
  return v;
}

std::vector<SuiteItem> grid(const std::string& id, int nlo, int nhi, int klo, int khi) {
  std::vector<SuiteItem> v;
  for (int n = nlo; n <= nhi; ++n)
    for (int k = klo; k <= khi; ++k) v.push_back({id, {{"n", n}, {"k", k}}});
  return v;
}

std::vector<SuiteItem> join(std::initializer_list<std::vector<SuiteItem>> parts) {
  std::vector<SuiteItem> v;
  for (auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

Outcome both(Outcome a, const Outcome& b) {
  if (!b.ok && a.ok) return b;
  if (a.ok) a.note += "; " + b.note;
  return a;
}

Outcome criterion1() {
  return both(run_all(range("thm1", 1, 4), 5), run_all(range("thm1", 5, 5), 60));
}

Outcome criterion2() {
  return run_all(join({range("thm2a", 1, 4), grid("thm2b", 1, 4, 0, 2), grid("thm2c", 1, 4, 0, 2)}));
}

Outcome criterion3() { return run_all(join({range("opform", 1, 4), range("detform", 1, 4)})); }

Outcome criterion4() {
  return both(run_all(join({range("lemma41", 1, 6), range("orient", 1, 4)})), run_all(range("orient", 5, 5)));
}

Outcome criterion5() {
  return run_all(join({grid("prop21", 1, 6, 0, 2), {{"tspp2census", {}}}}));
}

Outcome criterion6() { return run_all(grid("prop61", 0, 4, 0, 4)); }

Outcome criterion7() {
  std::vector<SuiteItem> g;
  for (int m = 1; m <= 5; ++m) g.push_back({"giambelli", {{"l", 3}, {"e", 4}, {"m", m}}});
  return run_all(join({grid("ankdet", 1, 5, 0, 2), g}));
}

Outcome criterion8() {
  std::vector<SuiteItem> v;
  for (int b = 0; b <= 8; ++b)
    for (int a = 0; a <= b; ++a)
      for (int c = 0; c <= b; ++c) v.push_back({"binom71", {{"a", a}, {"b", b}, {"c", c}}});
  return run_all(v);
}

Outcome criterion9() {
  return run_all(join({range("matid1", 1, 5), grid("matid2", 1, 5, 0, 3), grid("matid3", 1, 5, 0, 3)}));
}

Outcome criterion10() { return run_all(range("recur_cd", 2, 4)); }

Outcome criterion11() {
  return run_all(join({range("statsum", 1, 5), range("spec", 2, 5), range("sixv", 1, 4)}));
}

// Runs a suite through the command-line tool so that no cache is warm.
Outcome suite_timed(SuiteLevel level, double limit_s) {
  const std::string cmd = std::string(ASMTSPP_CLI) + " verify suite --level " + level_name(level) + " > /dev/null";
  auto start = Clock::now();
  int rc = std::system(cmd.c_str());
  double s = seconds_since(start);
  Outcome out;
  if (rc != 0) {
    out.ok = false;
    out.note = level_name(level) + " suite exited with status " + std::to_string(rc);
  } else if (s > limit_s) {
    out.ok = false;
    out.note = level_name(level) + " suite took " + std::to_string(s) + " s";
  } else {
    out.note = level_name(level) + " " + std::to_string(suite_plan(level).size()) + " checks in " + std::to_string(s) + " s";
  }
  return out;
}

Outcome criterion12() { return both(suite_timed(SuiteLevel::quick, 10), suite_timed(SuiteLevel::full, 120)); }

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"asm generating function equals the tspp family at r = 1", criterion1},
      {"principal specializations equal csspp generating functions", criterion2},
      {"operator and determinant forms equal enumeration", criterion3},
      {"antisymmetrizer lemma and orientation identities", criterion4},
      {"tspp counts by pi_k equal binomial determinants", criterion5},
      {"csspp generating function equals its determinant", criterion6},
      {"hook Schur determinant and Giambelli", criterion7},
      {"binomial sum transformation", criterion8},
      {"three matrix identities", criterion9},
      {"recursions for c and d, and c = d", criterion10},
      {"per-asm statistic identities", criterion11},
      {"suite timings", criterion12},
  };
  auto evaluate = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = evaluate(criteria[i].second);
    std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.note.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
