#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "asmtspp/asm.hpp"
#include "asmtspp/partitions.hpp"
#include "asmtspp/plane_partitions.hpp"
#include "asmtspp/schur.hpp"
#include "asmtspp/verify.hpp"
#include "json.hpp"

using namespace asmtspp;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest sizes each command accepts.
struct Bound {
  std::string command;
  std::string target;
  int max_n;
  int max_k;  // -1 when k is not used
};

const std::vector<Bound>& bounds() {
  static const std::vector<Bound> b = {
      {"enumerate", "asm", 7, -1},        {"enumerate", "mt", 7, -1},        {"enumerate", "tspp", 6, -1},
      {"enumerate", "csspp", 6, 6},       {"enumerate", "dyck", 12, -1},     {"expand", "gf", 5, -1},
      {"expand", "ank", 5, 3},            {"expand", "ank-principal", 8, 6}, {"expand", "csspp-gf", 5, 6},
      {"expand", "xn", 5, -1},
  };
  return b;
}

std::string bounds_table() {
  std::ostringstream os;
  os << "Bounds:\n";
  for (auto& b : bounds()) {
    os << "  " << b.command << ' ' << b.target << ": n <= " << b.max_n;
    if (b.max_k >= 0) os << ", k <= " << b.max_k;
    os << '\n';
  }
  os << "  verify <id>: see `verify list`\n";
  return os.str();
}

void check_bounds(const std::string& command, const std::string& target, int n, int k) {
  for (auto& b : bounds()) {
    if (b.command != command || b.target != target) continue;
    if (n < 0 || n > b.max_n) throw UsageError(command + " " + target + ": n must lie in [0, " + std::to_string(b.max_n) + "]");
    if (b.max_k >= 0 && (k < 0 || k > b.max_k))
      throw UsageError(command + " " + target + ": k must lie in [0, " + std::to_string(b.max_k) + "]");
    return;
  }
  throw UsageError("unknown " + command + " target: " + target);
}

std::string catalog_listing() {
  std::ostringstream os;
  os << "Identities:\n";
  for (auto& e : catalog()) {
    os << "  " << e.id;
    for (auto& p : e.params) os << " --" << p.name << " [" << p.min << ".." << p.max << "]";
    os << "\n      " << e.summary << '\n';
  }
  return os.str();
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

// ---- enumerate -----------------------------------------------------------

int cmd_enumerate(const std::string& kind, int n, int k, bool count_only, const std::string& format) {
  check_bounds("enumerate", kind, n, k);
  const bool as_json = format == "json";
  long long count = 0;
  json items = json::array();
  auto emit = [&](const std::string& text) {
    ++count;
    if (count_only) return;
    if (as_json) {
      items.push_back(one_line(text));
    } else {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      if (kind != "dyck") std::cout << '\n';
    }
  };
  if (kind == "asm") {
    for_each_asm(n, [&](const Asm& a) { emit(count_only ? std::string() : a.str()); });
  } else if (kind == "mt") {
    for_each_monotone_triangle(n, [&](const MonotoneTriangle& m) { emit(count_only ? std::string() : m.str()); });
  } else if (kind == "tspp") {
    for_each_tspp(n, [&](const Tspp& t) { emit(count_only ? std::string() : t.str()); });
  } else if (kind == "csspp") {
    for_each_csspp(n, k, [&](const Csspp& c) {
      emit(count_only ? std::string() : (c.rho() == 0 ? std::string("(empty)\n") : c.str()));
    });
  } else if (kind == "dyck") {
    for (auto& d : all_dyck_paths(n)) emit(d.word().empty() ? std::string("(empty)") : d.word());
  }
  if (as_json) {
    json out{{"kind", kind}, {"n", n}, {"count", count}};
    if (kind == "csspp") out["k"] = k;
    if (!count_only) out["objects"] = std::move(items);
    std::cout << out.dump(2) << '\n';
  } else if (count_only) {
    std::cout << count << '\n';
  } else {
    std::cout << "count: " << count << '\n';
  }
  return 0;
}

// ---- expand --------------------------------------------------------------

int cmd_expand(const std::string& target, int n, int k, const std::string& route, bool schur_view,
               const std::string& format) {
  check_bounds("expand", target, n, k);
  MVLaurent poly(param_table());
  int m = 0;  // number of x-variables, 0 if none
  if (target == "gf") {
    if (route == "enumerate" || route.empty()) poly = gf_enumerate(n);
    else if (route == "operator") poly = gf_operator(n);
    else if (route == "determinant") poly = gf_determinant(n);
    else throw UsageError("gf routes: enumerate, operator, determinant");
    m = n;
  } else if (target == "ank") {
    if (n < 1) throw UsageError("ank needs n >= 1");
    if (route == "definition" || route.empty()) poly = ank_definition(n, k);
    else if (route == "determinant") poly = ank_determinant(n, k);
    else throw UsageError("ank routes: definition, determinant");
    m = n + k - 1;
  } else if (target == "ank-principal") {
    if (n < 1) throw UsageError("ank-principal needs n >= 1");
    poly = ank_principal(n, k);
  } else if (target == "csspp-gf") {
    if (route == "determinant" || route.empty()) poly = csspp_gf_det(n, k);
    else if (route == "enumerate") poly = csspp_gf(n, k);
    else throw UsageError("csspp-gf routes: determinant, enumerate");
  } else if (target == "xn") {
    if (n < 1) throw UsageError("xn needs n >= 1");
    poly = xn(n);
    m = n;
  }
  if (schur_view && m == 0) throw UsageError("--schur needs a target with x-variables");
  json out{{"target", target}, {"n", n}, {"polynomial", poly.str()}, {"terms", poly.size()}};
  if (target != "gf" && target != "xn") out["k"] = k;
  std::map<Partition, MVLaurent> coeffs;
  if (schur_view) {
    coeffs = schur_expand(poly, m);
    json arr = json::array();
    for (auto& [lam, c] : coeffs) arr.push_back({{"partition", lam.parts()}, {"coefficient", c.str()}});
    out["schur"] = std::move(arr);
  }
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
  } else if (schur_view) {
    for (auto& [lam, c] : coeffs) std::cout << "s" << lam.str() << ": " << c.str() << '\n';
  } else {
    std::cout << poly.str() << '\n';
  }
  return 0;
}

// ---- stats ---------------------------------------------------------------

std::string read_object(const std::string& text) {
  if (text == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return text;
}

int cmd_stats(const std::string& kind, const std::string& text, int k, const std::string& format) {
  json out{{"kind", kind}};
  if (kind == "asm") {
    Asm a = Asm::parse(read_object(text));
    auto s = asm_stats(a);
    out["n"] = a.size();
    out["neg_ones"] = s.neg_ones;
    out["inv"] = s.inv;
    out["inv_prime"] = s.inv_prime;
    out["rho_top"] = s.rho_top;
    out["rho_bottom"] = s.rho_bottom;
    out["special"] = s.special;
    out["left"] = s.left;
    out["right"] = s.right;
    out["dhat"] = s.dhat;
    out["nu"] = s.nu;
    out["mu"] = s.mu;
    out["weight"] = asm_weight(a).str();
  } else if (kind == "tspp") {
    const std::string body = read_object(text);
    const int rows = PlanePartition::parse(body).rows();
    Tspp t(PlanePartition::parse(body, rows));
    out["order"] = t.order();
    out["diag"] = tspp_diag(t).parts();
    out["frobenius"] = to_frobenius(tspp_diag(t)).str();
    out["pi_0"] = pi_k(t, 0).parts();
    out["pi_1"] = pi_k(t, 1).parts();
    out["weight"] = tspp_weight(t, t.order() + 1).str();
    out["complement"] = one_line(tspp_complement(t).str());
  } else if (kind == "csspp") {
    auto c = Csspp::parse(k, read_object(text));
    auto [rho, mu] = csspp_stats(c);
    out["class"] = k;
    out["rho"] = rho;
    out["mu"] = mu;
  } else {
    throw UsageError("stats kinds: asm, tspp, csspp");
  }
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    for (auto& [key, value] : out.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

int print_reports(const std::vector<IdentityReport>& reps, const std::string& format, bool table) {
  bool ok = true;
  for (auto& r : reps) ok = ok && r.passed;
  if (format == "json") {
    json arr = json::array();
    for (auto& r : reps) arr.push_back(report_json(r));
    std::cout << (table ? arr : arr.front()).dump(2) << '\n';
  } else if (table) {
    std::cout << summary_table(reps);
    for (auto& r : reps)
      if (!r.passed) std::cout << '\n' << report_text(r);
  } else {
    std::cout << report_text(reps.front());
  }
  return ok ? 0 : 1;
}

int cmd_suite(const std::string& level, unsigned threads, const std::string& format) {
  SuiteLevel l;
  try {
    l = parse_level(level);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return print_reports(run_suite(l, threads), format, true);
}

int cmd_verify(const std::string& id, const Params& given, const std::string& format) {
  if (id == "list") {
    std::cout << catalog_listing();
    return 0;
  }
  const CatalogEntry* e = find_identity(id);
  if (!e) {
    std::cerr << "unknown identity: " << id << '\n';
    std::cout << catalog_listing();
    return kUsage;
  }
  Params params;
  for (auto& p : e->params) {
    auto it = given.find(p.name);
    if (it == given.end()) throw UsageError(id + " needs --" + p.name);
    params[p.name] = it->second;
  }
  for (auto& [name, value] : given)
    if (!params.count(name)) throw UsageError(id + " takes no --" + name);
  try {
    return print_reports({verify(id, params)}, format, false);
  } catch (const ParamOutOfBounds& err) {
    throw UsageError(err.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating sign matrices, totally symmetric plane partitions and their identities"};
  app.require_subcommand(1);
  app.footer(bounds_table() + "\nExit codes: 0 pass, 1 identity failure, 2 usage error.\n"
             "ASMTSPP_THREADS caps the number of worker threads.");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string kind, target, route, id, level = "quick", object;
  int n = -1, k = 0;
  bool count_only = false, schur_view = false;
  unsigned threads = 0;
  std::map<std::string, int> vparams;

  auto* en = app.add_subcommand("enumerate", "List objects of a given size");
  en->add_option("kind", kind, "asm, mt, tspp, csspp or dyck")->required();
  en->add_option("--n", n, "Size")->required();
  en->add_option("--k", k, "Class (csspp)");
  en->add_flag("--count", count_only, "Print only the number of objects");
  add_format(en);

  auto* ex = app.add_subcommand("expand", "Print a generating function");
  ex->add_option("target", target, "gf, ank, ank-principal, csspp-gf or xn")->required();
  ex->add_option("--n", n, "Size")->required();
  ex->add_option("--k", k, "Second parameter (ank, ank-principal, csspp-gf)");
  ex->add_option("--route", route, "Computation route");
  ex->add_flag("--schur", schur_view, "Print the Schur expansion");
  add_format(ex);

  auto* st = app.add_subcommand("stats", "Statistics of one object");
  st->add_option("kind", kind, "asm, tspp or csspp")->required();
  st->add_option("object", object, "Rows separated by ';' or newlines, or - for stdin")->required();
  st->add_option("--k", k, "Class (csspp)");
  add_format(st);

  auto* ve = app.add_subcommand("verify", "Check an identity, or `verify suite --level L`, or `verify list`");
  ve->add_option("id", id, "Identity id")->required();
  for (const char* name : {"n", "k", "a", "b", "c", "l", "e", "m"})
    ve->add_option_function<int>(std::string("--") + name, [&vparams, name](int v) { vparams[name] = v; },
                                 std::string("Parameter ") + name);
  ve->add_option("--level", level, "Suite level: quick, full or extended");
  ve->add_option("--threads", threads, "Worker threads for suites");
  add_format(ve);

  auto* su = app.add_subcommand("suite", "Run a verification suite");
  su->add_option("--level", level, "quick, full or extended");
  su->add_option("--threads", threads, "Worker threads");
  add_format(su);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(kind, n, k, count_only, format);
    if (ex->parsed()) return cmd_expand(target, n, k, route, schur_view, format);
    if (st->parsed()) return cmd_stats(kind, object, k, format);
    if (su->parsed()) return cmd_suite(level, threads, format);
    if (ve->parsed()) {
      if (id == "suite") return cmd_suite(level, threads, format);
      return cmd_verify(id, vparams, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
