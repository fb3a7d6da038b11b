#include "asmtspp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "asmtspp/asm.hpp"
#include "asmtspp/determinant.hpp"
#include "asmtspp/orientations.hpp"
#include "asmtspp/partitions.hpp"
#include "asmtspp/plane_partitions.hpp"
#include "asmtspp/schur.hpp"

namespace asmtspp {

namespace {

MVLaurent zero_param() { return MVLaurent(param_table()); }

MVLaurent at_ones(const MVLaurent& p, int m) {
  Substitution s(p.table());
  for (int i = 1; i <= m; ++i) s.set(var::x(i), Rational(1));
  return rebase(poly_substitute(p, s), param_table());
}

MVLaurent pvar(std::size_t v, int power = 1) { return MVLaurent::variable(param_table(), v, power); }
MVLaurent pconst(const Rational& c) { return MVLaurent(param_table(), c); }

std::string params_str(const Params& p) {
  std::string out;
  for (auto& [k, v] : p) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

// Collects a pass/fail over many instances, keeping the first failure.
class Tally {
 public:
  void add(bool ok, const std::string& what) {
    ++count_;
    if (!ok && !failure_) failure_ = what;
  }
  void add_compare(const MVLaurent& a, const MVLaurent& b, const std::string& what) {
    ++count_;
    if (a == b || failure_) return;
    failure_ = what;
    if (auto m = first_difference(a, b))
      *failure_ += " at " + monomial_str(*a.table(), *m) + ": lhs " + a.coefficient(*m).str() + ", rhs " +
                   b.coefficient(*m).str();
  }
  void report(IdentityReport& rep, const std::string& label) const {
    rep.check(label + " [" + std::to_string(count_) + " cases]", !failure_.has_value(), failure_.value_or(""));
  }

 private:
  long long count_ = 0;
  std::optional<std::string> failure_;
};

// ---- asm generating function -------------------------------------------

IdentityReport thm1(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  auto a = ank_definition(n, 1);
  Substitution r1(a.table());
  r1.set(var::r, Rational(1));
  rep.compare("asm generating function = tspp family at r = 1", gf_enumerate(n), poly_substitute(a, r1));
  return rep;
}

IdentityReport opform(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  rep.compare("operator formula = enumeration", gf_operator(n), gf_enumerate(n));
  return rep;
}

IdentityReport detform(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  rep.compare("bialternant determinant = enumeration", gf_determinant(n), gf_enumerate(n));
  return rep;
}

IdentityReport spec(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  auto t = VarTable::canonical(n);
  Substitution mid(t);
  for (int i = 2; i < n; ++i) mid.set(var::x(i), Rational(1));
  auto uvw = MVLaurent::parse(t, "u + v + w");
  PolyBuilder acc(t);
  for_each_asm(n, [&](const Asm& a) {
    auto s = asm_stats(a);
    Monomial m;
    m.set(var::u, s.inv);
    m.set(var::v, s.inv_prime);
    m.set(var::x(1), s.rho_top);
    m.set(var::x(n), s.rho_bottom);
    acc.add(uvw.pow(s.neg_ones).shifted(m));
  });
  rep.compare("gf at interior x = 1 vs statistic sum", poly_substitute(gf_enumerate(n), mid), acc.build());
  return rep;
}

IdentityReport sixv(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  auto t = VarTable::canonical(n);
  Substitution v1(t);
  v1.set(var::v, Rational(1));
  Substitution shift(t);
  shift.set(var::w, MVLaurent::parse(t, "1 + u + w"));
  rep.compare("gf at v = 1 = six-vertex X_n at w -> 1 + u + w", poly_substitute(gf_enumerate(n), v1),
              poly_substitute(xn(n), shift));
  return rep;
}

IdentityReport statsum(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  Tally total, mu, nu;
  for_each_asm(n, [&](const Asm& a) {
    auto s = asm_stats(a);
    const std::string what = a.str();
    total.add(s.neg_ones + s.inv + s.inv_prime == n * (n - 1) / 2, what);
    bool mu_ok = true, nu_ok = true;
    for (int i = 1; i <= n; ++i) {
      int prev = i >= 2 ? s.special[static_cast<std::size_t>(i - 2)] : 0;
      mu_ok = mu_ok && s.mu[static_cast<std::size_t>(i - 1)] == prev;
      nu_ok = nu_ok && s.nu[static_cast<std::size_t>(i - 1)] == s.dhat[static_cast<std::size_t>(i - 1)] - prev;
    }
    mu.add(mu_ok, what);
    nu.add(nu_ok, what);
  });
  total.report(rep, "negative ones + inv + inv' = C(n,2)");
  mu.report(rep, "mu_i = special count of row i-1");
  nu.report(rep, "nu_i = dhat_i - special count of row i-1");
  return rep;
}

IdentityReport asmcount(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  long long count = 0;
  for_each_asm(n, [&](const Asm&) { ++count; });
  mpz_class expected = asm_count_formula(n);
  rep.check("enumeration matches the product formula", mpz_class(static_cast<long>(count)) == expected,
            std::to_string(count) + " vs " + expected.get_str());
  return rep;
}

IdentityReport twoenum(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  mpz_class sum = 0;
  for_each_asm(n, [&](const Asm& a) { sum += mpz_class(1) << asm_stats(a).neg_ones; });
  mpz_class expected = mpz_class(1) << (n * (n - 1) / 2);
  rep.check("sum of 2^(negative ones) = 2^C(n,2)", sum == expected, sum.get_str() + " vs " + expected.get_str());
  return rep;
}

// ---- tspp family ---------------------------------------------------------

IdentityReport prop21(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  std::map<Partition, long long> counts;
  long long total = 0;
  Tally lands;
  for_each_tspp(n - 1, [&](const Tspp& t) {
    auto lam = pi_k(t, k);
    lands.add(is_k_tall(lam, k, n), t.str());
    ++counts[lam];
    ++total;
  });
  lands.report(rep, "pi_k of every tspp is k-tall");
  Tally eq;
  long long det_total = 0;
  for (auto& lam : k_tall_partitions(k, n)) {
    auto it = counts.find(lam);
    long long brute = it == counts.end() ? 0 : it->second;
    long long det = count_tspp_det(lam, k).to_int64();
    det_total += det;
    eq.add(brute == det, lam.str() + ": count " + std::to_string(brute) + ", det " + std::to_string(det));
  }
  eq.report(rep, "tspp count with given pi_k = binomial determinant");
  rep.check("determinants sum to the number of tspps", det_total == total,
            std::to_string(det_total) + " vs " + std::to_string(total));
  return rep;
}

IdentityReport tspp2census(const Params&) {
  IdentityReport rep;
  auto pt = param_table();
  auto T = [](const std::vector<std::vector<int>>& rows) { return Tspp(PlanePartition::from_rows(rows, 2)); };
  struct Row {
    Tspp t;
    Partition pik;
    const char* weight;
  };
  const std::vector<Row> rows = {
      {T({{0, 0}, {0, 0}}), Partition{}, "v^3"},
      {T({{1, 0}, {0, 0}}), Partition{1, 1, 1}, "r*u*v^2"},
      {T({{2, 1}, {1, 0}}), Partition{1, 1, 1, 1}, "r*u*v*w"},
      {T({{2, 2}, {2, 1}}), Partition{2, 1, 1, 1}, "r*u^2*v"},
      {T({{2, 2}, {2, 2}}), Partition{2, 2, 2, 2}, "r^2*u^3"},
  };
  auto all = enumerate_tspp(2);
  rep.check("five tspps of order 2", all.size() == 5, std::to_string(all.size()));
  for (auto& r : rows) {
    const std::string tag = "tspp " + std::to_string(r.t.pp().cubes()) + " cubes";
    rep.check(tag + " is enumerated", std::count(all.begin(), all.end(), r.t) == 1);
    rep.check(tag + " has pi_2 = " + r.pik.str(), pi_k(r.t, 2) == r.pik, pi_k(r.t, 2).str());
    rep.compare(tag + " weight", tspp_weight(r.t, 3), MVLaurent::parse(pt, r.weight));
  }
  return rep;
}

IdentityReport frobcomp(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  Tally sets, dets, invol;
  long long det_cases = 0;
  for (auto& lam : partitions_in_box(n, n)) {
    auto lc = complement(lam, n);
    auto f = to_frobenius(lam), g = to_frobenius(lc);
    std::vector<int> s1 = f.arms, s2 = g.arms;
    s1.insert(s1.end(), g.legs.begin(), g.legs.end());
    s2.insert(s2.end(), f.legs.begin(), f.legs.end());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    std::vector<int> full(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
    sets.add(s1 == full && s2 == full, lam.str());
    if (is_k_tall(lam, 0, n + 1) && is_k_tall(lc, 0, n + 1)) {
      ++det_cases;
      dets.add(count_tspp_det(lam, 0) == count_tspp_det(lc, 0), lam.str() + " vs " + lc.str());
    }
  }
  for_each_tspp(n, [&](const Tspp& t) {
    auto c = tspp_complement(t);
    invol.add(tspp_complement(c) == t && pi_k(c, 0) == complement(pi_k(t, 0), n), t.str());
  });
  sets.report(rep, "arms with complement legs and legs with complement arms each fill 0..n-1");
  invol.report(rep, "tspp complement is an involution with pi_0(T^c) = pi_0(T)^c");
  dets.report(rep, "binomial determinant is invariant under complement");
  rep.check("determinant cases present", det_cases > 0);
  return rep;
}

IdentityReport ankdet(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  rep.compare("hook Schur determinant = definition", ank_determinant(n, k), ank_definition(n, k));
  return rep;
}

IdentityReport ankprin(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  rep.compare("hook-content determinant = definition at x = 1", ank_principal(n, k),
              at_ones(ank_definition(n, k), n + k - 1));
  return rep;
}

void decreasing_subsets(int max, int size, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  int hi = cur.empty() ? max : cur.back() - 1;
  for (int v = hi; v >= size - static_cast<int>(cur.size()) - 1; --v) {
    cur.push_back(v);
    decreasing_subsets(max, size, cur, out);
    cur.pop_back();
  }
}

IdentityReport giambelli_check(const Params& p) {
  IdentityReport rep;
  const int l = p.at("l"), e = p.at("e"), m = p.at("m");
  Tally eq;
  for (int rank = 0; rank <= l; ++rank) {
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    decreasing_subsets(e, rank, cur, subs);
    for (auto& arms : subs)
      for (auto& legs : subs) {
        FrobeniusCoords f{arms, legs};
        eq.add_compare(giambelli(f, m), schur(from_frobenius(f), m), f.str());
      }
  }
  eq.report(rep, "hook determinant = bialternant Schur");
  return rep;
}

// ---- c and d recursions ---------------------------------------------------

using CoeffFn = std::function<MVLaurent(const Partition&)>;

MVLaurent lookup(const std::map<Partition, MVLaurent>& m, const Partition& lam) {
  auto it = m.find(lam);
  return it == m.end() ? zero_param() : it->second;
}

// Coefficient of s_lambda in the tspp family at k = 1, r = 1, in closed form.
MVLaurent d_closed(int n, const Partition& lam) {
  if (!is_k_tall(lam, 1, n)) return zero_param();
  auto f = to_frobenius(lam);
  int ue = 0, ve = n * (n - 1) / 2, we = 0;
  for (int i = 0; i < f.rank(); ++i) {
    const int a = f.arms[static_cast<std::size_t>(i)], b = f.legs[static_cast<std::size_t>(i)];
    ue += a + 1;
    ve -= b;
    we += b - 1 - a;
  }
  Monomial m;
  m.set(var::u, ue);
  m.set(var::v, ve);
  m.set(var::w, we);
  return MVLaurent::monomial(param_table(), m, count_tspp_det(lam, 1));
}

MVLaurent rec_factor(int n, int l, int ones) {
  Monomial m;
  m.set(var::u, ones);
  m.set(var::v, n - 1 - l);
  m.set(var::w, l - ones);
  return MVLaurent::monomial(param_table(), m);
}

// Right-hand side of the recursion with the partition-form index set.
MVLaurent rec_partition_form(int n, const Partition& lam, const CoeffFn& prev) {
  const int l = durfee_size(lam);
  auto parts = lam.padded(static_cast<std::size_t>(n));
  MVLaurent acc = zero_param();
  for (unsigned f = 0; f < (1u << l); ++f) {
    std::vector<int> mu;
    int ones = 0;
    for (int i = 0; i < l; ++i) {
      int fi = f >> i & 1;
      ones += fi;
      mu.push_back(parts[static_cast<std::size_t>(i)] - fi);
    }
    for (int i = l + 1; i < n; ++i) mu.push_back(parts[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mu[i] < 0 || (i > 0 && mu[i] > mu[i - 1])) ok = false;
    if (ok) acc = acc + rec_factor(n, l, ones) * prev(Partition(mu));
  }
  return acc;
}

// The same sum indexed by Frobenius coordinates, with the boundary rule that
// a trailing (-1 | 0) pair is dropped.
MVLaurent rec_frobenius_form(int n, const Partition& lam, const CoeffFn& prev, long long& convention_uses) {
  auto fc = to_frobenius(lam);
  const int l = fc.rank();
  MVLaurent acc = zero_param();
  for (unsigned f = 0; f < (1u << l); ++f) {
    FrobeniusCoords g;
    int ones = 0;
    for (int i = 0; i < l; ++i) {
      int fi = f >> i & 1;
      ones += fi;
      g.arms.push_back(fc.arms[static_cast<std::size_t>(i)] - fi);
      g.legs.push_back(fc.legs[static_cast<std::size_t>(i)] - 1);
    }
    if (l > 0 && g.arms.back() == -1 && g.legs.back() == 0) {
      g.arms.pop_back();
      g.legs.pop_back();
      ++convention_uses;
    }
    try {
      g.validate();
    } catch (const std::invalid_argument&) {
      continue;
    }
    acc = acc + rec_factor(n, l, ones) * prev(from_frobenius(g));
  }
  return acc;
}

IdentityReport recur_cd(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  auto c_now = schur_expand(gf_enumerate(n), n);
  auto c_prev = schur_expand(gf_enumerate(n - 1), n - 1);
  auto a = ank_definition(n, 1);
  Substitution r1(a.table());
  r1.set(var::r, Rational(1));
  auto d_expand = schur_expand(poly_substitute(a, r1), n);

  CoeffFn c_prev_fn = [&](const Partition& mu) { return lookup(c_prev, mu); };
  CoeffFn d_prev_fn = [&](const Partition& mu) { return d_closed(n - 1, mu); };

  Tally c_det, d_exp, c_rec, d_rec, c_frob, d_frob, cd;
  long long conv_c = 0, conv_d = 0;
  for (auto& lam : partitions_in_box(n, n - 1)) {
    const std::string tag = lam.str();
    MVLaurent c = lookup(c_now, lam), d = d_closed(n, lam);
    c_det.add_compare(schur_coeff_c(n, lam), c, tag);
    d_exp.add_compare(d, lookup(d_expand, lam), tag);
    cd.add_compare(c, d, tag);
    const int l = durfee_size(lam);
    if (lam[static_cast<std::size_t>(l)] != l) {
      // The first column of the coefficient matrix vanishes.
      c_rec.add(c.is_zero(), tag + " should vanish");
      d_rec.add(d.is_zero(), tag + " should vanish");
      continue;
    }
    auto c_rhs = rec_partition_form(n, lam, c_prev_fn);
    auto d_rhs = rec_partition_form(n, lam, d_prev_fn);
    c_rec.add_compare(c, c_rhs, tag);
    d_rec.add_compare(d, d_rhs, tag);
    c_frob.add_compare(rec_frobenius_form(n, lam, c_prev_fn, conv_c), c_rhs, tag);
    d_frob.add_compare(rec_frobenius_form(n, lam, d_prev_fn, conv_d), d_rhs, tag);
  }
  c_det.report(rep, "c from the coefficient determinant = c from the Schur expansion");
  d_exp.report(rep, "d in closed form = d from the Schur expansion of the tspp family");
  c_rec.report(rep, "c satisfies the recursion");
  d_rec.report(rep, "d satisfies the recursion");
  c_frob.report(rep, "Frobenius-indexed recursion for c (boundary rule used " + std::to_string(conv_c) + " times)");
  d_frob.report(rep, "Frobenius-indexed recursion for d (boundary rule used " + std::to_string(conv_d) + " times)");
  cd.report(rep, "c = d");
  return rep;
}

// ---- principal specializations and csspps ----------------------------------

MVLaurent principal_at(int n, int k, const MVLaurent& w) {
  Substitution s(param_table());
  s.set(var::u, Rational(1)).set(var::v, Rational(1)).set(var::w, w);
  return poly_substitute(ank_principal(n, k), s);
}

MVLaurent with_t(const MVLaurent& p, const MVLaurent& t) {
  Substitution s(param_table());
  s.set(var::t, t);
  return poly_substitute(p, s);
}

Rational at_r1(const MVLaurent& p) {
  Substitution s(param_table());
  s.set(var::r, Rational(1));
  return poly_substitute(p, s).constant_value();
}

IdentityReport thm2a(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  rep.compare("family at (u,v,w) = (1,1,t), x = 1 vs class-0 csspps at t + 2", principal_at(n + 1, 0, pvar(var::t)),
              with_t(csspp_gf(n, 0), pvar(var::t) + pconst(2)));
  return rep;
}

IdentityReport thm2b(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  auto lhs = principal_at(n + 1, k, pconst(-1));
  auto rhs = with_t(csspp_gf(n, 2 * k), pconst(1));
  rep.compare("family at (1,1,-1), x = 1 vs class-2k csspps at t = 1", lhs, rhs);
  if (k == 1) {
    mpz_class expected = asm_count_formula(n + 1);
    Rational got = at_r1(rhs);
    rep.check("at r = 1 this counts asms of size n + 1", got == Rational(expected.get_si()),
              got.str() + " vs " + expected.get_str());
  }
  return rep;
}

IdentityReport thm2c(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  auto lhs = principal_at(n + 1, k, pconst(0));
  rep.compare("family at (1,1,0), x = 1 vs class-k csspps at t = 2", lhs, with_t(csspp_gf(n, k), pconst(2)));
  if (k == 1) {
    Rational got = at_r1(lhs);
    Rational expected = Rational(2).pow(n * (n + 1) / 2);
    rep.check("at r = 1 this is 2^C(n+1,2)", got == expected, got.str() + " vs " + expected.str());
  }
  return rep;
}

IdentityReport prop61(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  rep.compare("csspp enumeration = determinant", csspp_gf(n, k), csspp_gf_det(n, k));
  return rep;
}

// ---- antisymmetrizer and orientations --------------------------------------

IdentityReport lemma41(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  if (n <= 4) {
    rep.compare("antisymmetrized product = det(Y_i^j - X_i^j)", lemma41_lhs(n), lemma41_rhs(n));
    return rep;
  }
  std::mt19937 rng(20240601u + static_cast<unsigned>(n));
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  Tally pts;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> x, y;
    for (int i = 0; i < n; ++i) {
      x.push_back(Rational(num(rng), den(rng)));
      y.push_back(Rational(num(rng), den(rng)));
    }
    auto l = lemma41_lhs_at(x, y), r = lemma41_rhs_at(x, y);
    pts.add(l == r, "trial " + std::to_string(trial) + ": " + l.str() + " vs " + r.str());
  }
  pts.report(rep, "antisymmetrized product = det(Y_i^j - X_i^j) at random rational points");
  return rep;
}

IdentityReport orient(const Params& p) {
  const int n = p.at("n");
  auto rep = check_orientation_identities(n);
  if (n <= 4) {
    auto t = xy_table(n);
    Substitution s(t);
    for (int i = 1; i <= n; ++i) s.set(x_of(i), -MVLaurent::variable(t, x_of(i)));
    rep.compare("lemma with X -> -X = orientation determinant", poly_substitute(lemma41_rhs(n), s),
                orientation_det(n));
  }
  return rep;
}

// ---- binomial lemma and matrix identities -----------------------------------

// binom(x + shift, j) as a polynomial in x.
MVLaurent binom_x(const VarTablePtr& t, long long shift, long long j) {
  if (j < 0) return MVLaurent(t);
  MVLaurent acc(t, 1);
  Rational fact = 1;
  for (long long i = 0; i < j; ++i) {
    acc = acc * (MVLaurent::variable(t, 0) + MVLaurent(t, Rational(shift - i)));
    fact *= Rational(i + 1);
  }
  return acc * MVLaurent(t, Rational(1) / fact);
}

IdentityReport binom71(const Params& p) {
  IdentityReport rep;
  const int a = p.at("a"), b = p.at("b"), c = p.at("c");
  auto t = VarTable::make({"x"});
  MVLaurent lhs(t), rhs(t);
  for (int l = 0; l <= b; ++l) lhs = lhs + MVLaurent(t, binomial(l, c)) * binom_x(t, l, l - a);
  for (int s = 0; s <= c; ++s)
    rhs = rhs + MVLaurent(t, Rational((c - s) % 2 ? -1 : 1)) * binom_x(t, b + s + 1, b - a) * binom_x(t, a + s, s) *
                    binom_x(t, c, c - s);
  rep.compare("binomial sum identity in x", lhs, rhs, true);
  return rep;
}

using Entry = std::function<MVLaurent(int, int)>;

PolyMatrix matrix_of(int n, const Entry& e) {
  PolyMatrix m(param_table(), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

void compare_products(IdentityReport& rep, const std::string& label, const PolyMatrix& lhs, const PolyMatrix& rhs,
                      int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& a = lhs(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const auto& b = rhs(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (a != b) {
        rep.compare(label + " at entry (" + std::to_string(i) + "," + std::to_string(j) + ")", a, b);
        return;
      }
    }
  rep.check(label + " [" + std::to_string(n * n) + " entries]", true);
}

MVLaurent delta(int i, int j) { return pconst(i == j ? 1 : 0); }

IdentityReport matid1(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n");
  auto T = pvar(var::t), r = pvar(var::r);
  auto t1 = T + pconst(1), t2 = T + pconst(2);
  auto A = matrix_of(n, [&](int i, int j) {
    if (j > i) return zero_param();
    return pconst(binomial(i, j)) * pvar(var::t, j + 1 - n) * t1.pow(i - j) * t2.pow(n - i - 1);
  });
  auto B = matrix_of(n, [&](int i, int j) {
    return pconst(Rational((i + j) % 2 ? -1 : 1) * binomial(i, j)) +
           r * pvar(var::t, j - i) * pconst(binomial(n + i, n - j - 1) * binomial(i + j, i));
  });
  auto C = matrix_of(n, [&](int i, int j) {
    MVLaurent s = zero_param();
    for (int l = 0; l <= std::min(i, j); ++l) s = s + pconst(binomial(i, l) * binomial(j, l)) * t2.pow(j - l);
    return delta(i, j) + r * s;
  });
  auto D = matrix_of(n, [&](int i, int j) {
    if (j > i) return zero_param();
    return pconst(binomial(i, j)) * pvar(var::t, j + 1 - n) * t2.pow(n - i - 1);
  });
  compare_products(rep, "first product = second product", A * B, C * D, n);
  rep.compare("det of the second factor = family at (1,1,t), x = 1", det_poly(B), principal_at(n + 1, 0, T));
  rep.compare("det of the third factor = csspp determinant at t + 2", det_poly(C), with_t(csspp_gf_det(n, 0), t2));
  return rep;
}

IdentityReport matid2(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  auto r = pvar(var::r);
  auto A = matrix_of(n, [&](int i, int j) {
    return pconst(binomial(j, i)) + r * pconst(binomial(n + k + j, n - i - 1) * binomial(i + j + k, j));
  });
  auto B = matrix_of(n, [&](int i, int j) { return pconst(binomial(k + j - i - 1, j - i)); });
  auto C = matrix_of(n, [&](int i, int j) { return pconst(binomial(k + j, j - i)); });
  auto D = matrix_of(n, [&](int i, int j) { return delta(i, j) + r * pconst(binomial(2 * k + i + j, j)); });
  compare_products(rep, "first product = second product", A * B, C * D, n);
  rep.compare("det of the first factor = family at (1,1,-1), x = 1", det_poly(A), principal_at(n + 1, k, pconst(-1)));
  return rep;
}

IdentityReport matid3(const Params& p) {
  IdentityReport rep;
  const int n = p.at("n"), k = p.at("k");
  auto r = pvar(var::r);
  auto A = matrix_of(n, [&](int i, int j) {
    return delta(i, j) + r * pconst(binomial(n + k + j, n - i - 1) * binomial(i + j + k, j));
  });
  auto B = matrix_of(n, [&](int i, int j) { return pconst(binomial(k + j, j - i)); });
  auto D = matrix_of(n, [&](int i, int j) {
    Rational s = 0;
    for (int l = 0; l <= std::min(i, j); ++l) s += binomial(i, l) * binomial(j + k, l + k) * Rational(2).pow(j - l);
    return delta(i, j) + r * pconst(s);
  });
  compare_products(rep, "first product = second product", A * B, B * D, n);
  rep.compare("det of the first factor = family at (1,1,0), x = 1", det_poly(A), principal_at(n + 1, k, pconst(0)));
  rep.compare("det of the last factor = csspp determinant at t = 2", det_poly(D), with_t(csspp_gf_det(n, k), pconst(2)));
  return rep;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c = {
      {"ankdet", "tspp family: hook Schur determinant vs definition", {{"n", 1, 5}, {"k", 0, 3}}, ankdet},
      {"ankprin", "tspp family at x = 1: hook-content determinant vs definition", {{"n", 1, 5}, {"k", 0, 3}}, ankprin},
      {"asmcount", "number of asms vs the product formula", {{"n", 1, 7}}, asmcount},
      {"binom71", "binomial sum transformation as a polynomial identity in x", {{"a", 0, 12}, {"b", 0, 12}, {"c", 0, 12}},
       binom71},
      {"detform", "asm generating function: bialternant determinant vs enumeration", {{"n", 1, 5}}, detform},
      {"frobcomp", "Frobenius coordinates of complements and the determinant symmetry", {{"n", 1, 6}}, frobcomp},
      {"giambelli", "Giambelli determinant vs Schur for ranks <= l, entries <= e, m variables",
       {{"l", 0, 3}, {"e", 0, 5}, {"m", 1, 6}}, giambelli_check},
      {"lemma41", "antisymmetrized product vs determinant", {{"n", 1, 6}}, lemma41},
      {"matid1", "matrix identity for the class-0 csspp case", {{"n", 1, 6}}, matid1},
      {"matid2", "matrix identity for the class-2k csspp case", {{"n", 1, 6}, {"k", 0, 4}}, matid2},
      {"matid3", "matrix identity for the class-k csspp case at t = 2", {{"n", 1, 6}, {"k", 0, 4}}, matid3},
      {"opform", "asm generating function: operator formula vs enumeration", {{"n", 1, 5}}, opform},
      {"orient", "orientation sums of the looped complete graph", {{"n", 1, 5}}, orient},
      {"prop21", "tspp count with given pi_k vs binomial determinant", {{"n", 1, 7}, {"k", 0, 3}}, prop21},
      {"prop61", "csspp generating function: enumeration vs determinant", {{"n", 0, 5}, {"k", 0, 5}}, prop61},
      {"recur_cd", "recursions for the Schur coefficients c and d, and c = d", {{"n", 2, 5}}, recur_cd},
      {"sixv", "asm generating function at v = 1 vs the six-vertex X_n", {{"n", 1, 5}}, sixv},
      {"spec", "asm generating function at interior x = 1 vs statistics", {{"n", 2, 6}}, spec},
      {"statsum", "per-asm statistic identities", {{"n", 1, 6}}, statsum},
      {"thm1", "asm generating function vs tspp family at r = 1, k = 1", {{"n", 1, 5}}, thm1},
      {"thm2a", "tspp family at (1,1,t) vs class-0 csspps at t + 2", {{"n", 0, 5}}, thm2a},
      {"thm2b", "tspp family at (1,1,-1) vs class-2k csspps at t = 1", {{"n", 0, 5}, {"k", 0, 2}}, thm2b},
      {"thm2c", "tspp family at (1,1,0) vs class-k csspps at t = 2", {{"n", 0, 5}, {"k", 0, 3}}, thm2c},
      {"tspp2census", "the five tspps of order 2 with pi_2 and weights", {}, tspp2census},
      {"twoenum", "2-enumeration of asms", {{"n", 1, 7}}, twoenum},
  };
  std::sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return c;
}

void add_range(std::vector<SuiteItem>& out, const std::string& id, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) out.push_back({id, {{"n", n}}});
}

void add_grid(std::vector<SuiteItem>& out, const std::string& id, int nlo, int nhi, int klo, int khi) {
  for (int n = nlo; n <= nhi; ++n)
    for (int k = klo; k <= khi; ++k) out.push_back({id, {{"n", n}, {"k", k}}});
}

void add_binom(std::vector<SuiteItem>& out, int bmax) {
  for (int b = 0; b <= bmax; ++b)
    for (int a = 0; a <= b; ++a)
      for (int c = 0; c <= b; ++c) out.push_back({"binom71", {{"a", a}, {"b", b}, {"c", c}}});
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry* find_identity(const std::string& id) {
  for (auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

IdentityReport verify(const std::string& id, const Params& params) {
  const CatalogEntry* e = find_identity(id);
  if (!e) throw UnknownIdentity(id);
  for (auto& [name, value] : params) {
    auto it = std::find_if(e->params.begin(), e->params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (it == e->params.end()) throw ParamOutOfBounds(id + " takes no parameter " + name);
    if (value < it->min || value > it->max)
      throw ParamOutOfBounds(id + ": " + name + " must lie in [" + std::to_string(it->min) + ", " +
                             std::to_string(it->max) + "]");
  }
  for (auto& s : e->params)
    if (!params.count(s.name)) throw ParamOutOfBounds(id + " needs parameter " + s.name);
  if (id == "binom71" && (params.at("a") > params.at("b") || params.at("c") > params.at("b")))
    throw ParamOutOfBounds("binom71 needs a <= b and c <= b");
  auto start = std::chrono::steady_clock::now();
  IdentityReport rep = e->run(params);
  rep.id = id;
  rep.params = params;
  rep.finish();
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SuiteLevel parse_level(const std::string& text) {
  if (text == "quick") return SuiteLevel::quick;
  if (text == "full") return SuiteLevel::full;
  if (text == "extended") return SuiteLevel::extended;
  throw std::invalid_argument("unknown suite level: " + text);
}

std::string level_name(SuiteLevel level) {
  switch (level) {
    case SuiteLevel::quick:
      return "quick";
    case SuiteLevel::full:
      return "full";
    case SuiteLevel::extended:
      return "extended";
  }
  return "?";
}

std::vector<SuiteItem> suite_plan(SuiteLevel level) {
  std::vector<SuiteItem> out;
  out.push_back({"tspp2census", {}});
  if (level == SuiteLevel::quick) {
    add_range(out, "thm1", 1, 3);
    add_range(out, "thm2a", 1, 3);
    add_grid(out, "thm2b", 1, 3, 0, 2);
    add_grid(out, "thm2c", 1, 3, 0, 2);
    add_range(out, "opform", 1, 3);
    add_range(out, "detform", 1, 3);
    add_range(out, "spec", 2, 3);
    add_range(out, "sixv", 1, 3);
    add_range(out, "statsum", 1, 3);
    add_grid(out, "prop21", 1, 3, 0, 2);
    add_range(out, "frobcomp", 1, 3);
    add_range(out, "lemma41", 1, 3);
    add_range(out, "orient", 1, 3);
    add_grid(out, "ankdet", 1, 3, 0, 2);
    add_grid(out, "ankprin", 1, 3, 0, 2);
    out.push_back({"giambelli", {{"l", 2}, {"e", 2}, {"m", 3}}});
    add_range(out, "recur_cd", 2, 3);
    add_binom(out, 3);
    add_range(out, "matid1", 1, 3);
    add_grid(out, "matid2", 1, 3, 0, 3);
    add_grid(out, "matid3", 1, 3, 0, 3);
    add_grid(out, "prop61", 0, 3, 0, 4);
    add_range(out, "asmcount", 1, 5);
    add_range(out, "twoenum", 1, 5);
  } else {
    add_range(out, "thm1", 1, 4);
    add_range(out, "thm2a", 1, 4);
    add_grid(out, "thm2b", 1, 4, 0, 2);
    add_grid(out, "thm2c", 1, 4, 0, 2);
    add_range(out, "opform", 1, 4);
    add_range(out, "detform", 1, 4);
    add_range(out, "spec", 2, 5);
    add_range(out, "sixv", 1, 4);
    add_range(out, "statsum", 1, 5);
    add_grid(out, "prop21", 1, 6, 0, 2);
    add_range(out, "frobcomp", 1, 5);
    add_range(out, "lemma41", 1, 6);
    add_range(out, "orient", 1, 4);
    add_grid(out, "ankdet", 1, 5, 0, 2);
    add_grid(out, "ankprin", 1, 4, 0, 2);
    for (int m = 1; m <= 5; ++m) out.push_back({"giambelli", {{"l", 3}, {"e", 4}, {"m", m}}});
    add_range(out, "recur_cd", 2, 4);
    add_binom(out, 8);
    add_range(out, "matid1", 1, 5);
    add_grid(out, "matid2", 1, 5, 0, 3);
    add_grid(out, "matid3", 1, 5, 0, 3);
    add_grid(out, "prop61", 0, 4, 0, 4);
    add_range(out, "asmcount", 1, 7);
    add_range(out, "twoenum", 1, 6);
    if (level == SuiteLevel::extended) {
      add_range(out, "thm1", 5, 5);
      add_range(out, "opform", 5, 5);
      add_range(out, "detform", 5, 5);
      add_range(out, "sixv", 5, 5);
      add_range(out, "orient", 5, 5);
      add_range(out, "recur_cd", 5, 5);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SuiteItem& a, const SuiteItem& b) { return std::tie(a.id, a.params) < std::tie(b.id, b.params); });
  return out;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("ASMTSPP_THREADS")) {
    int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, static_cast<unsigned>(c));
  }
  return std::max(1u, n);
}

std::vector<IdentityReport> run_items(const std::vector<SuiteItem>& items, unsigned threads) {
  std::vector<IdentityReport> out(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = verify(items[i].id, items[i].params);
      } catch (const std::exception& e) {
        IdentityReport rep;
        rep.id = items[i].id;
        rep.params = items[i].params;
        rep.check("completed without error", false, e.what());
        rep.finish();
        out[i] = std::move(rep);
      }
    }
  };
  const unsigned n = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<IdentityReport> run_suite(SuiteLevel level, unsigned threads) {
  return run_items(suite_plan(level), threads);
}

nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = r.passed ? "pass" : "fail";
  j["millis"] = r.millis;
  const ReportPart* lead = nullptr;
  for (auto& p : r.parts)
    if (!p.passed) {
      lead = &p;
      break;
    }
  if (!lead && !r.parts.empty()) lead = &r.parts.front();
  if (lead) {
    j["lhs_terms"] = lead->lhs_terms;
    if (lead->passed) {
      j["rhs_terms"] = lead->rhs_terms;
    } else {
      j["diff_witness"] = lead->witness.value_or(lead->label);
    }
  }
  nlohmann::json parts = nlohmann::json::array();
  for (auto& p : r.parts) {
    nlohmann::json q;
    q["label"] = p.label;
    q["status"] = p.passed ? "pass" : "fail";
    q["lhs_terms"] = p.lhs_terms;
    q["rhs_terms"] = p.rhs_terms;
    if (p.witness) q["diff_witness"] = *p.witness;
    if (p.lhs_text) q["lhs"] = *p.lhs_text;
    if (p.rhs_text) q["rhs"] = *p.rhs_text;
    parts.push_back(std::move(q));
  }
  j["parts"] = std::move(parts);
  return j;
}

std::string report_text(const IdentityReport& r) {
  std::ostringstream os;
  os << r.id;
  if (!r.params.empty()) os << ' ' << params_str(r.params);
  os << ": " << (r.passed ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(1) << r.millis << " ms)\n";
  for (auto& p : r.parts) {
    os << "  [" << (p.passed ? "pass" : "FAIL") << "] " << p.label;
    if (p.lhs_terms || p.rhs_terms) os << " (lhs " << p.lhs_terms << " terms, rhs " << p.rhs_terms << " terms)";
    os << '\n';
    if (p.witness) os << "      first difference: " << *p.witness << '\n';
    if (p.lhs_text) os << "      lhs: " << *p.lhs_text << '\n';
    if (p.rhs_text && (!p.passed || *p.rhs_text != *p.lhs_text)) os << "      rhs: " << *p.rhs_text << '\n';
  }
  return os.str();
}

std::string summary_table(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "id" << std::setw(20) << "params" << std::setw(8) << "status" << std::right
     << std::setw(12) << "ms" << '\n';
  std::size_t passed = 0;
  double total = 0;
  for (auto& r : reports) {
    os << std::left << std::setw(12) << r.id << std::setw(20) << params_str(r.params) << std::setw(8)
       << (r.passed ? "pass" : "FAIL") << std::right << std::setw(12) << std::fixed << std::setprecision(1)
       << r.millis << '\n';
    passed += r.passed;
    total += r.millis;
  }
  os << passed << "/" << reports.size() << " passed, " << std::fixed << std::setprecision(1) << total
     << " ms of check time\n";
  return os.str();
}

}  // namespace asmtspp
