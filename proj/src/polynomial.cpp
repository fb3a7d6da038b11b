#include "asmtspp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace asmtspp {

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("VarTable: at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw std::invalid_argument("VarTable: bad variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("VarTable: bad variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw std::invalid_argument("VarTable: duplicate variable '" + n + "'");
  }
}

VarTablePtr VarTable::canonical(int m) {
  static std::mutex mu;
  static std::map<int, VarTablePtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names{"r", "u", "v", "w", "t"};
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  auto table = std::make_shared<const VarTable>(std::move(names));
  cache.emplace(m, table);
  return table;
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

// ---------------------------------------------------------------- Monomial

namespace {

Monomial::Exponent checked_exponent(int e) {
  if (e < INT16_MIN || e > INT16_MAX) throw std::overflow_error("Monomial: exponent out of range");
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

void Monomial::set(std::size_t i, int e) { exps_.at(i) = checked_exponent(e); }

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = checked_exponent(exps_[i] + o.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = checked_exponent(exps_[i] - o.exps_[i]);
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = checked_exponent(exps_[i] * e);
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i];
  return false;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kMaxVars * sizeof(Exponent) / 8];
  std::memcpy(words, exps_.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

// ---------------------------------------------------------------- MVLaurent

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

void require_same(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw TableMismatch("polynomials over different variable tables");
}

}  // namespace

MVLaurent::MVLaurent(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("MVLaurent: null variable table");
}

MVLaurent::MVLaurent(VarTablePtr table, Rational constant) : MVLaurent(std::move(table)) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, std::move(constant)});
}

MVLaurent MVLaurent::variable(VarTablePtr table, std::size_t index, int power) {
  if (index >= table->size()) throw std::out_of_range("MVLaurent::variable: index out of range");
  Monomial m;
  m.set(index, power);
  return monomial(std::move(table), m);
}

MVLaurent MVLaurent::variable(VarTablePtr table, std::string_view name, int power) {
  auto idx = table->index(name);
  return variable(std::move(table), idx, power);
}

MVLaurent MVLaurent::monomial(VarTablePtr table, const Monomial& mono, Rational coef) {
  MVLaurent p(std::move(table));
  if (!coef.is_zero()) p.terms_.push_back({mono, std::move(coef)});
  return p;
}

MVLaurent MVLaurent::from_terms(VarTablePtr table, std::vector<Term> terms) {
  PolyBuilder b(std::move(table));
  b.reserve(terms.size());
  for (auto& t : terms) b.add(t.mono, t.coef);
  return b.build();
}

bool MVLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MVLaurent::constant_value() const {
  if (!is_constant()) throw std::domain_error("MVLaurent: not a constant: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

Rational MVLaurent::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

const Term& MVLaurent::leading_term() const {
  if (terms_.empty()) throw std::domain_error("MVLaurent: leading term of zero");
  return terms_.back();
}

int MVLaurent::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].mono[var];
  for (const auto& t : terms_) m = std::min(m, int(t.mono[var]));
  return m;
}

int MVLaurent::max_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].mono[var];
  for (const auto& t : terms_) m = std::max(m, int(t.mono[var]));
  return m;
}

int MVLaurent::min_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
int MVLaurent::max_degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }

bool MVLaurent::is_polynomial() const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < table_->size(); ++i)
      if (t.mono[i] < 0) return false;
  return true;
}

void MVLaurent::check_table(const MVLaurent& o) const { require_same(table_, o.table_); }

MVLaurent& MVLaurent::operator+=(const MVLaurent& o) {
  check_table(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->mono < b->mono) {
      out.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Rational c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

MVLaurent& MVLaurent::operator-=(const MVLaurent& o) { return *this += -o; }

MVLaurent& MVLaurent::operator*=(const MVLaurent& o) {
  *this = *this * o;
  return *this;
}

MVLaurent& MVLaurent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MVLaurent MVLaurent::operator-() const {
  MVLaurent r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MVLaurent operator*(const MVLaurent& a, const MVLaurent& b) {
  a.check_table(b);
  MVLaurent r(a.table_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const MVLaurent& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MVLaurent& large = &small == &a ? b : a;
  if (small.terms_.size() == 1) {
    // Multiplying by a monomial preserves the order.
    const Term& s = small.terms_[0];
    r.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) r.terms_.push_back({t.mono * s.mono, t.coef * s.coef});
    return r;
  }
  PolyBuilder builder(a.table_);
  builder.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 22));
  for (const auto& s : small.terms_) builder.add_shifted(large, s.mono, s.coef);
  return builder.build();
}

MVLaurent MVLaurent::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("MVLaurent::pow: negative power of a non-monomial");
    return monomial(table_, terms_[0].mono.pow(e), terms_[0].coef.pow(e));
  }
  MVLaurent result(table_, 1);
  MVLaurent base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MVLaurent MVLaurent::shifted(const Monomial& m) const {
  MVLaurent r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

bool operator==(const MVLaurent& a, const MVLaurent& b) {
  if (a.table_ != b.table_ && !(*a.table_ == *b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string monomial_str(const VarTable& table, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string MVLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.sign() < 0;
    Rational mag = neg ? -t.coef : t.coef;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += monomial_str(*table_, t.mono);
    }
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(const VarTable& table, std::string_view text) : table_(table), s_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (s_.substr(pos_) == "0") return terms;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    terms.push_back(term(neg));
    skip_ws();
    while (pos_ < s_.size()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(term(op == '-'));
      skip_ws();
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Term term(bool neg) {
    Term t{Monomial{}, 1};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      digits();
      if (peek() == '/') {
        ++pos_;
        digits();
      }
      t.coef = Rational::parse(s_.substr(start, pos_ - start));
      if (t.coef.is_zero()) fail("zero coefficient");
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      std::vector<bool> seen(table_.size(), false);
      while (true) {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable name");
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        auto name = s_.substr(start, pos_ - start);
        auto idx = table_.find(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        if (seen[*idx]) fail("repeated variable '" + std::string(name) + "'");
        seen[*idx] = true;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          bool eneg = false;
          if (peek() == '-') {
            eneg = true;
            ++pos_;
          }
          e = std::stoi(std::string(digits()));
          if (eneg) e = -e;
          if (e == 0 || e == 1) fail("non-canonical exponent");
        }
        t.mono.set(*idx, e);
        if (peek() != '*') break;
        ++pos_;
      }
    }
    if (neg) t.coef = -t.coef;
    return t;
  }

  const VarTable& table_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MVLaurent MVLaurent::parse(VarTablePtr table, std::string_view text) {
  TermParser parser(*table, text);
  auto terms = parser.parse();
  return from_terms(std::move(table), std::move(terms));
}

// ---------------------------------------------------------------- PolyBuilder

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const MVLaurent& p, const Rational& scale) {
  require_same(table_, p.table());
  if (scale.is_zero()) return;
  for (const auto& t : p.terms()) add(t.mono, scale.is_one() ? t.coef : t.coef * scale);
}

void PolyBuilder::add_shifted(const MVLaurent& p, const Monomial& m, const Rational& scale) {
  require_same(table_, p.table());
  if (scale.is_zero()) return;
  for (const auto& t : p.terms()) add(t.mono * m, scale.is_one() ? t.coef : t.coef * scale);
}

MVLaurent PolyBuilder::build() {
  MVLaurent p(table_);
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  acc_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(), term_less);
  return p;
}

// ---------------------------------------------------------------- free functions

MVLaurent poly_mul(const MVLaurent& p, const MVLaurent& q) { return p * q; }

MVLaurent poly_exact_div(const MVLaurent& p, const MVLaurent& q) {
  require_same(p.table(), q.table());
  if (q.is_zero()) throw std::domain_error("poly_exact_div: division by zero");
  if (p.is_zero()) return MVLaurent(p.table());
  const auto& table = p.table();
  const std::size_t nv = table->size();

  // In an integral domain the extreme exponents of a product are sums of
  // those of the factors, which bounds the support of any exact quotient.
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    lo[i] = p.min_exponent(i) - q.min_exponent(i);
    hi[i] = p.max_exponent(i) - q.max_exponent(i);
    if (lo[i] > hi[i]) throw NonExactDivision("poly_exact_div: exponent bounds are inconsistent");
  }
  const int deg_lo = p.min_degree() - q.min_degree();

  const Term& lead_q = q.leading_term();
  const Rational lead_inv = lead_q.coef.inverse();

  std::map<Monomial, Rational> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coef);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial qm = top->first / lead_q.mono;
    Rational qc = top->second * lead_inv;
    if (qm.degree() < deg_lo) throw NonExactDivision("poly_exact_div: nonzero remainder");
    for (std::size_t i = 0; i < nv; ++i)
      if (qm[i] < lo[i] || qm[i] > hi[i]) throw NonExactDivision("poly_exact_div: nonzero remainder");
    for (const auto& t : q.terms()) {
      Monomial m = t.mono * qm;
      Rational c = t.coef * qc;
      auto [it, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return MVLaurent::from_terms(table, std::move(quotient));
}

Substitution& Substitution::set(std::size_t var, MVLaurent value) {
  require_same(table_, value.table());
  if (var >= table_->size()) throw std::out_of_range("Substitution: variable index out of range");
  for (auto& e : entries_)
    if (e.first == var) {
      e.second = std::move(value);
      return *this;
    }
  entries_.emplace_back(var, std::move(value));
  return *this;
}

Substitution& Substitution::set(std::size_t var, const Rational& value) {
  return set(var, MVLaurent(table_, value));
}

Substitution& Substitution::set(std::string_view name, MVLaurent value) {
  return set(table_->index(name), std::move(value));
}

Substitution& Substitution::set(std::string_view name, const Rational& value) {
  return set(table_->index(name), value);
}

MVLaurent poly_substitute(const MVLaurent& p, const Substitution& sigma) {
  require_same(p.table(), sigma.table());
  const auto& entries = sigma.entries();
  if (entries.empty()) return p;

  bool all_constant = std::all_of(entries.begin(), entries.end(),
                                  [](const auto& e) { return e.second.is_constant(); });

  auto check_invertible = [&](std::size_t var, const MVLaurent& value) {
    if (value.is_zero())
      throw std::domain_error("poly_substitute: zero substituted for " + p.table()->name(var) +
                              " which has a negative exponent");
    if (value.size() != 1)
      throw std::domain_error("poly_substitute: non-invertible value substituted for " + p.table()->name(var) +
                              " which has a negative exponent");
  };

  PolyBuilder builder(p.table());
  if (all_constant) {
    std::vector<std::pair<std::size_t, Rational>> vals;
    for (const auto& [var, value] : entries) vals.emplace_back(var, value.constant_value());
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      Rational c = t.coef;
      for (const auto& [var, val] : vals) {
        int e = m[var];
        if (e == 0) continue;
        if (e < 0 && val.is_zero())
          throw std::domain_error("poly_substitute: zero substituted for " + p.table()->name(var) +
                                  " which has a negative exponent");
        c *= val.pow(e);
        m.set(var, 0);
      }
      builder.add(m, c);
    }
    return builder.build();
  }

  // General case: cache powers of each image.
  std::vector<std::map<int, MVLaurent>> powers(entries.size());
  auto power_of = [&](std::size_t k, int e) -> const MVLaurent& {
    auto it = powers[k].find(e);
    if (it != powers[k].end()) return it->second;
    if (e < 0) check_invertible(entries[k].first, entries[k].second);
    return powers[k].emplace(e, entries[k].second.pow(e)).first->second;
  };
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    MVLaurent acc(p.table(), t.coef);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      int e = m[entries[k].first];
      if (e == 0) continue;
      m.set(entries[k].first, 0);
      acc *= power_of(k, e);
    }
    builder.add_shifted(acc, m);
  }
  return builder.build();
}

std::vector<SignedPermutation> all_permutations(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    out.push_back({perm, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MVLaurent antisymmetrize(const MVLaurent& p, const std::vector<std::vector<std::size_t>>& groups) {
  if (groups.empty()) return p;
  const std::size_t n = groups[0].size();
  for (const auto& g : groups) {
    if (g.size() != n) throw std::invalid_argument("antisymmetrize: groups have unequal lengths");
    for (auto v : g)
      if (v >= p.table()->size()) throw std::out_of_range("antisymmetrize: variable index out of range");
  }
  std::vector<bool> used(p.table()->size(), false);
  for (const auto& g : groups)
    for (auto v : g) {
      if (used[v]) throw std::invalid_argument("antisymmetrize: repeated variable");
      used[v] = true;
    }

  PolyBuilder builder(p.table());
  for (const auto& sp : all_permutations(static_cast<int>(n))) {
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      // f(x_{sigma(1)}, ...): the exponent of x_i moves to x_{sigma(i)}.
      for (const auto& g : groups)
        for (std::size_t i = 0; i < n; ++i) m.set(g[sp.perm[i]], t.mono[g[i]]);
      builder.add(m, sp.sign > 0 ? t.coef : -t.coef);
    }
  }
  return builder.build();
}

MVLaurent rebase(const MVLaurent& p, const VarTablePtr& target) {
  if (p.table() == target || *p.table() == *target) return MVLaurent::from_terms(target, p.terms());
  const auto& src = *p.table();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->find(src.name(i));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw TableMismatch("rebase: variable '" + src.name(i) + "' is not in the target table");
      m.set(*map[i], t.mono[i]);
    }
    terms.push_back({m, t.coef});
  }
  return MVLaurent::from_terms(target, std::move(terms));
}

std::optional<Monomial> first_difference(const MVLaurent& a, const MVLaurent& b) {
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  while (ia != ea || ib != eb) {
    if (ia == ea) return ib->mono;
    if (ib == eb) return ia->mono;
    if (ia->mono != ib->mono) return ib->mono < ia->mono ? ia->mono : ib->mono;
    if (ia->coef != ib->coef) return ia->mono;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace asmtspp
