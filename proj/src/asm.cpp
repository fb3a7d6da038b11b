#include "asmtspp/asm.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "asmtspp/determinant.hpp"
#include "asmtspp/schur.hpp"

namespace asmtspp {

namespace {

std::vector<std::vector<int>> parse_int_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::string norm(text);
  for (char& c : norm)
    if (c == ';') c = '\n';
    else if (c == ',') c = ' ';
  std::istringstream lines(norm);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<int> row;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse integer '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("cannot parse integer '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

// Partial sums along every row and column must stay in {0, 1} and end at 1.
void validate_asm(int n, const std::vector<std::int8_t>& a) {
  for (int i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      int x = a[static_cast<std::size_t>(i * n + j)];
      int y = a[static_cast<std::size_t>(j * n + i)];
      if (x < -1 || x > 1) throw std::invalid_argument("Asm: entries must be -1, 0 or 1");
      row += x;
      col += y;
      if (row < 0 || row > 1 || col < 0 || col > 1)
        throw std::invalid_argument("Asm: nonzero entries must alternate in sign starting with 1");
    }
    if (row != 1 || col != 1) throw std::invalid_argument("Asm: every row and column must sum to 1");
  }
}

}  // namespace

Asm::Asm(const std::vector<std::vector<int>>& rows) : n_(static_cast<int>(rows.size())) {
  if (n_ == 0) throw std::invalid_argument("Asm: empty matrix");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("Asm: matrix is not square");
    for (int x : r) a_.push_back(static_cast<std::int8_t>(x < -1 || x > 1 ? 2 : x));
  }
  validate_asm(n_, a_);
}

Asm Asm::identity(int n) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return Asm(r);
}

Asm Asm::anti_identity(int n) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1 - i)] = 1;
  return Asm(r);
}

std::vector<std::vector<int>> Asm::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

std::string Asm::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += std::to_string((*this)(i, j));
    }
    out += '\n';
  }
  return out;
}

Asm Asm::parse(std::string_view text) { return Asm(parse_int_rows(text)); }

MonotoneTriangle::MonotoneTriangle(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.size() != i + 1) throw std::invalid_argument("MonotoneTriangle: row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j] <= r[j - 1]) throw std::invalid_argument("MonotoneTriangle: rows must increase strictly");
    if (i + 1 < rows_.size()) {
      const auto& below = rows_[i + 1];
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] < below[j] || r[j] > below[j + 1]) throw std::invalid_argument("MonotoneTriangle: rows do not interlace");
    }
  }
}

std::string MonotoneTriangle::str() const {
  std::string out;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) out += (j ? " " : "") + std::to_string(r[j]);
    out += '\n';
  }
  return out;
}

MonotoneTriangle MonotoneTriangle::parse(std::string_view text) { return MonotoneTriangle(parse_int_rows(text)); }

namespace {

// Arrow directions on the four edges around a vertex: true means pointing
// right (horizontal) or up (vertical).
struct Arrows {
  bool left, right, top, bottom;
};

Arrows arrows_of(int type) {
  switch (type) {
    case 1: return {true, true, true, true};
    case 2: return {false, false, false, false};
    case 3: return {false, false, true, true};
    case 4: return {true, true, false, false};
    case 5: return {true, false, true, false};
    case 6: return {false, true, false, true};
  }
  throw std::invalid_argument("SixVertexConfig: vertex type must be 1..6");
}

}  // namespace

SixVertexConfig::SixVertexConfig(int n, std::vector<int> types) : n_(n), types_(std::move(types)) {
  if (n <= 0 || types_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("SixVertexConfig: wrong number of vertices");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Arrows a = arrows_of(type(i, j));
      if (j == 0 && !a.left) throw std::invalid_argument("SixVertexConfig: left boundary must point inwards");
      if (j == n - 1 && a.right) throw std::invalid_argument("SixVertexConfig: right boundary must point inwards");
      if (i == 0 && !a.top) throw std::invalid_argument("SixVertexConfig: top boundary must point outwards");
      if (i == n - 1 && a.bottom) throw std::invalid_argument("SixVertexConfig: bottom boundary must point outwards");
      if (j + 1 < n && a.right != arrows_of(type(i, j + 1)).left)
        throw std::invalid_argument("SixVertexConfig: horizontal edge orientations disagree");
      if (i + 1 < n && a.bottom != arrows_of(type(i + 1, j)).top)
        throw std::invalid_argument("SixVertexConfig: vertical edge orientations disagree");
    }
}

std::string SixVertexConfig::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out += (j ? " " : "") + std::to_string(type(i, j));
    out += '\n';
  }
  return out;
}

namespace {

void mt_rec(int i, std::vector<std::vector<int>>& rows, const std::function<void(const MonotoneTriangle&)>& visit) {
  // Fill row i (1-based) from row i+1; row 0 means done.
  if (i == 0) {
    visit(MonotoneTriangle(rows));
    return;
  }
  const auto& below = rows[static_cast<std::size_t>(i)];
  auto& cur = rows[static_cast<std::size_t>(i - 1)];
  cur.assign(static_cast<std::size_t>(i), 0);
  std::function<void(int)> place = [&](int j) {
    if (j == i) {
      mt_rec(i - 1, rows, visit);
      return;
    }
    int lo = below[static_cast<std::size_t>(j)];
    if (j > 0) lo = std::max(lo, cur[static_cast<std::size_t>(j - 1)] + 1);
    int hi = below[static_cast<std::size_t>(j + 1)];
    for (int e = lo; e <= hi; ++e) {
      cur[static_cast<std::size_t>(j)] = e;
      place(j + 1);
    }
  };
  place(0);
}

}  // namespace

void for_each_monotone_triangle(int n, const std::function<void(const MonotoneTriangle&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_monotone_triangle: n must be positive");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  rows.back().resize(static_cast<std::size_t>(n));
  std::iota(rows.back().begin(), rows.back().end(), 1);
  mt_rec(n - 1, rows, visit);
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  for_each_monotone_triangle(n, [&](const MonotoneTriangle& m) { visit(mt_to_asm(m)); });
}

std::vector<Asm> enumerate_asm(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

mpz_class asm_count_formula(int n) {
  mpq_class prod = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(3 * i + 1));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n + i));
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  return prod.get_num();
}

MonotoneTriangle asm_to_mt(const Asm& a) {
  const int n = a.size();
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j) {
      colsum[static_cast<std::size_t>(j)] += a(i, j);
      if (colsum[static_cast<std::size_t>(j)] == 1) row.push_back(j + 1);
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

Asm mt_to_asm(const MonotoneTriangle& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("mt_to_asm: empty triangle");
  for (int j = 0; j < n; ++j)
    if (m.row(n)[static_cast<std::size_t>(j)] != j + 1) throw std::invalid_argument("mt_to_asm: bottom row must be 1..n");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    for (int e : m.row(i)) rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e - 1)] += 1;
    if (i > 1)
      for (int e : m.row(i - 1)) rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e - 1)] -= 1;
  }
  return Asm(rows);
}

AsmStats mt_stats(const MonotoneTriangle& m) {
  const int n = m.size();
  AsmStats s;
  for (int i = 1; i < n; ++i) {
    int sp = 0, le = 0, ri = 0;
    const auto& cur = m.row(i);
    const auto& below = m.row(i + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (cur[j] == below[j]) ++le;
      else if (cur[j] == below[j + 1]) ++ri;
      else ++sp;
    }
    s.special.push_back(sp);
    s.left.push_back(le);
    s.right.push_back(ri);
  }
  int prev_sum = 0;
  for (int i = 1; i <= n; ++i) {
    const auto& cur = m.row(i);
    int sum = std::accumulate(cur.begin(), cur.end(), 0);
    int r_prev = i >= 2 ? s.right[static_cast<std::size_t>(i - 2)] : 0;
    int l_prev = i >= 2 ? s.left[static_cast<std::size_t>(i - 2)] : 0;
    s.dhat.push_back(sum - prev_sum + r_prev - l_prev - 1);
    prev_sum = sum;
  }
  return s;
}

AsmStats asm_stats(const Asm& a) {
  const int n = a.size();
  AsmStats s = mt_stats(asm_to_mt(a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a(i, j) == -1) ++s.neg_ones;
      if (a(i, j) == 0) continue;
      for (int ip = 0; ip < i; ++ip)
        for (int jp = 0; jp < n; ++jp) {
          // Pairs of an upper entry a(ip, jp) with a lower entry a(i, j).
          int prod = a(ip, jp) * a(i, j);
          if (prod == 0) continue;
          if (j <= jp) s.inv += prod;
          if (jp <= j) s.inv_prime += prod;
        }
    }
  for (int j = 0; j < n; ++j) {
    if (a(0, j) == 1) s.rho_top = j;
    if (a(n - 1, j) == 1) s.rho_bottom = n - 1 - j;
  }
  auto rc = sixvertex_row_stats(a);
  s.nu = std::move(rc.nu);
  s.mu = std::move(rc.mu);
  return s;
}

MVLaurent mt_weight(const MonotoneTriangle& m) {
  const int n = m.size();
  auto table = VarTable::canonical(n);
  AsmStats s = mt_stats(m);
  Monomial mono;
  mono.set(var::u, std::accumulate(s.right.begin(), s.right.end(), 0));
  mono.set(var::v, std::accumulate(s.left.begin(), s.left.end(), 0));
  for (int i = 1; i <= n; ++i) mono.set(var::x(i), s.dhat[static_cast<std::size_t>(i - 1)]);
  MVLaurent out = MVLaurent::monomial(table, mono);
  for (int i = 2; i <= n; ++i) {
    int e = s.special[static_cast<std::size_t>(i - 2)];
    if (e == 0) continue;
    Monomial ux, vx, w;
    ux.set(var::u, 1);
    ux.set(var::x(i), 1);
    vx.set(var::v, 1);
    vx.set(var::x(i), -1);
    w.set(var::w, 1);
    auto factor = MVLaurent::from_terms(table, {{ux, 1}, {w, 1}, {vx, 1}});
    out = out * factor.pow(e);
  }
  return out;
}

MVLaurent asm_weight(const Asm& a) { return mt_weight(asm_to_mt(a)); }

MVLaurent gf_enumerate(int n) {
  PolyBuilder acc(VarTable::canonical(n));
  for_each_monotone_triangle(n, [&](const MonotoneTriangle& m) { acc.add(mt_weight(m)); });
  return acc.build();
}

MVLaurent gf_operator(int n) {
  if (n < 1) throw std::invalid_argument("gf_operator: n must be positive");
  auto params = param_table();
  // Shift vector -> coefficient in u, v, w.
  std::map<std::vector<int>, MVLaurent> states;
  states.emplace(std::vector<int>(static_cast<std::size_t>(n), 0), MVLaurent(params, 1));
  const auto u = MVLaurent::variable(params, var::u);
  const auto v = MVLaurent::variable(params, var::v);
  const auto w = MVLaurent::variable(params, var::w);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::map<std::vector<int>, MVLaurent> next;
      auto push = [&next](std::vector<int> key, const MVLaurent& c) {
        auto it = next.find(key);
        if (it == next.end()) next.emplace(std::move(key), c);
        else it->second += c;
      };
      for (const auto& [shift, coef] : states) {
        auto a = shift;
        ++a[static_cast<std::size_t>(i)];
        push(a, coef * u);
        auto b = a;
        --b[static_cast<std::size_t>(j)];
        push(b, coef * w);
        auto c = shift;
        --c[static_cast<std::size_t>(j)];
        push(c, coef * v);
      }
      states = std::move(next);
    }
  std::map<Partition, MVLaurent> by_shape;
  for (const auto& [shift, coef] : states) {
    if (coef.is_zero()) continue;
    // lambda_i = i - 1 + shift_i, read in reverse.
    std::vector<int> L(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) L[static_cast<std::size_t>(n - 1 - i)] = i + shift[static_cast<std::size_t>(i)];
    auto sp = schur_generalized(L, n);
    if (sp.sign == 0) continue;
    auto it = by_shape.find(sp.partition);
    if (it == by_shape.end()) by_shape.emplace(sp.partition, Rational(sp.sign) * coef);
    else it->second += Rational(sp.sign) * coef;
  }
  return schur_combine(by_shape, n);
}

MVLaurent default_pj(int j, std::size_t x, const VarTablePtr& table) {
  const auto X = MVLaurent::variable(table, x);
  const auto base = -MVLaurent::variable(table, var::w) - MVLaurent::variable(table, var::u) * X;
  MVLaurent out(table);
  for (int k = 0; k < j; ++k)
    out += X.pow(k) * base.pow(k) * MVLaurent::variable(table, var::v, j - k - 1);
  return out;
}

MVLaurent gf_determinant(int n, const PjFamily& pj) {
  if (n < 1) throw std::invalid_argument("gf_determinant: n must be positive");
  auto table = VarTable::canonical(n);
  PolyMatrix m(table, static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          MVLaurent::variable(table, var::x(i), n - j) * pj(j, var::x(i), table);
  return divide_by_vandermonde(det_poly(m), x_vars(n));
}

MVLaurent schur_coeff_c(int n, const Partition& lambda) {
  auto params = param_table();
  auto parts = lambda.padded(n);
  PolyMatrix m(params, static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int li = parts[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
      PolyBuilder acc(params);
      for (int k = 0; k < j; ++k) {
        const int eu = li + j - i - k;
        Rational b = binomial(k, eu);
        if (b.is_zero()) continue;
        Monomial mono;
        mono.set(var::u, eu);
        mono.set(var::v, j - k - 1);
        mono.set(var::w, 2 * k + i - li - j);
        acc.add(mono, k % 2 ? -b : b);
      }
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = acc.build();
    }
  }
  return det_poly(m);
}

SixVertexConfig asm_to_sixvertex(const Asm& a) {
  const int n = a.size();
  std::vector<int> types(static_cast<std::size_t>(n * n));
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) {
      int e = a(i, j);
      int c = col[static_cast<std::size_t>(j)];
      int t;
      if (e == 1) t = 5;
      else if (e == -1) t = 6;
      else if (row == 0) t = c == 0 ? 1 : 4;
      else t = c == 0 ? 3 : 2;
      types[static_cast<std::size_t>(i * n + j)] = t;
      row += e;
      col[static_cast<std::size_t>(j)] += e;
    }
  }
  return SixVertexConfig(n, std::move(types));
}

Asm sixvertex_to_asm(const SixVertexConfig& c) {
  const int n = c.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int t = c.type(i, j);
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t == 5 ? 1 : (t == 6 ? -1 : 0);
    }
  return Asm(rows);
}

RowCounts sixvertex_row_stats(const Asm& a) {
  auto c = asm_to_sixvertex(a);
  RowCounts rc;
  for (int i = 0; i < c.size(); ++i) {
    int nu = 0, mu = 0;
    for (int j = 0; j < c.size(); ++j) {
      int t = c.type(i, j);
      if (t == 1 || t == 2) ++nu;
      if (t == 6) ++mu;
    }
    rc.nu.push_back(nu);
    rc.mu.push_back(mu);
  }
  return rc;
}

MVLaurent xn(int n) {
  auto table = VarTable::canonical(n);
  std::vector<MVLaurent> factor;
  for (int i = 1; i <= n; ++i) {
    auto x = MVLaurent::variable(table, var::x(i));
    auto u = MVLaurent::variable(table, var::u);
    auto w = MVLaurent::variable(table, var::w);
    factor.push_back(u * x.pow(2) + (w - u - MVLaurent(table, 1)) * x + MVLaurent(table, 1));
  }
  PolyBuilder acc(table);
  for_each_asm(n, [&](const Asm& a) {
    AsmStats s = asm_stats(a);
    Monomial mono;
    mono.set(var::u, s.inv);
    for (int i = 1; i <= n; ++i) mono.set(var::x(i), s.nu[static_cast<std::size_t>(i - 1)]);
    MVLaurent term = MVLaurent::monomial(table, mono);
    for (int i = 1; i <= n; ++i)
      if (int e = s.mu[static_cast<std::size_t>(i - 1)]) term = term * factor[static_cast<std::size_t>(i - 1)].pow(e);
    acc.add(term);
  });
  return acc.build();
}

}  // namespace asmtspp
