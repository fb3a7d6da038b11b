#include "asmtspp/plane_partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "asmtspp/determinant.hpp"
#include "asmtspp/schur.hpp"

namespace asmtspp {

namespace {

std::vector<std::vector<int>> read_rows(std::string_view text, bool skip_dots) {
  std::string norm(text);
  std::replace(norm.begin(), norm.end(), ';', '\n');
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream lines(norm);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<int> row;
    std::string tok;
    bool any = false;
    while (in >> tok) {
      any = true;
      if (skip_dots && tok == ".") continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || used == 0) throw std::invalid_argument("cannot parse integer '" + tok + "'");
      row.push_back(v);
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PlanePartition::PlanePartition(int a, int b, int c, std::vector<int> entries) : a_(a), b_(b), c_(c), e_(std::move(entries)) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("PlanePartition: negative box dimension");
  if (e_.size() != static_cast<std::size_t>(a * b)) throw std::invalid_argument("PlanePartition: wrong number of entries");
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      int x = (*this)(i, j);
      if (x < 0 || x > c) throw std::invalid_argument("PlanePartition: entry outside [0, height]");
      if (j > 0 && x > (*this)(i, j - 1)) throw std::invalid_argument("PlanePartition: rows must decrease weakly");
      if (i > 0 && x > (*this)(i - 1, j)) throw std::invalid_argument("PlanePartition: columns must decrease weakly");
    }
}

PlanePartition PlanePartition::from_rows(const std::vector<std::vector<int>>& rows, int height) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("PlanePartition: expected a square array");
    e.insert(e.end(), r.begin(), r.end());
  }
  return PlanePartition(n, n, height, std::move(e));
}

int PlanePartition::cubes() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::string PlanePartition::str() const {
  std::string out;
  for (int i = 0; i < a_; ++i) {
    for (int j = 0; j < b_; ++j) out += (j ? " " : "") + std::to_string((*this)(i, j));
    out += '\n';
  }
  return out;
}

PlanePartition PlanePartition::parse(std::string_view text, std::optional<int> height) {
  auto rows = read_rows(text, false);
  std::size_t width = 0;
  int top = 0;
  for (const auto& r : rows) {
    width = std::max(width, r.size());
    for (int x : r) top = std::max(top, x);
  }
  std::vector<int> e;
  for (auto& r : rows) {
    r.resize(width, 0);
    e.insert(e.end(), r.begin(), r.end());
  }
  return PlanePartition(static_cast<int>(rows.size()), static_cast<int>(width), height.value_or(top), std::move(e));
}

std::vector<PlanePartition> plane_partitions_in_box(int a, int b, int c) {
  std::vector<PlanePartition> out;
  std::vector<int> e(static_cast<std::size_t>(a * b), 0);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == a * b) {
      out.emplace_back(a, b, c, e);
      return;
    }
    int i = pos / b, j = pos % b;
    int hi = c;
    if (j > 0) hi = std::min(hi, e[static_cast<std::size_t>(pos - 1)]);
    if (i > 0) hi = std::min(hi, e[static_cast<std::size_t>(pos - b)]);
    for (int x = 0; x <= hi; ++x) {
      e[static_cast<std::size_t>(pos)] = x;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

namespace {

// Row i satisfies T_ij >= k <=> T_ik >= j for all 1 <= j, k <= n.
bool row_closed(const std::vector<int>& t, int n, int i) {
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      bool lhs = t[static_cast<std::size_t>(i * n + j - 1)] >= k;
      bool rhs = t[static_cast<std::size_t>(i * n + k - 1)] >= j;
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

bool is_totally_symmetric(const PlanePartition& p) {
  const int n = p.rows();
  if (p.cols() != n || p.height() != n) return false;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (p(i, j) != p(j, i)) return false;
      t[static_cast<std::size_t>(i * n + j)] = p(i, j);
    }
  for (int i = 0; i < n; ++i)
    if (!row_closed(t, n, i)) return false;
  return true;
}

Tspp::Tspp(PlanePartition p) : pp_(std::move(p)) {
  if (!is_totally_symmetric(pp_)) throw std::invalid_argument("Tspp: plane partition is not totally symmetric");
}

void for_each_tspp(int n, const std::function<void(const Tspp&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_tspp: negative order");
  std::vector<int> t(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return t[static_cast<std::size_t>(i * n + j)]; };
  // Fill the upper triangle row by row, mirroring below the diagonal.
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == n) {
      visit(Tspp(PlanePartition(n, n, n, t)));
      return;
    }
    if (j == n) {
      if (row_closed(t, n, i)) fill(i + 1, i + 1);
      return;
    }
    int hi = n;
    if (j > 0) hi = std::min(hi, at(i, j - 1));
    if (i > 0) hi = std::min(hi, at(i - 1, j));
    for (int x = 0; x <= hi; ++x) {
      at(i, j) = x;
      at(j, i) = x;
      fill(i, j + 1);
    }
    at(i, j) = 0;
    at(j, i) = 0;
  };
  fill(0, 0);
}

std::vector<Tspp> enumerate_tspp(int n) {
  std::vector<Tspp> out;
  for_each_tspp(n, [&](const Tspp& t) { out.push_back(t); });
  return out;
}

Partition tspp_diag(const Tspp& t) {
  std::vector<int> d;
  for (int i = 0; i < t.order(); ++i) d.push_back(t(i, i));
  return conjugate(Partition(std::move(d)));
}

Partition pi_k(const Tspp& t, int k) {
  if (k < 0) throw std::invalid_argument("pi_k: negative k");
  auto f = to_frobenius(tspp_diag(t));
  for (auto& b : f.legs) b += k;
  return from_frobenius(f);
}

MVLaurent tspp_weight(const Tspp& t, int n) {
  if (t.order() != n - 1) throw std::invalid_argument("tspp_weight: expected a TSPP of order n-1");
  auto f = to_frobenius(tspp_diag(t));
  int eu = 0, ev = n * (n - 1) / 2, ew = 0;
  for (int i = 0; i < f.rank(); ++i) {
    eu += f.arms[static_cast<std::size_t>(i)] + 1;
    ev -= f.legs[static_cast<std::size_t>(i)] + 1;
    ew += f.legs[static_cast<std::size_t>(i)] - f.arms[static_cast<std::size_t>(i)];
  }
  Monomial m;
  m.set(var::r, f.rank());
  m.set(var::u, eu);
  m.set(var::v, ev);
  m.set(var::w, ew);
  return MVLaurent::monomial(param_table(), m);
}

MVLaurent tspp_weight_via_pi1(const Tspp& t, int n) {
  if (t.order() != n - 1) throw std::invalid_argument("tspp_weight_via_pi1: expected a TSPP of order n-1");
  auto f = to_frobenius(pi_k(t, 1));
  int eu = 0, ev = n * (n - 1) / 2, ew = 0;
  for (int i = 0; i < f.rank(); ++i) {
    eu += f.arms[static_cast<std::size_t>(i)] + 1;
    ev -= f.legs[static_cast<std::size_t>(i)];
    ew += f.legs[static_cast<std::size_t>(i)] - 1 - f.arms[static_cast<std::size_t>(i)];
  }
  Monomial m;
  m.set(var::r, f.rank());
  m.set(var::u, eu);
  m.set(var::v, ev);
  m.set(var::w, ew);
  return MVLaurent::monomial(param_table(), m);
}

Tspp tspp_complement(const Tspp& t) {
  const int n = t.order();
  std::vector<int> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.push_back(n - t(n - 1 - i, n - 1 - j));
  return Tspp(PlanePartition(n, n, n, std::move(e)));
}

long long count_tspp_with_pik(const Partition& lambda, int n, int k) {
  if (n < 1) throw std::invalid_argument("count_tspp_with_pik: n must be positive");
  long long count = 0;
  for_each_tspp(n - 1, [&](const Tspp& t) {
    if (pi_k(t, k) == lambda) ++count;
  });
  return count;
}

Rational count_tspp_det(const Partition& lambda, int k) {
  auto f = to_frobenius(lambda);
  const auto l = static_cast<std::size_t>(f.rank());
  RationalMatrix m(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i) {
    int b = f.legs[i] - k;
    if (b < 0) throw std::invalid_argument("count_tspp_det: " + lambda.str() + " has a leg shorter than k");
    for (std::size_t j = 0; j < l; ++j) m[i][j] = binomial(b, f.arms[j]);
  }
  return det_rational(std::move(m));
}

MVLaurent ank_definition(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("ank_definition: need n >= 1 and k >= 0");
  const int m = n + k - 1;
  auto table = VarTable::canonical(m);
  PolyBuilder acc(table);
  for_each_tspp(n - 1, [&](const Tspp& t) {
    acc.add(rebase(tspp_weight(t, n), table) * schur(pi_k(t, k), m));
  });
  return acc.build();
}

namespace {

// Shared shape of the two determinant formulas; `hook(i, j)` supplies the
// entry that multiplies r u^{i+1} w^{j-i}.
MVLaurent ank_matrix_det(int n, const VarTablePtr& table, const std::function<MVLaurent(int, int)>& hook) {
  const int d = std::max(n - 1, 0);
  PolyMatrix mat(table, static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      MVLaurent entry(table);
      Rational b = binomial(i, j);
      if (!b.is_zero()) entry += MVLaurent::variable(table, var::v, j + 1) * ((j - i) % 2 ? -b : b);
      Monomial m;
      m.set(var::r, 1);
      m.set(var::u, i + 1);
      m.set(var::w, j - i);
      entry += hook(i, j).shifted(m);
      mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(entry);
    }
  return det_poly(mat);
}

}  // namespace

MVLaurent ank_determinant(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("ank_determinant: need n >= 1 and k >= 0");
  const int m = n + k - 1;
  return ank_matrix_det(n, VarTable::canonical(m), [&](int i, int j) { return hook_schur(i, j + k, m); });
}

MVLaurent ank_principal(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("ank_principal: need n >= 1 and k >= 0");
  auto params = param_table();
  return ank_matrix_det(n, params, [&](int i, int j) {
    return MVLaurent(params, binomial(n + k + i - 1, i + j + k + 1) * binomial(i + j + k, i));
  });
}

Csspp::Csspp(int k, std::vector<std::vector<int>> rows) : k_(k), rows_(std::move(rows)) {
  if (k < 0) throw std::invalid_argument("Csspp: negative class");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    const int len = static_cast<int>(r.size());
    if (len == 0) throw std::invalid_argument("Csspp: empty row");
    if (i > 0 && len >= static_cast<int>(rows_[i - 1].size())) throw std::invalid_argument("Csspp: row lengths must decrease strictly");
    if (r[0] != len + k) throw std::invalid_argument("Csspp: row " + std::to_string(i + 1) + " must start with its length plus the class");
    for (int j = 0; j < len; ++j) {
      if (r[static_cast<std::size_t>(j)] < 1) throw std::invalid_argument("Csspp: entries must be positive");
      if (j > 0 && r[static_cast<std::size_t>(j)] > r[static_cast<std::size_t>(j - 1)])
        throw std::invalid_argument("Csspp: rows must decrease weakly");
      // Shifted column i + j sits under entry j + 1 of the previous row.
      if (i > 0 && r[static_cast<std::size_t>(j)] >= rows_[i - 1][static_cast<std::size_t>(j + 1)])
        throw std::invalid_argument("Csspp: columns must decrease strictly");
    }
  }
}

int Csspp::mu() const {
  int count = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      // 1-based row i+1 and shifted column i+1+j.
      if (rows_[i][j] <= k_ + static_cast<int>(j)) ++count;
    }
  return count;
}

std::string Csspp::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t d = 0; d < i; ++d) out += ". ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) out += (j ? " " : "") + std::to_string(rows_[i][j]);
    out += '\n';
  }
  return out;
}

Csspp Csspp::parse(int k, std::string_view text) { return Csspp(k, read_rows(text, true)); }

void for_each_csspp(int n, int k, const std::function<void(const Csspp&)>& visit) {
  if (n < 0 || k < 0) throw std::invalid_argument("for_each_csspp: need n >= 0 and k >= 0");
  std::vector<std::vector<int>> rows;
  // Rows are added one at a time; each new row is strictly shorter than the
  // one above and filled left to right under the column rule.
  std::function<void(int)> add_row = [&](int max_len) {
    visit(Csspp(k, rows));
    for (int len = 1; len <= max_len; ++len) {
      const std::vector<int>* above = rows.empty() ? nullptr : &rows.back();
      std::vector<int> row(static_cast<std::size_t>(len));
      row[0] = len + k;
      if (above && row[0] >= (*above)[1]) continue;
      std::function<void(int)> fill = [&](int j) {
        if (j == len) {
          rows.push_back(row);
          add_row(len - 1);
          rows.pop_back();
          return;
        }
        int hi = row[static_cast<std::size_t>(j - 1)];
        if (above) hi = std::min(hi, (*above)[static_cast<std::size_t>(j + 1)] - 1);
        for (int x = 1; x <= hi; ++x) {
          row[static_cast<std::size_t>(j)] = x;
          fill(j + 1);
        }
      };
      fill(1);
    }
  };
  add_row(n);
}

std::vector<Csspp> enumerate_csspp(int n, int k) {
  std::vector<Csspp> out;
  for_each_csspp(n, k, [&](const Csspp& p) { out.push_back(p); });
  return out;
}

std::pair<int, int> csspp_stats(const Csspp& p) { return {p.rho(), p.mu()}; }

MVLaurent csspp_gf(int n, int k) {
  PolyBuilder acc(param_table());
  for_each_csspp(n, k, [&](const Csspp& p) {
    Monomial m;
    m.set(var::r, p.rho());
    m.set(var::t, p.mu());
    acc.add(m, 1);
  });
  return acc.build();
}

MVLaurent csspp_gf_det(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("csspp_gf_det: need n >= 0 and k >= 0");
  auto params = param_table();
  PolyMatrix mat(params, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyBuilder acc(params);
      if (i == j) acc.add(Monomial{}, 1);
      for (int l = 0; l <= std::min(i, j); ++l) {
        Rational c = binomial(i, l) * binomial(j + k, l + k);
        if (c.is_zero()) continue;
        Monomial m;
        m.set(var::r, 1);
        m.set(var::t, j - l);
        acc.add(m, c);
      }
      mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc.build();
    }
  return det_poly(mat);
}

}  // namespace asmtspp
