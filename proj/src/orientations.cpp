#include "asmtspp/orientations.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "asmtspp/determinant.hpp"

namespace asmtspp {

VarTablePtr xy_table(int n) {
  if (n < 1 || static_cast<std::size_t>(2 * n) > kMaxVars) throw std::invalid_argument("xy_table: unsupported n");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  return VarTable::make(std::move(names));
}

Orientation::Orientation(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || edge_count(n) > 63) throw std::invalid_argument("Orientation: unsupported n");
  if (bits >> edge_count(n)) throw std::invalid_argument("Orientation: bits beyond the last edge");
}

int Orientation::edge_index(int n, int i, int j) {
  if (i < 1 || i > j || j > n) throw std::invalid_argument("Orientation: edge must satisfy 1 <= i <= j <= n");
  // Rows 1..i-1 hold n, n-1, ... edges.
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

bool Orientation::forward(int i, int j) const { return bits_ >> edge_index(n_, i, j) & 1; }

Orientation Orientation::from_order(const std::vector<int>& order, bool first_loop_forward) {
  const int n = static_cast<int>(order.size());
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("Orientation::from_order: not a permutation of 1..n");
  std::uint64_t bits = 0;
  auto set = [&](int i, int j) { bits |= std::uint64_t{1} << edge_index(n, i, j); };
  if (n > 0 && first_loop_forward) set(order[0], order[0]);
  int lo = n > 0 ? order[0] : 0, hi = lo;
  for (std::size_t p = 1; p < order.size(); ++p) {
    const int v = order[p];
    if (v < lo) {
      lo = v;
      // Smaller than everything before: edges and loop point right.
      for (std::size_t q = 0; q <= p; ++q) set(v, order[q]);
    } else if (v > hi) {
      hi = v;
      // Larger than everything before: every bit stays clear.
    } else {
      throw std::invalid_argument("Orientation::from_order: each vertex must extend the range of the ones before it");
    }
  }
  return Orientation(n, bits);
}

std::string Orientation::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) {
      if (!out.empty()) out += ' ';
      out += std::to_string(i) + (forward(i, j) ? "->" : "<-") + std::to_string(j);
    }
  return out;
}

MVLaurent orientation_weight(const Orientation& o) {
  const int n = o.size();
  Monomial m;
  std::vector<int> ex(static_cast<std::size_t>(2 * n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) ++ex[o.forward(i, j) ? x_of(i) : y_of(n, j)];
  for (std::size_t v = 0; v < ex.size(); ++v) m.set(v, ex[v]);
  return MVLaurent::monomial(xy_table(n), m);
}

void for_each_orientation(int n, const std::function<void(const Orientation&)>& visit) {
  const int e = Orientation::edge_count(n);
  if (e > 30) throw std::invalid_argument("for_each_orientation: too many orientations");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e); ++bits) visit(Orientation(n, bits));
}

namespace {

// Peel extreme vertices off `alive`; returns the peel sequence or nothing.
std::optional<std::vector<int>> peel(const Orientation& o) {
  std::vector<int> alive;
  for (int i = 1; i <= o.size(); ++i) alive.push_back(i);
  std::vector<int> seq;
  while (alive.size() > 1) {
    const int top = alive.back(), bottom = alive.front();
    bool top_away = std::all_of(alive.begin(), alive.end(), [&](int v) { return !o.forward(v, top); });
    bool bottom_away = std::all_of(alive.begin(), alive.end(), [&](int v) { return o.forward(bottom, v); });
    if (top_away) {
      seq.push_back(top);
      alive.pop_back();
    } else if (bottom_away) {
      seq.push_back(bottom);
      alive.erase(alive.begin());
    } else {
      return std::nullopt;
    }
  }
  seq.push_back(alive.front());
  return seq;
}

}  // namespace

bool in_pn(const Orientation& o) { return peel(o).has_value(); }

std::vector<Orientation> enumerate_pn(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_pn: n must be positive");
  // Build on vertex sets {lo..hi}, growing at either end.
  std::vector<Orientation> out;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& order) {
    if (static_cast<int>(order.size()) == n) {
      out.push_back(Orientation::from_order(order, true));
      out.push_back(Orientation::from_order(order, false));
      return;
    }
    int lo = *std::min_element(order.begin(), order.end());
    int hi = *std::max_element(order.begin(), order.end());
    if (lo > 1) {
      order.push_back(lo - 1);
      grow(order);
      order.pop_back();
    }
    if (hi < n) {
      order.push_back(hi + 1);
      grow(order);
      order.pop_back();
    }
  };
  for (int start = 1; start <= n; ++start) {
    std::vector<int> order{start};
    grow(order);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<std::vector<int>, bool>> pn_linear_order(const Orientation& o) {
  auto seq = peel(o);
  if (!seq) return std::nullopt;
  std::reverse(seq->begin(), seq->end());
  const int first = seq->front();
  return std::make_pair(std::move(*seq), o.forward(first, first));
}

MVLaurent hat_asym(const MVLaurent& p, int n) {
  std::vector<std::size_t> xs, ys;
  for (int i = 1; i <= n; ++i) {
    xs.push_back(x_of(i));
    ys.push_back(y_of(n, i));
  }
  return antisymmetrize(p, {xs, ys});
}

MVLaurent lemma41_lhs(int n) {
  auto t = xy_table(n);
  MVLaurent prod(t, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      prod = prod * (MVLaurent::variable(t, y_of(n, j)) - MVLaurent::variable(t, x_of(i)));
  return hat_asym(prod, n);
}

MVLaurent lemma41_rhs(int n) {
  auto t = xy_table(n);
  PolyMatrix m(t, static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          MVLaurent::variable(t, y_of(n, i), j) - MVLaurent::variable(t, x_of(i), j);
  return det_poly(m);
}

Rational lemma41_lhs_at(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int n = static_cast<int>(x.size());
  if (y.size() != x.size()) throw std::invalid_argument("lemma41_lhs_at: point sizes differ");
  Rational total = 0;
  for (const auto& sp : all_permutations(n)) {
    Rational prod = sp.sign;
    for (int i = 0; i < n && !prod.is_zero(); ++i)
      for (int j = i; j < n; ++j)
        prod *= y[static_cast<std::size_t>(sp.perm[static_cast<std::size_t>(j)])] -
                x[static_cast<std::size_t>(sp.perm[static_cast<std::size_t>(i)])];
    total += prod;
  }
  return total;
}

Rational lemma41_rhs_at(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("lemma41_rhs_at: point sizes differ");
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = y[i].pow(static_cast<int>(j + 1)) - x[i].pow(static_cast<int>(j + 1));
  return det_rational(std::move(m));
}

MVLaurent orientation_det(int n) {
  auto t = xy_table(n);
  PolyMatrix m(t, static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          MVLaurent::variable(t, y_of(n, i), j) + Rational(j % 2 ? 1 : -1) * MVLaurent::variable(t, x_of(i), j);
  return det_poly(m);
}

IdentityReport check_orientation_identities(int n) {
  auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.id = "orient";
  rep.params["n"] = n;
  auto t = xy_table(n);
  PolyBuilder all(t), in_p(t), rest(t);
  long long p_count = 0;
  std::vector<Orientation> members;
  for_each_orientation(n, [&](const Orientation& o) {
    // Weights are monomials; accumulate exponent vectors directly.
    Monomial m;
    std::vector<int> ex(static_cast<std::size_t>(2 * n), 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) ++ex[o.forward(i, j) ? x_of(i) : y_of(n, j)];
    for (std::size_t v = 0; v < ex.size(); ++v) m.set(v, ex[v]);
    all.add(m, 1);
    if (in_pn(o)) {
      in_p.add(m, 1);
      ++p_count;
      members.push_back(o);
    } else {
      rest.add(m, 1);
    }
  });
  MVLaurent sum_all = all.build(), sum_p = in_p.build(), sum_r = rest.build();
  MVLaurent prod(t, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) prod = prod * (MVLaurent::variable(t, x_of(i)) + MVLaurent::variable(t, y_of(n, j)));
  rep.compare("sum over all orientations = product of (X_i + Y_j)", sum_all, prod);
  rep.check("family has 2^n members", p_count == (1LL << n), std::to_string(p_count) + " members");
  rep.check("membership test agrees with the recursive construction", members == enumerate_pn(n));
  auto asym_p = hat_asym(sum_p, n);
  rep.compare("asym over all orientations = asym over the family", hat_asym(sum_all, n), asym_p);
  rep.compare("asym over the remaining orientations = 0", hat_asym(sum_r, n), MVLaurent(t));
  rep.compare("asym over the family = det(Y_i^j + (-1)^(j+1) X_i^j)", asym_p, orientation_det(n));
  rep.finish();
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace asmtspp
