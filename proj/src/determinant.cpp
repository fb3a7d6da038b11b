#include "asmtspp/determinant.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace asmtspp {

PolyMatrix::PolyMatrix(VarTablePtr table, std::size_t n)
    : table_(std::move(table)), n_(n), cells_(n * n, MVLaurent(table_)) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  if (!(*table_ == *o.table_)) throw TableMismatch("PolyMatrix: different variable tables");
  PolyMatrix out(table_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      PolyBuilder acc(table_);
      for (std::size_t k = 0; k < n_; ++k) {
        const auto& a = (*this)(i, k);
        const auto& b = o(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc.add(a * b);
      }
      out(i, j) = acc.build();
    }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.n_ == b.n_ && a.cells_ == b.cells_;
}

MVLaurent det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return MVLaurent(m.table(), 1);
  if (n > 20) throw std::invalid_argument("det_cofactor: dimension too large");
  // minors[S] = det of rows (n-|S|)..n-1 restricted to the columns in S.
  std::vector<std::optional<MVLaurent>> minors(std::size_t{1} << n);
  minors[0] = MVLaurent(m.table(), 1);
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::size_t set = 1; set < minors.size(); ++set) {
      if (static_cast<std::size_t>(std::popcount(set)) != size) continue;
      PolyBuilder acc(m.table());
      int pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(set >> j & 1)) continue;
        const auto& entry = m(row, j);
        const auto& sub = *minors[set & ~(std::size_t{1} << j)];
        if (!entry.is_zero() && !sub.is_zero()) acc.add(entry * sub, pos % 2 ? -1 : 1);
        ++pos;
      }
      minors[set] = acc.build();
    }
    // Minors two levels down are no longer needed.
    if (size >= 2)
      for (std::size_t set = 0; set < minors.size(); ++set)
        if (static_cast<std::size_t>(std::popcount(set)) == size - 2) minors[set].reset();
  }
  return *minors.back();
}

MVLaurent det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return MVLaurent(m.table(), 1);
  std::vector<std::vector<MVLaurent>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  int sign = 1;
  MVLaurent prev(m.table(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return MVLaurent(m.table());
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MVLaurent num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = k == 0 ? std::move(num) : poly_exact_div(num, prev);
      }
      a[i][k] = MVLaurent(m.table());
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MVLaurent det_poly(const PolyMatrix& m) {
  return m.dim() <= 5 ? det_cofactor(m) : det_bareiss(m);
}

Rational det_rational(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_rational: matrix is not square");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    Rational inv = m[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      Rational f = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

MVLaurent vandermonde(const VarTablePtr& table, const std::vector<std::size_t>& vars) {
  MVLaurent out(table, 1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      out = out * (MVLaurent::variable(table, vars[i]) - MVLaurent::variable(table, vars[j]));
  return out;
}

MVLaurent divide_by_vandermonde(MVLaurent p, const std::vector<std::size_t>& vars) {
  const auto table = p.table();
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      p = poly_exact_div(p, MVLaurent::variable(table, vars[i]) - MVLaurent::variable(table, vars[j]));
  return p;
}

}  // namespace asmtspp
