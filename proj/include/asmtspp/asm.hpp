#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "asmtspp/partitions.hpp"
#include "asmtspp/polynomial.hpp"

namespace asmtspp {

/// Alternating sign matrix.
class Asm {
 public:
  Asm() = default;
  /// Throws std::invalid_argument unless the rows form an ASM.
  explicit Asm(const std::vector<std::vector<int>>& rows);

  static Asm identity(int n);
  static Asm anti_identity(int n);

  int size() const { return n_; }
  /// 0-based entry access.
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::vector<std::vector<int>> rows() const;

  /// Rows of space-separated entries, one row per line.
  std::string str() const;
  /// Accepts newline- or `;`-separated rows.
  static Asm parse(std::string_view text);

  friend bool operator==(const Asm& a, const Asm& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator<(const Asm& a, const Asm& b) { return a.n_ != b.n_ ? a.n_ < b.n_ : a.a_ < b.a_; }

 private:
  int n_ = 0;
  std::vector<std::int8_t> a_;
};

/// Triangular array with row i (1-based) holding i strictly increasing
/// entries that interlace with the row below.
class MonotoneTriangle {
 public:
  MonotoneTriangle() = default;
  explicit MonotoneTriangle(std::vector<std::vector<int>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  /// 1-based row i, entries 0-based.
  const std::vector<int>& row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::string str() const;
  static MonotoneTriangle parse(std::string_view text);

  friend bool operator==(const MonotoneTriangle& a, const MonotoneTriangle& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Vertex types of the six-vertex model with domain wall boundary.
/// Types 1-4 are the 0 entries, 5 is a 1 entry, 6 is a -1 entry.
class SixVertexConfig {
 public:
  SixVertexConfig() = default;
  /// Throws std::invalid_argument if neighbouring edges disagree or the
  /// boundary is not domain wall.
  SixVertexConfig(int n, std::vector<int> types);

  int size() const { return n_; }
  int type(int i, int j) const { return types_[static_cast<std::size_t>(i * n_ + j)]; }
  std::string str() const;

  friend bool operator==(const SixVertexConfig& a, const SixVertexConfig& b) { return a.n_ == b.n_ && a.types_ == b.types_; }

 private:
  int n_ = 0;
  std::vector<int> types_;
};

struct AsmStats {
  int neg_ones = 0;
  int inv = 0;
  int inv_prime = 0;
  int rho_top = 0;
  int rho_bottom = 0;
  /// special, left, right for triangle rows 1..n-1 (index i-1).
  std::vector<int> special, left, right;
  /// dhat for rows 1..n (index i-1).
  std::vector<int> dhat;
  /// Six-vertex row counts for rows 1..n (index i-1).
  std::vector<int> nu, mu;
};

void for_each_monotone_triangle(int n, const std::function<void(const MonotoneTriangle&)>& visit);
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
std::vector<Asm> enumerate_asm(int n);
/// prod_{i=0}^{n-1} (3i+1)! / (n+i)!
mpz_class asm_count_formula(int n);

MonotoneTriangle asm_to_mt(const Asm& a);
Asm mt_to_asm(const MonotoneTriangle& m);

AsmStats asm_stats(const Asm& a);
/// The triangle-only part of the statistics (special, left, right, dhat).
AsmStats mt_stats(const MonotoneTriangle& m);

/// Weight of an ASM over canonical(n).
MVLaurent asm_weight(const Asm& a);
MVLaurent mt_weight(const MonotoneTriangle& m);

/// Sum of the weights of all n x n ASMs.
MVLaurent gf_enumerate(int n);
/// Same polynomial from the shift operator product.
MVLaurent gf_operator(int n);
/// Family p_j(x) used by the bialternant route, as a polynomial in one
/// x-variable of the given table.
using PjFamily = std::function<MVLaurent(int j, std::size_t x, const VarTablePtr& table)>;
MVLaurent default_pj(int j, std::size_t x, const VarTablePtr& table);
/// det(x_i^{n-j} p_j(x_i)) divided by the Vandermonde.
MVLaurent gf_determinant(int n, const PjFamily& pj = default_pj);

/// Coefficient of s_lambda in the generating function, as a determinant in
/// u, v, w over canonical(0).
MVLaurent schur_coeff_c(int n, const Partition& lambda);

SixVertexConfig asm_to_sixvertex(const Asm& a);
Asm sixvertex_to_asm(const SixVertexConfig& c);
struct RowCounts {
  std::vector<int> nu, mu;
};
RowCounts sixvertex_row_stats(const Asm& a);

/// sum_A u^inv prod_i x_i^{nu_i} (u x_i^2 + (w-u-1) x_i + 1)^{mu_i}
MVLaurent xn(int n);

}  // namespace asmtspp
