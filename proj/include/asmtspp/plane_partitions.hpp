#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asmtspp/partitions.hpp"
#include "asmtspp/polynomial.hpp"

namespace asmtspp {

/// Plane partition in an (a, b, c)-box: an a x b array with entries in
/// [0, c] decreasing weakly along rows and columns.
class PlanePartition {
 public:
  PlanePartition() = default;
  PlanePartition(int a, int b, int c, std::vector<int> entries);
  /// Box (rows, rows, height) from a list of rows.
  static PlanePartition from_rows(const std::vector<std::vector<int>>& rows, int height);

  int rows() const { return a_; }
  int cols() const { return b_; }
  int height() const { return c_; }
  /// 0-based access.
  int operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * b_ + j)]; }
  int cubes() const;

  /// Rows of space-separated entries, one row per line.
  std::string str() const;
  /// Rows may omit trailing zeros; the height defaults to the largest entry.
  static PlanePartition parse(std::string_view text, std::optional<int> height = std::nullopt);

  friend bool operator==(const PlanePartition& x, const PlanePartition& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.e_ == y.e_;
  }
  friend bool operator<(const PlanePartition& x, const PlanePartition& y) { return x.e_ < y.e_; }

 private:
  int a_ = 0, b_ = 0, c_ = 0;
  std::vector<int> e_;
};

std::vector<PlanePartition> plane_partitions_in_box(int a, int b, int c);

/// Invariant under every permutation of the three coordinates. Requires a
/// cubical box.
bool is_totally_symmetric(const PlanePartition& p);

/// Totally symmetric plane partition in an (n, n, n)-box.
class Tspp {
 public:
  Tspp() = default;
  /// Throws std::invalid_argument unless p is totally symmetric.
  explicit Tspp(PlanePartition p);

  int order() const { return pp_.rows(); }
  const PlanePartition& pp() const { return pp_; }
  int operator()(int i, int j) const { return pp_(i, j); }
  std::string str() const { return pp_.str(); }

  friend bool operator==(const Tspp& a, const Tspp& b) { return a.pp_ == b.pp_; }
  friend bool operator<(const Tspp& a, const Tspp& b) { return a.pp_ < b.pp_; }

 private:
  PlanePartition pp_;
};

void for_each_tspp(int n, const std::function<void(const Tspp&)>& visit);
std::vector<Tspp> enumerate_tspp(int n);

/// Conjugate of the partition formed by the diagonal entries.
Partition tspp_diag(const Tspp& t);
/// (a | b + k) where (a | b) are the Frobenius coordinates of the diagonal.
Partition pi_k(const Tspp& t, int k);
/// Weight of T in TSPP_{n-1}, as a monomial over canonical(0).
MVLaurent tspp_weight(const Tspp& t, int n);
/// The same weight written through the Frobenius coordinates of pi_1.
MVLaurent tspp_weight_via_pi1(const Tspp& t, int n);
/// T^c_{ij} = n - T_{n+1-i, n+1-j}.
Tspp tspp_complement(const Tspp& t);

/// Number of T in TSPP_{n-1} with pi_k(T) = lambda, by enumeration.
long long count_tspp_with_pik(const Partition& lambda, int n, int k);
/// det(binom(b_i, a_j)) for lambda = (a | b + k).
Rational count_tspp_det(const Partition& lambda, int k);

/// sum over TSPP_{n-1} of weight times s_{pi_k(T)} in n+k-1 x-variables.
MVLaurent ank_definition(int n, int k);
/// The same family as an (n-1) x (n-1) determinant of hook Schur functions.
MVLaurent ank_determinant(int n, int k);
/// ank at x = (1, ..., 1), over canonical(0).
MVLaurent ank_principal(int n, int k);

/// Column strict shifted plane partition of class k. Row i (0-based)
/// occupies shifted columns i .. i + len_i - 1 and starts with len_i + k.
class Csspp {
 public:
  Csspp() = default;
  /// Throws std::invalid_argument if the array breaks any defining rule.
  Csspp(int k, std::vector<std::vector<int>> rows);

  int cls() const { return k_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Number of rows.
  int rho() const { return static_cast<int>(rows_.size()); }
  /// Number of entries pi_{ij} <= k + j - i.
  int mu() const;

  /// One row per line, indented by one `.` per shifted column.
  std::string str() const;
  static Csspp parse(int k, std::string_view text);

  friend bool operator==(const Csspp& a, const Csspp& b) { return a.k_ == b.k_ && a.rows_ == b.rows_; }

 private:
  int k_ = 0;
  std::vector<std::vector<int>> rows_;
};

void for_each_csspp(int n, int k, const std::function<void(const Csspp&)>& visit);
std::vector<Csspp> enumerate_csspp(int n, int k);
std::pair<int, int> csspp_stats(const Csspp& p);

/// sum r^rho t^mu over CSSPPs of class k with first row at most n, over
/// canonical(0).
MVLaurent csspp_gf(int n, int k);
/// det(delta_ij + r sum_l binom(i,l) binom(j+k,l+k) t^{j-l}), 0 <= i,j < n.
MVLaurent csspp_gf_det(int n, int k);

}  // namespace asmtspp
