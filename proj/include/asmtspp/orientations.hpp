#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asmtspp/polynomial.hpp"
#include "asmtspp/report.hpp"

namespace asmtspp {

/// Table X1..Xn, Y1..Yn.
VarTablePtr xy_table(int n);
inline std::size_t x_of(int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t y_of(int n, int i) { return static_cast<std::size_t>(n + i - 1); }

/// Orientation of the complete graph on 1..n with a loop at every vertex.
/// One bit per edge {i, j}, i <= j: set means i -> j, clear means i <- j.
class Orientation {
 public:
  Orientation(int n, std::uint64_t bits);

  static int edge_count(int n) { return n * (n + 1) / 2; }
  /// Position of edge {i, j} (1-based, i <= j) in the bit string.
  static int edge_index(int n, int i, int j);

  /// Orientation in which each vertex points all its edges at the vertices
  /// before it in `order`; each vertex after the first must be smaller or
  /// larger than everything before it. Loops of later vertices follow the
  /// same rule; the first vertex's loop is given separately.
  static Orientation from_order(const std::vector<int>& order, bool first_loop_forward);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  /// True if the edge {i, j}, i <= j, is oriented i -> j.
  bool forward(int i, int j) const;

  std::string str() const;

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }
  friend bool operator<(const Orientation& a, const Orientation& b) { return a.bits_ < b.bits_; }

 private:
  int n_;
  std::uint64_t bits_;
};

/// prod X_i for edges i -> j, prod Y_j for edges i <- j, over xy_table(n).
MVLaurent orientation_weight(const Orientation& o);

void for_each_orientation(int n, const std::function<void(const Orientation&)>& visit);
/// Membership in the recursively defined family: the largest vertex points
/// every edge (and its loop) away from itself and the rest is in the family,
/// or the same with the smallest vertex.
bool in_pn(const Orientation& o);
std::vector<Orientation> enumerate_pn(int n);
/// The order in which vertices were added, plus the first loop direction.
std::optional<std::pair<std::vector<int>, bool>> pn_linear_order(const Orientation& o);

/// Antisymmetrizer permuting X and Y indices simultaneously.
MVLaurent hat_asym(const MVLaurent& p, int n);

/// hat_asym of prod_{i <= j} (Y_j - X_i).
MVLaurent lemma41_lhs(int n);
/// det(Y_i^j - X_i^j).
MVLaurent lemma41_rhs(int n);
/// Both sides evaluated at a point.
Rational lemma41_lhs_at(const std::vector<Rational>& x, const std::vector<Rational>& y);
Rational lemma41_rhs_at(const std::vector<Rational>& x, const std::vector<Rational>& y);
/// det(Y_i^j + (-1)^{j+1} X_i^j).
MVLaurent orientation_det(int n);

/// Exhaustive check of the orientation sum identities for a given n.
IdentityReport check_orientation_identities(int n);

}  // namespace asmtspp
