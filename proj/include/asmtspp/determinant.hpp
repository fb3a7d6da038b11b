#pragma once

#include <cstddef>
#include <vector>

#include "asmtspp/polynomial.hpp"

namespace asmtspp {

/// Square matrix of Laurent polynomials over a single table.
class PolyMatrix {
 public:
  PolyMatrix(VarTablePtr table, std::size_t n);

  std::size_t dim() const { return n_; }
  const VarTablePtr& table() const { return table_; }

  MVLaurent& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const MVLaurent& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  VarTablePtr table_;
  std::size_t n_;
  std::vector<MVLaurent> cells_;
};

/// Determinant; cofactor expansion up to dimension 5, fraction-free
/// elimination above that.
MVLaurent det_poly(const PolyMatrix& m);
/// Laplace expansion along rows with minors shared across column subsets.
MVLaurent det_cofactor(const PolyMatrix& m);
/// Bareiss elimination; every intermediate division is exact.
MVLaurent det_bareiss(const PolyMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;
Rational det_rational(RationalMatrix m);

/// Vandermonde product prod_{i<j} (x_i - x_j) over the given variables.
MVLaurent vandermonde(const VarTablePtr& table, const std::vector<std::size_t>& vars);
/// Divides p by prod_{i<j} (x_i - x_j), one linear factor at a time.
MVLaurent divide_by_vandermonde(MVLaurent p, const std::vector<std::size_t>& vars);

}  // namespace asmtspp
