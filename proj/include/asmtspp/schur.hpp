#pragma once

#include <map>
#include <vector>

#include "asmtspp/partitions.hpp"
#include "asmtspp/polynomial.hpp"

namespace asmtspp {

/// The variables x1..xm of the canonical table with m x-variables.
std::vector<std::size_t> x_vars(int m);

/// s_lambda(x1, ..., xm) over VarTable::canonical(m), computed as a ratio of
/// alternants and cached. Partitions with more than m parts give zero.
const MVLaurent& schur(const Partition& lambda, int m);

/// s_{(a+1, 1^b)}, the hook with arm a and leg b.
const MVLaurent& hook_schur(int a, int b, int m);

/// s_lambda(1, ..., 1) for the hook (a|b) with m ones.
Rational principal_spec(int a, int b, int m);

/// Schur polynomial via det(s_{(a_i|b_j)}) for the Frobenius coordinates.
MVLaurent giambelli(const FrobeniusCoords& f, int m);

/// A generalized Schur function det(x_i^{L_j + m - j}) / Vandermonde equals
/// sign * s_partition. sign is 0 when two shifted exponents coincide.
struct SignedPartition {
  int sign = 0;
  Partition partition;
};
SignedPartition schur_generalized(const std::vector<int>& exponents, int m);

/// Coefficients of a symmetric polynomial over canonical(m) in the Schur
/// basis. The coefficients live over canonical(0), so only r, u, v, w, t may
/// appear in them. Throws std::invalid_argument if f is not symmetric in x.
std::map<Partition, MVLaurent> schur_expand(const MVLaurent& f, int m);

/// Reassemble sum_lambda c_lambda s_lambda over canonical(m).
MVLaurent schur_combine(const std::map<Partition, MVLaurent>& coeffs, int m);

/// Parameters-only table (r, u, v, w, t).
inline VarTablePtr param_table() { return VarTable::canonical(0); }

}  // namespace asmtspp
