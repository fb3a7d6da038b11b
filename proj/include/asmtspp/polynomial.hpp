#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "asmtspp/rational.hpp"

namespace asmtspp {

inline constexpr std::size_t kMaxVars = 16;

/// Raised when two polynomials over different variable tables are combined.
class TableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by poly_exact_div when the divisor does not divide the dividend.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ordered list of variable names. The order fixes the monomial order.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  /// The shared table (r, u, v, w, t, x1, ..., xm).
  static std::shared_ptr<const VarTable> canonical(int m);
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Positions of the parameters in a canonical table.
namespace var {
inline constexpr std::size_t r = 0;
inline constexpr std::size_t u = 1;
inline constexpr std::size_t v = 2;
inline constexpr std::size_t w = 3;
inline constexpr std::size_t t = 4;
/// Position of x_i (1-based) in a canonical table.
constexpr std::size_t x(int i) { return 4 + static_cast<std::size_t>(i); }
}  // namespace var

/// Laurent monomial: one signed exponent per table variable.
///
/// Ordered graded-lexicographically: total degree first, ties broken by the
/// first variable (in table order) whose exponents differ, larger exponent
/// being the larger monomial.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() { exps_.fill(0); }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  int degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending in the monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class MVLaurent {
 public:
  explicit MVLaurent(VarTablePtr table);
  MVLaurent(VarTablePtr table, Rational constant);

  static MVLaurent variable(VarTablePtr table, std::size_t index, int power = 1);
  static MVLaurent variable(VarTablePtr table, std::string_view name, int power = 1);
  static MVLaurent monomial(VarTablePtr table, const Monomial& mono, Rational coef = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static MVLaurent from_terms(VarTablePtr table, std::vector<Term> terms);

  const VarTablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws if the polynomial is not constant.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest term in the monomial order; throws on zero.
  const Term& leading_term() const;

  int min_exponent(std::size_t var) const;
  int max_exponent(std::size_t var) const;
  int min_degree() const;
  int max_degree() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;

  MVLaurent& operator+=(const MVLaurent& o);
  MVLaurent& operator-=(const MVLaurent& o);
  MVLaurent& operator*=(const MVLaurent& o);
  MVLaurent& operator*=(const Rational& c);

  friend MVLaurent operator+(MVLaurent a, const MVLaurent& b) { return a += b; }
  friend MVLaurent operator-(MVLaurent a, const MVLaurent& b) { return a -= b; }
  friend MVLaurent operator*(const MVLaurent& a, const MVLaurent& b);
  friend MVLaurent operator*(MVLaurent a, const Rational& c) { return a *= c; }
  friend MVLaurent operator*(const Rational& c, MVLaurent a) { return a *= c; }
  MVLaurent operator-() const;

  /// Non-negative powers of anything; negative powers of monomials only.
  MVLaurent pow(int e) const;
  /// Multiply every term by a monomial.
  MVLaurent shifted(const Monomial& m) const;

  friend bool operator==(const MVLaurent& a, const MVLaurent& b);
  friend bool operator!=(const MVLaurent& a, const MVLaurent& b) { return !(a == b); }

  /// Canonical text form, e.g. `v + u*x1*x2`, `-1/2*x1^-1 + 3`, `0`.
  std::string str() const;
  static MVLaurent parse(VarTablePtr table, std::string_view text);

 private:
  friend class PolyBuilder;
  void check_table(const MVLaurent& o) const;

  VarTablePtr table_;
  std::vector<Term> terms_;
};

/// Hash-based accumulator for building large sums term by term.
class PolyBuilder {
 public:
  explicit PolyBuilder(VarTablePtr table) : table_(std::move(table)) {}

  void add(const Monomial& m, const Rational& c);
  void add(const MVLaurent& p, const Rational& scale = 1);
  /// Adds scale * p * m.
  void add_shifted(const MVLaurent& p, const Monomial& m, const Rational& scale = 1);
  void reserve(std::size_t n) { acc_.reserve(n); }

  MVLaurent build();

 private:
  VarTablePtr table_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

MVLaurent poly_mul(const MVLaurent& p, const MVLaurent& q);

/// Quotient d with d * q == p. Throws NonExactDivision if q does not divide p.
MVLaurent poly_exact_div(const MVLaurent& p, const MVLaurent& q);

/// Simultaneous substitution. Each entry maps a variable index to its image
/// (a polynomial over the same table); unmapped variables are left alone.
class Substitution {
 public:
  explicit Substitution(VarTablePtr table) : table_(std::move(table)) {}

  Substitution& set(std::size_t var, MVLaurent value);
  Substitution& set(std::size_t var, const Rational& value);
  Substitution& set(std::string_view name, MVLaurent value);
  Substitution& set(std::string_view name, const Rational& value);

  const VarTablePtr& table() const { return table_; }
  const std::vector<std::pair<std::size_t, MVLaurent>>& entries() const { return entries_; }

 private:
  VarTablePtr table_;
  std::vector<std::pair<std::size_t, MVLaurent>> entries_;
};

/// Throws std::domain_error when a non-invertible value is substituted for a
/// variable that occurs with a negative exponent.
MVLaurent poly_substitute(const MVLaurent& p, const Substitution& sigma);

/// Signed sum over all permutations sigma of S_n of p with every group's
/// variables permuted simultaneously by sigma. All groups have length n.
MVLaurent antisymmetrize(const MVLaurent& p, const std::vector<std::vector<std::size_t>>& groups);

/// Re-express p over another table, matching variables by name.
MVLaurent rebase(const MVLaurent& p, const VarTablePtr& target);

/// First monomial (in descending order) where a and b differ, if any.
std::optional<Monomial> first_difference(const MVLaurent& a, const MVLaurent& b);

/// Text for a single monomial in the canonical factor syntax, `1` if trivial.
std::string monomial_str(const VarTable& table, const Monomial& m);

/// All permutations of {0..n-1} in lexicographic order, with their signs.
struct SignedPermutation {
  std::vector<int> perm;
  int sign;
};
std::vector<SignedPermutation> all_permutations(int n);

}  // namespace asmtspp
