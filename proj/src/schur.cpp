#include "asmtspp/schur.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "asmtspp/determinant.hpp"

namespace asmtspp {

std::vector<std::size_t> x_vars(int m) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= m; ++i) out.push_back(var::x(i));
  return out;
}

namespace {

MVLaurent bialternant(const Partition& lambda, int m) {
  auto table = VarTable::canonical(m);
  if (lambda.length() > m) return MVLaurent(table);
  auto parts = lambda.padded(m);
  std::vector<int> e(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)] + m - 1 - j;
  // The alternant sum_sigma sgn(sigma) prod_i x_i^{e_sigma(i)}; distinct
  // permutations give distinct monomials, so no accumulation is needed.
  std::vector<Term> terms;
  for (const auto& sp : all_permutations(m)) {
    Monomial mono;
    for (int i = 0; i < m; ++i) mono.set(var::x(i + 1), e[static_cast<std::size_t>(sp.perm[static_cast<std::size_t>(i)])]);
    terms.push_back({mono, Rational(sp.sign)});
  }
  return divide_by_vandermonde(MVLaurent::from_terms(table, std::move(terms)), x_vars(m));
}

struct Cache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, int>, MVLaurent> values;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

const MVLaurent& schur(const Partition& lambda, int m) {
  if (m < 0 || static_cast<std::size_t>(m) + 5 > kMaxVars) throw std::invalid_argument("schur: unsupported number of variables");
  auto key = std::make_pair(lambda.parts(), m);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.values.find(key);
    if (it != c.values.end()) return it->second;
  }
  MVLaurent value = bialternant(lambda, m);
  std::lock_guard<std::mutex> lock(c.mu);
  // std::map nodes are stable, so the reference stays valid.
  return c.values.emplace(std::move(key), std::move(value)).first->second;
}

const MVLaurent& hook_schur(int a, int b, int m) {
  if (a < 0 || b < 0) throw std::invalid_argument("hook_schur: negative arm or leg");
  std::vector<int> parts{a + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return schur(Partition(std::move(parts)), m);
}

Rational principal_spec(int a, int b, int m) {
  return binomial(m + a, a + b + 1) * binomial(a + b, a);
}

MVLaurent giambelli(const FrobeniusCoords& f, int m) {
  f.validate();
  PolyMatrix mat(VarTable::canonical(m), static_cast<std::size_t>(f.rank()));
  for (int i = 0; i < f.rank(); ++i)
    for (int j = 0; j < f.rank(); ++j)
      mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          hook_schur(f.arms[static_cast<std::size_t>(i)], f.legs[static_cast<std::size_t>(j)], m);
  return det_poly(mat);
}

SignedPartition schur_generalized(const std::vector<int>& exponents, int m) {
  if (static_cast<int>(exponents.size()) > m) throw std::invalid_argument("schur_generalized: more entries than variables");
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 0) throw std::invalid_argument("schur_generalized: negative entry");
    e[j] = exponents[j];
  }
  for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(j)] += m - 1 - j;
  // Insertion sort into decreasing order, tracking the permutation sign.
  int sign = 1;
  for (std::size_t i = 1; i < e.size(); ++i)
    for (std::size_t j = i; j > 0 && e[j - 1] < e[j]; --j) {
      std::swap(e[j - 1], e[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] == e[i - 1]) return {0, {}};
  std::vector<int> parts(e.size());
  for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] - (m - 1 - i);
  return {sign, Partition(std::move(parts))};
}

std::map<Partition, MVLaurent> schur_expand(const MVLaurent& f, int m) {
  auto table = VarTable::canonical(m);
  if (!(*f.table() == *table)) throw TableMismatch("schur_expand: polynomial is not over the canonical table");
  auto params = param_table();
  std::map<Partition, MVLaurent> out;
  MVLaurent rest = f;
  auto x_part = [m](const Monomial& mono) {
    std::vector<int> e(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] = mono[var::x(i + 1)];
    return e;
  };
  while (!rest.is_zero()) {
    // Lexicographically largest x-exponent vector still present.
    std::vector<int> top;
    for (const auto& t : rest.terms()) {
      auto e = x_part(t.mono);
      if (top.empty() || e > top) top = std::move(e);
    }
    for (std::size_t i = 0; i < top.size(); ++i)
      if (top[i] < 0 || (i > 0 && top[i] > top[i - 1]))
        throw std::invalid_argument("schur_expand: polynomial is not symmetric in x");
    std::vector<Term> coef_terms;
    for (const auto& t : rest.terms()) {
      if (x_part(t.mono) != top) continue;
      Monomial p;
      for (std::size_t v = 0; v < params->size(); ++v) p.set(v, t.mono[v]);
      coef_terms.push_back({p, t.coef});
    }
    Partition lambda(top);
    MVLaurent coef = MVLaurent::from_terms(params, std::move(coef_terms));
    rest -= rebase(coef, table) * schur(lambda, m);
    out.emplace(std::move(lambda), std::move(coef));
  }
  return out;
}

MVLaurent schur_combine(const std::map<Partition, MVLaurent>& coeffs, int m) {
  auto table = VarTable::canonical(m);
  PolyBuilder acc(table);
  for (const auto& [lambda, coef] : coeffs) acc.add(rebase(coef, table) * schur(lambda, m));
  return acc.build();
}

}  // namespace asmtspp
