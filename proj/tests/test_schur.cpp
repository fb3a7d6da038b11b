#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asmtspp/determinant.hpp"
#include "asmtspp/schur.hpp"
#include "oracles.hpp"

using namespace asmtspp;

TEST_CASE("small schur polynomials") {
  auto t = VarTable::canonical(2);
  CHECK(schur(Partition{1}, 2) == MVLaurent::parse(t, "x1 + x2"));
  CHECK(schur(Partition{}, 2) == MVLaurent(t, 1));
  CHECK(schur(Partition{1, 1, 1}, 2).is_zero());
  auto s21 = schur(Partition{2, 1}, 3);
  CHECK(s21 == oracle::schur_by_tableaux(Partition{2, 1}, 3));
  CHECK(s21.size() == 7);
}

TEST_CASE("bialternant agrees with tableaux") {
  for (int m = 1; m <= 4; ++m)
    for (auto& p : partitions_in_box(m, 4)) CHECK(schur(p, m) == oracle::schur_by_tableaux(p, m));
}

TEST_CASE("giambelli") {
  for (int m = 1; m <= 4; ++m)
    for (auto& p : partitions_in_box(4, 4)) CHECK(giambelli(to_frobenius(p), m) == schur(p, m));
}

TEST_CASE("principal specialization of hooks") {
  for (int m = 1; m <= 5; ++m)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        auto t = VarTable::canonical(m);
        Substitution ones(t);
        for (int i = 1; i <= m; ++i) ones.set(var::x(i), Rational(1));
        auto value = poly_substitute(hook_schur(a, b, m), ones);
        CHECK(value == MVLaurent(t, principal_spec(a, b, m)));
      }
  CHECK(principal_spec(1, 2, 4) == Rational(15));
  auto t = VarTable::canonical(4);
  Substitution ones(t);
  for (int i = 1; i <= 4; ++i) ones.set(var::x(i), Rational(1));
  CHECK(poly_substitute(schur(Partition{2, 1, 1}, 4), ones).constant_value() == Rational(15));
}

TEST_CASE("generalized schur straightening") {
  auto r = schur_generalized({0, 2}, 2);
  CHECK(r.sign == -1);
  CHECK(r.partition == Partition{1, 1});
  CHECK(schur_generalized({1, 2}, 2).sign == 0);
  CHECK(schur_generalized({2, 1}, 2).partition == Partition{2, 1});
  CHECK_THROWS_AS(schur_generalized({-1}, 2), std::invalid_argument);
  // Against the defining ratio of alternants.
  const int m = 3;
  auto t = VarTable::canonical(m);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        std::vector<int> L{a, b, c};
        PolyMatrix mat(t, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            mat(i, j) = MVLaurent::variable(t, var::x(i + 1), L[j] + m - 1 - j);
        auto ratio = divide_by_vandermonde(det_poly(mat), x_vars(m));
        auto sp = schur_generalized(L, m);
        CHECK(ratio == Rational(sp.sign) * schur(sp.partition, m));
      }
}

TEST_CASE("schur basis extraction") {
  auto t = VarTable::canonical(3);
  auto f = MVLaurent::parse(t, "u") * schur(Partition{2, 1}, 3) + MVLaurent::parse(t, "2 - w") * schur(Partition{3}, 3);
  auto coeffs = schur_expand(f, 3);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs.at(Partition{2, 1}).str() == "u");
  CHECK(coeffs.at(Partition{3}).str() == "2 - w");
  CHECK(schur_combine(coeffs, 3) == f);
  CHECK_THROWS_AS(schur_expand(MVLaurent::parse(t, "x1"), 3), std::invalid_argument);
}

TEST_CASE("determinant routes agree") {
  auto t = VarTable::canonical(2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> co(-3, 3), ex(0, 2);
  for (int n = 1; n <= 6; ++n)
    for (int round = 0; round < 3; ++round) {
      PolyMatrix m(t, n);
      RationalMatrix num(n, std::vector<Rational>(n));
      Substitution at(t);
      at.set("x1", Rational(2)).set("x2", Rational(-3, 2));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Monomial mono;
          mono.set(var::x(1), ex(rng));
          mono.set(var::x(2), ex(rng));
          m(i, j) = MVLaurent::monomial(t, mono, co(rng)) + MVLaurent(t, co(rng));
          num[i][j] = poly_substitute(m(i, j), at).constant_value();
        }
      auto a = det_cofactor(m);
      CHECK(a == det_bareiss(m));
      CHECK(poly_substitute(a, at).constant_value() == det_rational(num));
    }
  CHECK(det_rational({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == Rational(-1));
}
