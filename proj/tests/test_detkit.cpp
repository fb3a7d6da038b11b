#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asmtspp/determinant.hpp"
#include "asmtspp/orientations.hpp"

using namespace asmtspp;

TEST_CASE("small determinants") {
  RationalMatrix m{{1, 2}, {3, 4}};
  CHECK(det_rational(m) == Rational(-2));
  auto t = VarTable::canonical(0);
  PolyMatrix p(t, 2);
  p(0, 0) = MVLaurent(t, 1);
  p(0, 1) = MVLaurent(t, 2);
  p(1, 0) = MVLaurent(t, 3);
  p(1, 1) = MVLaurent(t, 4);
  CHECK(det_poly(p).str() == "-2");
}

TEST_CASE("edge indexing covers every bit once") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> seen(static_cast<std::size_t>(Orientation::edge_count(n)), 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) ++seen[static_cast<std::size_t>(Orientation::edge_index(n, i, j))];
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("the seven-vertex example") {
  auto o = Orientation::from_order({4, 5, 6, 3, 2, 7, 1}, true);
  auto t = xy_table(7);
  CHECK(orientation_weight(o) == MVLaurent::parse(t, "X1^7*X2^5*X3^4*X4*Y5^2*Y6^3*Y7^6"));
  CHECK(in_pn(o));
  auto lin = pn_linear_order(o);
  REQUIRE(lin);
  CHECK(lin->first == std::vector<int>{4, 5, 6, 3, 2, 7, 1});
  CHECK(lin->second);
  CHECK_THROWS_AS(Orientation::from_order({1, 3, 2}, true), std::invalid_argument);
}

TEST_CASE("family sizes") {
  long long total = 0;
  for_each_orientation(3, [&](const Orientation&) { ++total; });
  CHECK(total == 64);
  for (int n = 1; n <= 6; ++n) {
    auto p = enumerate_pn(n);
    CHECK(p.size() == (std::size_t{1} << n));
    for (auto& o : p) {
      CHECK(in_pn(o));
      auto lin = pn_linear_order(o);
      REQUIRE(lin);
      CHECK(Orientation::from_order(lin->first, lin->second) == o);
    }
  }
  long long members = 0;
  for_each_orientation(4, [&](const Orientation& o) { members += in_pn(o); });
  CHECK(members == 16);
}

TEST_CASE("antisymmetrized product is a determinant") {
  for (int n = 1; n <= 4; ++n) CHECK(lemma41_lhs(n) == lemma41_rhs(n));
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int n = 5; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> x, y;
      for (int i = 0; i < n; ++i) {
        x.push_back(Rational(num(rng), den(rng)));
        y.push_back(Rational(num(rng), den(rng)));
      }
      CHECK(lemma41_lhs_at(x, y) == lemma41_rhs_at(x, y));
    }
}

TEST_CASE("sign flip on X turns the lemma into the orientation determinant") {
  for (int n = 1; n <= 4; ++n) {
    auto t = xy_table(n);
    Substitution s(t);
    for (int i = 1; i <= n; ++i) s.set(x_of(i), -MVLaurent::variable(t, x_of(i)));
    CHECK(poly_substitute(lemma41_rhs(n), s) == orientation_det(n));
  }
}

TEST_CASE("orientation identities") {
  for (int n = 1; n <= 4; ++n) {
    auto rep = check_orientation_identities(n);
    for (auto& part : rep.parts) CHECK_MESSAGE(part.passed, part.label);
    CHECK(rep.passed);
  }
}
