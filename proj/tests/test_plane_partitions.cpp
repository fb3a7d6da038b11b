#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "asmtspp/asm.hpp"
#include "asmtspp/plane_partitions.hpp"
#include "asmtspp/schur.hpp"

using namespace asmtspp;

namespace {

// Membership test by closing the set of unit cubes under coordinate swaps.
bool symmetric_by_triples(const PlanePartition& p) {
  std::set<std::array<int, 3>> cubes;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      for (int k = 1; k <= p(i, j); ++k) cubes.insert({i + 1, j + 1, k});
  for (auto c : cubes) {
    std::sort(c.begin(), c.end());
    do {
      if (!cubes.count(c)) return false;
    } while (std::next_permutation(c.begin(), c.end()));
  }
  return true;
}

Tspp T(const std::vector<std::vector<int>>& rows) {
  return Tspp(PlanePartition::from_rows(rows, static_cast<int>(rows.size())));
}

MVLaurent at_ones(const MVLaurent& p, int m) {
  Substitution s(p.table());
  for (int i = 1; i <= m; ++i) s.set(var::x(i), Rational(1));
  return rebase(poly_substitute(p, s), param_table());
}

}  // namespace

TEST_CASE("total symmetry agrees with the triple definition") {
  auto all = plane_partitions_in_box(3, 3, 3);
  CHECK(all.size() == 980);
  int count = 0;
  for (auto& p : all) {
    CHECK(is_totally_symmetric(p) == symmetric_by_triples(p));
    if (is_totally_symmetric(p)) ++count;
  }
  CHECK(count == 16);
}

TEST_CASE("tspp counts") {
  const std::size_t expected[] = {1, 2, 5, 16, 66, 352};
  for (int n = 0; n <= 5; ++n) CHECK(enumerate_tspp(n).size() == expected[n]);
}

TEST_CASE("the order-2 tspps") {
  auto p = param_table();
  const int k = 2;
  struct Row {
    Tspp t;
    Partition pik;
    const char* weight;
  };
  const std::vector<Row> rows = {
      {T({{0, 0}, {0, 0}}), Partition{}, "v^3"},
      {T({{1, 0}, {0, 0}}), Partition{1, 1, 1}, "r*u*v^2"},
      {T({{2, 1}, {1, 0}}), Partition{1, 1, 1, 1}, "r*u*v*w"},
      {T({{2, 2}, {2, 1}}), Partition{2, 1, 1, 1}, "r*u^2*v"},
      {T({{2, 2}, {2, 2}}), Partition{2, 2, 2, 2}, "r^2*u^3"},
  };
  auto all = enumerate_tspp(2);
  REQUIRE(all.size() == 5);
  for (auto& r : rows) {
    CHECK(std::count(all.begin(), all.end(), r.t) == 1);
    CHECK(pi_k(r.t, k) == r.pik);
    CHECK(tspp_weight(r.t, 3) == MVLaurent::parse(p, r.weight));
    CHECK(tspp_weight_via_pi1(r.t, 3) == tspp_weight(r.t, 3));
  }
  CHECK(tspp_diag(rows[2].t) == Partition{1, 1});
  CHECK(to_frobenius(tspp_diag(rows[4].t)).str() == "(1,0|1,0)");
  // Complement pairs: empty with full, one cube with seven, four cubes fixed.
  CHECK(tspp_complement(rows[0].t) == rows[4].t);
  CHECK(tspp_complement(rows[1].t) == rows[3].t);
  CHECK(tspp_complement(rows[2].t) == rows[2].t);
}

TEST_CASE("complement is an involution compatible with pi_0") {
  for (int n = 0; n <= 4; ++n)
    for (auto& t : enumerate_tspp(n)) {
      auto c = tspp_complement(t);
      CHECK(tspp_complement(c) == t);
      CHECK(pi_k(c, 0) == complement(pi_k(t, 0), n));
      CHECK(count_tspp_det(pi_k(t, 0), 0) == count_tspp_det(pi_k(c, 0), 0));
    }
}

TEST_CASE("weights through the diagonal and through pi_1 agree") {
  for (int n = 1; n <= 6; ++n)
    for (auto& t : enumerate_tspp(n - 1)) CHECK(tspp_weight(t, n) == tspp_weight_via_pi1(t, n));
}

TEST_CASE("counting tspps by pi_k") {
  CHECK(count_tspp_with_pik(Partition{}, 3, 0) == 1);
  CHECK(count_tspp_det(Partition{}, 0) == Rational(1));
  for (int k = 0; k <= 2; ++k) {
    auto lam = from_frobenius({{1}, {2 + k}});
    CHECK(count_tspp_with_pik(lam, 4, k) == 2);
    CHECK(count_tspp_det(lam, k) == Rational(2));
    std::vector<int> col(static_cast<std::size_t>(k + 2), 1);
    CHECK(count_tspp_with_pik(Partition(col), 3, k) == 1);
  }
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 2; ++k)
      for (auto& lam : k_tall_partitions(k, n))
        CHECK(count_tspp_with_pik(lam, n, k) == count_tspp_det(lam, k).to_int64());
}

TEST_CASE("pi_k lands in k-tall partitions") {
  for (int n = 1; n <= 5; ++n)
    for (auto& t : enumerate_tspp(n - 1))
      for (int k = 0; k <= 2; ++k) CHECK(is_k_tall(pi_k(t, k), k, n));
}

TEST_CASE("the family by definition") {
  for (int k = 0; k <= 2; ++k) {
    CHECK(ank_definition(1, k).str() == "1");
    auto t = VarTable::canonical(k + 1);
    auto expected = MVLaurent::parse(t, "v") + MVLaurent::parse(t, "r*u") * hook_schur(0, k, k + 1);
    CHECK(ank_definition(2, k) == expected);
    CHECK(ank_determinant(2, k) == expected);
  }
  // Five terms for n = 3.
  for (int k = 0; k <= 2; ++k) {
    const int m = k + 2;
    auto t = VarTable::canonical(m);
    auto P = [&](const char* s) { return MVLaurent::parse(t, s); };
    auto expected = P("v^3") + P("r*u*v^2") * hook_schur(0, k, m) + P("r*u*v*w") * hook_schur(0, k + 1, m) +
                    P("r*u^2*v") * hook_schur(1, k + 1, m) +
                    P("r^2*u^3") * giambelli({{1, 0}, {k + 1, k}}, m);
    CHECK(ank_definition(3, k) == expected);
  }
}

TEST_CASE("the n = 4 expansion at k = 1") {
  const int k = 1, m = 4;
  auto t = VarTable::canonical(m);
  auto P = [&](const char* s) { return MVLaurent::parse(t, s); };
  auto s = [&](std::vector<int> a, std::vector<int> b) {
    for (auto& x : b) x += k;
    return giambelli({a, b}, m);
  };
  auto expected = P("v^6") + P("r*u*v^5") * s({0}, {0}) + P("r*u*v^4*w") * s({0}, {1}) +
                  P("r*u^2*v^4") * s({1}, {1}) + P("r*u*v^3*w^2") * s({0}, {2}) +
                  P("2*r*u^2*v^3*w") * s({1}, {2}) + P("r*u^3*v^3") * s({2}, {2}) +
                  P("r^2*u^3*v^3") * s({1, 0}, {1, 0}) + P("2*r^2*u^3*v^2*w") * s({1, 0}, {2, 0}) +
                  P("r^2*u^4*v^2") * s({2, 0}, {2, 0}) + P("r^2*u^3*v*w^2") * s({1, 0}, {2, 1}) +
                  P("r^2*u^4*v*w") * s({2, 0}, {2, 1}) + P("r^2*u^5*v") * s({2, 1}, {2, 1}) +
                  P("r^3*u^6") * s({2, 1, 0}, {2, 1, 0});
  CHECK(ank_definition(4, k) == expected);
}

TEST_CASE("determinant and principal routes") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k) {
      auto def = ank_definition(n, k);
      CHECK(ank_determinant(n, k) == def);
      CHECK(ank_principal(n, k) == at_ones(def, n + k - 1));
    }
  auto p = param_table();
  CHECK(ank_principal(2, 0) == MVLaurent::parse(p, "v + r*u"));
  Substitution plain(p), two(p);
  plain.set("r", Rational(1)).set("u", Rational(1)).set("v", Rational(1)).set("w", Rational(-1));
  two.set("r", Rational(1)).set("u", Rational(1)).set("v", Rational(1)).set("w", Rational(0));
  CHECK(poly_substitute(ank_principal(3, 1), plain).str() == "7");
  CHECK(poly_substitute(ank_principal(3, 1), two).str() == "8");
}

TEST_CASE("relation to the asm generating function") {
  for (int n = 1; n <= 4; ++n) {
    auto a = ank_definition(n, 1);
    Substitution r1(a.table());
    r1.set("r", Rational(1));
    CHECK(poly_substitute(a, r1) == gf_enumerate(n));
  }
}

TEST_CASE("csspp statistics and enumeration") {
  Csspp ex(2, {{8, 8, 7, 6, 3, 2}, {7, 5, 2, 1, 1}, {4, 1}});
  CHECK(csspp_stats(ex) == std::make_pair(3, 6));
  CHECK(Csspp::parse(2, ex.str()) == ex);
  CHECK(csspp_stats(Csspp(0, {})) == std::make_pair(0, 0));
  auto one = enumerate_csspp(1, 0);
  REQUIRE(one.size() == 2);
  CHECK(one[0].rho() == 0);
  CHECK(one[1].rows() == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(Csspp(2, {{7, 8}}), std::invalid_argument);
  CHECK_THROWS_AS(Csspp(0, {{2, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("csspp generating function routes") {
  auto p = param_table();
  CHECK(csspp_gf(1, 0) == MVLaurent::parse(p, "1 + r"));
  CHECK(csspp_gf_det(1, 0) == MVLaurent::parse(p, "1 + r"));
  CHECK(csspp_gf(0, 3).str() == "1");
  CHECK(csspp_gf_det(0, 3).str() == "1");
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) CHECK(csspp_gf(n, k) == csspp_gf_det(n, k));
  Substitution ones(p);
  ones.set("r", Rational(1)).set("t", Rational(1));
  CHECK(poly_substitute(csspp_gf(2, 2), ones).str() == "7");
}

TEST_CASE("plane partition text form") {
  auto pp = PlanePartition::parse("3 2\n1", 3);
  CHECK(pp.rows() == 2);
  CHECK(pp(1, 1) == 0);
  CHECK(pp.str() == "3 2\n1 0\n");
  CHECK_THROWS_AS(PlanePartition::parse("1 2"), std::invalid_argument);
}
