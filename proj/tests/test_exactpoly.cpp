#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asmtspp/polynomial.hpp"

using namespace asmtspp;

namespace {

MVLaurent P(const VarTablePtr& t, const char* s) { return MVLaurent::parse(t, s); }

MVLaurent random_poly(const VarTablePtr& t, std::mt19937& rng, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5), den(1, 3);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < t->size(); ++v) m.set(v, ex(rng));
    out.push_back({m, Rational(co(rng), den(rng))});
  }
  return MVLaurent::from_terms(t, std::move(out));
}

}  // namespace

TEST_CASE("rational arithmetic and promotion") {
  Rational a(1, 3), b(-1, 6);
  CHECK((a + b).str() == "1/6");
  CHECK((a * b).str() == "-1/18");
  CHECK((a / b).str() == "-2");
  Rational big = Rational(1LL << 62) * Rational(1LL << 62);
  CHECK(big.str() == "21267647932558653966460912964485513216");
  CHECK((big / big).is_one());
  CHECK(Rational::parse("-14/8").str() == "-7/4");
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(2, 5) == Rational(0));
  CHECK(binomial(-1, 0) == Rational(1));
  CHECK(binomial(-1, 3) == Rational(-1));
  CHECK(binomial(3, -1) == Rational(0));
}

TEST_CASE("canonical text form") {
  auto t = VarTable::canonical(3);
  CHECK(P(t, "x1*u + v").str() == "v + u*x1");
  CHECK(P(t, "0").str() == "0");
  CHECK(P(t, "1 + r").str() == "1 + r");
  CHECK(P(t, "-2*u*x1^2 + 1/2*v").str() == "1/2*v - 2*u*x1^2");
  CHECK(P(t, "x1^-1").str() == "x1^-1");
  CHECK_THROWS_AS(P(t, "y1"), std::invalid_argument);
  CHECK_THROWS_AS(P(t, "x1*x1"), std::invalid_argument);
}

TEST_CASE("laurent product") {
  auto t = VarTable::canonical(1);
  auto p = P(t, "u*x1 + w + v*x1^-1") * P(t, "x1");
  CHECK(p == P(t, "u*x1^2 + w*x1 + v"));
}

TEST_CASE("exact division") {
  auto t = VarTable::canonical(2);
  auto num = P(t, "v*x1 - v*x2 + u*x1^2*x2 - u*x1*x2^2");
  CHECK(poly_exact_div(num, P(t, "x1 - x2")) == P(t, "v + u*x1*x2"));
  CHECK_THROWS_AS(poly_exact_div(P(t, "x1 + 1"), P(t, "x1 - x2")), NonExactDivision);
  CHECK_THROWS_AS(poly_exact_div(P(t, "x1"), MVLaurent(t)), std::domain_error);
  CHECK(poly_exact_div(P(t, "x1^-1 - x2^-1"), P(t, "x2 - x1")) == P(t, "x1^-1*x2^-1"));
}

TEST_CASE("table mismatch") {
  auto a = P(VarTable::canonical(1), "x1");
  auto b = P(VarTable::canonical(2), "x1");
  CHECK_THROWS_AS(a + b, TableMismatch);
  CHECK(rebase(a, VarTable::canonical(2)) == b);
  CHECK_THROWS_AS(rebase(P(VarTable::canonical(2), "x2"), VarTable::canonical(1)), TableMismatch);
}

TEST_CASE("substitution") {
  auto t = VarTable::canonical(2);
  auto p = P(t, "u*x1 + w + v*x1^-1");
  Substitution s(t);
  s.set("x1", Rational(1)).set("u", Rational(2));
  CHECK(poly_substitute(p, s) == P(t, "2 + v + w"));
  Substitution z(t);
  z.set("x1", Rational(0));
  CHECK_THROWS_AS(poly_substitute(p, z), std::domain_error);
  Substitution swap(t);
  swap.set("x1", P(t, "x2")).set("x2", P(t, "x1"));
  CHECK(poly_substitute(P(t, "x1^2 + x2"), swap) == P(t, "x2^2 + x1"));
}

TEST_CASE("ring axioms on random laurent polynomials") {
  auto t = VarTable::canonical(3);
  std::mt19937 rng(20240601);
  for (int round = 0; round < 40; ++round) {
    auto a = random_poly(t, rng, 6, -2, 3);
    auto b = random_poly(t, rng, 5, -2, 3);
    auto c = random_poly(t, rng, 4, -1, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MVLaurent(t));
    if (!b.is_zero()) CHECK(poly_exact_div(a * b, b) == a);
    CHECK(MVLaurent::parse(t, a.str()) == a);
  }
}

TEST_CASE("antisymmetrizer") {
  auto t = VarTable::canonical(3);
  std::vector<std::vector<std::size_t>> g = {{var::x(1), var::x(2), var::x(3)}};
  auto a = antisymmetrize(P(t, "x1^2*x2"), g);
  CHECK(a == P(t, "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2"));
  // Alternating: swapping two variables flips the sign.
  Substitution swap(t);
  swap.set("x1", P(t, "x2")).set("x2", P(t, "x1"));
  CHECK(poly_substitute(a, swap) == -a);
  CHECK(antisymmetrize(P(t, "x1*x2"), {{var::x(1), var::x(2)}}).is_zero());
  CHECK_THROWS_AS(antisymmetrize(a, {{var::x(1), var::x(1)}}), std::invalid_argument);
}

TEST_CASE("permutations") {
  auto perms = all_permutations(3);
  REQUIRE(perms.size() == 6);
  int total = 0;
  for (auto& p : perms) total += p.sign;
  CHECK(total == 0);
  CHECK(perms[1].perm == std::vector<int>{0, 2, 1});
  CHECK(perms[1].sign == -1);
}
