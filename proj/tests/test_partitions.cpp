#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "asmtspp/partitions.hpp"

using namespace asmtspp;

TEST_CASE("conjugate and frobenius") {
  Partition p{6, 6, 5, 5, 3, 1};
  CHECK(conjugate(p) == Partition{6, 5, 5, 4, 4, 2});
  auto f = to_frobenius(p);
  CHECK(f.str() == "(5,4,2,1|5,3,2,0)");
  CHECK(from_frobenius(f) == p);
  CHECK(to_frobenius(Partition{}).str() == "(|)");
  CHECK(FrobeniusCoords::parse("(2,0|3,1)") == FrobeniusCoords{{2, 0}, {3, 1}});
  CHECK_THROWS_AS(FrobeniusCoords::parse("(0,2|3,1)"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition({2, 1, 0, 0}) == Partition{2, 1});
}

TEST_CASE("frobenius round trip on all small partitions") {
  for (auto& p : partitions_in_box(6, 6)) {
    CHECK(from_frobenius(to_frobenius(p)) == p);
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("complement") {
  CHECK(complement(Partition{6, 6, 5, 5, 3, 1}, 6) == Partition{5, 3, 1, 1});
  CHECK(complement(Partition{}, 2) == Partition{2, 2});
  CHECK_THROWS_AS(complement(Partition{3}, 2), std::invalid_argument);
  for (auto& p : partitions_in_box(4, 4)) CHECK(complement(complement(p, 4), 4) == p);
}

TEST_CASE("k-tall partitions") {
  CHECK(is_k_tall(Partition{}, 0, 3));
  CHECK(is_k_tall(Partition{1}, 0, 3));
  CHECK(is_k_tall(Partition{1, 1, 1}, 1, 3));
  CHECK(!is_k_tall(Partition{2}, 0, 3));
  CHECK(!is_k_tall(Partition{3, 1, 1, 1}, 0, 3));
}

TEST_CASE("dyck bijection") {
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= 3; ++k) {
      auto parts = k_tall_partitions(k, n);
      CHECK(static_cast<long long>(parts.size()) == catalan[n]);
      std::set<DyckPath> seen;
      for (auto& p : parts) {
        auto d = ktall_to_dyck(p, k, n);
        CHECK(d.semilength() == n);
        CHECK(dyck_to_ktall(d, k) == p);
        seen.insert(d);
      }
      CHECK(seen.size() == parts.size());
    }
  CHECK(ktall_to_dyck(Partition{}, 2, 3).word() == "NNNEEE");
  CHECK(all_dyck_paths(4).size() == 14);
  CHECK_THROWS_AS(DyckPath("NEEN"), std::invalid_argument);
}
