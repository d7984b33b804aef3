#include "quadop/perm.hpp"

#include <set>

#include "doctest.h"
#include "quadop/error.hpp"

using namespace quadop;

TEST_CASE("enumeration is lexicographic, duplicate-free, n! long") {
  CHECK(all_permutations(1).size() == 1);
  auto s2 = all_permutations(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].is_identity());
  CHECK(s2[1].images() == std::vector<int>{2, 1});
  CHECK(all_permutations(3).size() == 6);

  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    CHECK(perms.size() == static_cast<std::size_t>(factorial(n)));
    std::set<std::vector<int>> seen;
    for (const auto& p : perms) seen.insert(p.images());
    CHECK(seen.size() == perms.size());
    for (std::size_t i = 1; i < perms.size(); ++i) CHECK(perms[i - 1] < perms[i]);
  }

  CHECK_THROWS_AS(all_permutations(0), invalid_input);
  CHECK_THROWS_AS(all_permutations(9), invalid_input);
}

TEST_CASE("sign values and multiplicativity") {
  CHECK(Permutation::identity(3).sign() == 1);
  CHECK(Permutation::transposition(3, 1, 2).sign() == -1);
  CHECK(Permutation({2, 3, 1}).sign() == 1);  // 3-cycle

  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n))
      for (const auto& q : all_permutations(n))
        CHECK(p.compose(q).sign() == p.sign() * q.sign());
  }
}

TEST_CASE("composition and inverse") {
  const auto t12 = Permutation::transposition(3, 1, 2);
  CHECK(t12.compose(t12).is_identity());

  const Permutation c123({2, 3, 1});
  CHECK(c123.compose(c123) == Permutation({3, 1, 2}));
  CHECK(c123.inverse() == Permutation({3, 1, 2}));

  for (const auto& p : all_permutations(4)) {
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(p.inverse().compose(p).is_identity());
  }

  // (p o q)(i) = p(q(i))
  const Permutation p({3, 1, 2}), q({2, 1, 3});
  for (int i = 1; i <= 3; ++i) CHECK(p.compose(q)(i) == p(q(i)));

  CHECK_THROWS_AS(p.compose(Permutation::identity(4)), invalid_input);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), invalid_input);
  CHECK_THROWS_AS(Permutation({0, 2, 3}), invalid_input);
}

TEST_CASE("subgroup element lists") {
  CHECK(subgroup_elements(GSubgroup::G1) ==
        std::vector<Permutation>{Permutation::identity(3)});
  CHECK(subgroup_elements(GSubgroup::G2)[1] == Permutation({2, 1, 3}));
  CHECK(subgroup_elements(GSubgroup::G3)[1] == Permutation({1, 3, 2}));
  CHECK(subgroup_elements(GSubgroup::G4)[1] == Permutation({3, 2, 1}));
  CHECK(subgroup_elements(GSubgroup::G5) ==
        std::vector<Permutation>{Permutation::identity(3), Permutation({2, 3, 1}),
                                 Permutation({3, 1, 2})});
  CHECK(subgroup_elements(GSubgroup::G6).size() == 6);
}

TEST_CASE("subgroups are closed under composition and inverse") {
  for (GSubgroup g : all_subgroups()) {
    const auto& elems = subgroup_elements(g);
    std::set<std::vector<int>> member;
    for (const auto& e : elems) member.insert(e.images());
    for (const auto& a : elems) {
      CHECK(member.count(a.inverse().images()) == 1);
      for (const auto& b : elems) CHECK(member.count(a.compose(b).images()) == 1);
    }
  }
}

TEST_CASE("subgroup names round-trip") {
  for (GSubgroup g : all_subgroups()) CHECK(subgroup_from_name(subgroup_name(g)) == g);
  CHECK_THROWS_AS(subgroup_from_name("G7"), invalid_input);
}

TEST_CASE("lehmer rank and unrank invert each other") {
  for (int n : {1, 2, 3, 4, 5}) {
    int rank = 0;
    for (const auto& p : all_permutations(n)) {
      CHECK(lehmer_rank(p.images()) == rank);
      CHECK(lehmer_unrank(n, rank) == p.images());
      ++rank;
    }
  }
}
