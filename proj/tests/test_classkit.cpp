#include <doctest.h>

#include "fraisse/classkit.hpp"
#include "fraisse/error.hpp"
#include "oracles.hpp"

using namespace fraisse;

namespace {

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("graph counts match brute-force isomorphism classes") {
  auto cls = builtin_class("graphs");
  auto levels = enumerate_upto(*cls, 4);
  for (int n = 0; n <= 4; ++n) {
    auto reps = oracle::iso_classes(cls->signature(), n, [&](const Structure& s) { return cls->contains(s); });
    CHECK(levels[n].size() == reps.size());
    for (const auto& s : levels[n]) CHECK(cls->contains(s));
  }
  CHECK(enumerate_class(*cls, 5).size() == 34);
}

TEST_CASE("enumeration returns pairwise non-isomorphic canonical forms") {
  auto cls = builtin_class("graphs");
  auto level = enumerate_class(*cls, 4);
  for (std::size_t i = 0; i < level.size(); ++i) {
    CHECK(canonical_form(level[i]).structure == level[i]);
    for (std::size_t j = i + 1; j < level.size(); ++j) CHECK_FALSE(oracle::isomorphic(level[i], level[j]));
  }
}

TEST_CASE("simple class profiles") {
  CHECK(profile(*builtin_class("sets"), 5).counts == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(profile(*builtin_class("total_orders"), 5).counts == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(profile(*builtin_class("matchings"), 6).counts == std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4});
  CHECK(profile(*builtin_class("perfect_matchings"), 6).counts ==
        std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
  CHECK(profile(*builtin_class("empty"), 3).counts == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("permutation classes count permutations") {
  auto all = profile(*builtin_class("all_permutations"), 5).counts;
  for (int n = 0; n <= 5; ++n) CHECK(all[n] == factorial(n));
  auto sep = profile(*builtin_class("separable"), 6).counts;
  for (int n = 1; n <= 6; ++n) {
    std::size_t expected = 0;
    for (const auto& p : permutations_of_length(n)) expected += is_separable_by_avoidance(p);
    CHECK(sep[n] == expected);
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate_class(*builtin_class("graphs"), 7), CapExceeded);
  CHECK_NOTHROW(enumerate_class(*builtin_class("total_orders"), 8));
  CHECK_THROWS_AS(builtin_class("nope"), ValidationError);
}

TEST_CASE("heredity") {
  for (const auto& name : builtin_class_names()) {
    auto cls = builtin_class(name);
    auto v = check_hereditary(*cls, 4);
    CHECK_MESSAGE(v.pass() == cls->hereditary(), name);
  }
  auto v = check_hereditary(*builtin_class("perfect_matchings"), 4);
  REQUIRE_FALSE(v.pass());
  CHECK(v.counterexample->member.size() == 2);
  CHECK(v.counterexample->subset.size() == 1);
}

TEST_CASE("product class") {
  auto cls = product_class(builtin_class("sets"), builtin_class("total_orders"));
  // pairs (X1, X2) with |X1| + |X2| = n: n + 1 of them
  CHECK(profile(*cls, 4).counts == std::vector<std::size_t>{1, 2, 3, 4, 5});
  Structure x1 = enumerate_class(*builtin_class("sets"), 2).front();
  Structure x2 = enumerate_class(*builtin_class("total_orders"), 3).front();
  Structure p = pair_structure(*cls, x1, x2);
  CHECK(cls->contains(p));
  auto [y1, y2] = split_pair(*cls, p);
  CHECK(y1 == x1);
  CHECK(y2 == x2);
  CHECK_THROWS_AS(split_pair(*builtin_class("sets"), x1), ValidationError);
}
