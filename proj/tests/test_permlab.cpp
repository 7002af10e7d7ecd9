#include <doctest.h>

#include "fraisse/error.hpp"
#include "fraisse/permlab.hpp"

using namespace fraisse;

namespace {

// Pattern containment by trying every subsequence.
bool contains_naive(const Permutation& s, const Permutation& t) {
  const int n = static_cast<int>(s.size()), k = static_cast<int>(t.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(s[i]);
    if (standardize(sub) == t) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("41352").to_string() == "41352");
  CHECK(Permutation::parse("1,10,2,3,4,5,6,7,8,9").to_string() == "1,10,2,3,4,5,6,7,8,9");
  CHECK_THROWS_AS(Permutation::parse("112"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("1a"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("1,,2"), ValidationError);
}

TEST_CASE("structure round trip") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : permutations_of_length(n)) CHECK(structure_to_perm(perm_to_structure(p)) == p);
  Structure::Builder b(permutation_signature(), 2);
  b.add(0, {0, 1});
  CHECK_THROWS_AS(structure_to_perm(std::move(b).build()), ValidationError);
}

TEST_CASE("pattern containment matches subsequence search") {
  for (const auto& s : permutations_of_length(5))
    for (int k = 1; k <= 4; ++k)
      for (const auto& t : permutations_of_length(k)) CHECK(contains_pattern(s, t) == contains_naive(s, t));
}

TEST_CASE("inflation") {
  std::vector<Permutation> blocks{Permutation{1, 2}, Permutation{3, 2, 1}, Permutation{3, 4, 1, 2}};
  CHECK(inflation(Permutation{2, 3, 1}, blocks).to_string() == "569873412");
  CHECK(sum(Permutation{1}, Permutation{2, 1}).to_string() == "132");
  CHECK(skew_sum(Permutation{1}, Permutation{2, 1}).to_string() == "321");
  CHECK_THROWS_AS(inflation(Permutation{1, 2}, blocks), ValidationError);
}

TEST_CASE("separable characterisations agree") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : permutations_of_length(n))
      CHECK(is_separable_by_avoidance(p) == is_separable_by_decomposition(p));
}

TEST_CASE("separable counts are the large Schroeder numbers") {
  // 1, 2, 6, 22, 90, 394 for n = 1..6, counted by avoidance only.
  const std::vector<std::size_t> expected{1, 2, 6, 22, 90, 394};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& p : permutations_of_length(n)) count += is_separable_by_avoidance(p);
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("substitution closure") {
  CHECK(is_substitution_closed(separable_class(), 6).pass());
  CHECK(is_substitution_closed(all_permutations_class(), 5).pass());
  auto v = is_substitution_closed(avoidance_class({Permutation{1, 3, 2}}), 5);
  REQUIRE_FALSE(v.pass());
  CHECK(contains_pattern(v.counterexample->result, Permutation{1, 3, 2}));
  CHECK_THROWS_AS(is_substitution_closed(separable_class(), 9), CapExceeded);
}
