#include <doctest.h>

#include "fraisse/bcat_checks.hpp"
#include "fraisse/cprime.hpp"
#include "fraisse/structure_category.hpp"

using namespace fraisse;

namespace {

using P = std::vector<int>;

long binom(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long falling(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Amalgams of sets over A: partial matchings of the free points.
long set_amalgams(int a, int b, int c) {
  long total = 0;
  for (int k = 0; k <= std::min(b - a, c - a); ++k) total += binom(b - a, k) * binom(c - a, k) * falling(k, k);
  return total;
}

}  // namespace

TEST_CASE("C' objects are subgroups of symmetric groups up to conjugacy") {
  CPrimeCategory cat(4);
  std::vector<std::size_t> per_size(5, 0);
  for (const auto& x : cat.objects(4)) ++per_size[x.n];
  CHECK(per_size == std::vector<std::size_t>{1, 1, 2, 4, 11});
  REQUIRE(cat.initial_set().size() == 1);
  CHECK(cat.initial_set()[0].n == 0);
  CHECK(cat.initial_set()[0].group.size() == 1);
  CHECK_THROWS_AS(CPrimeCategory(6), CapExceeded);
  // Conjugate generators give the same object.
  CHECK(CPrimeCategory::object(3, {{1, 0, 2}}) == CPrimeCategory::object(3, {{0, 2, 1}}));
  CHECK_THROWS_AS(CPrimeCategory::object(3, {{0, 0, 1}}), ValidationError);
}

TEST_CASE("C' morphisms") {
  CPrimeCategory cat(3);
  auto pt = CPrimeCategory::object(1, {});
  auto two = CPrimeCategory::object(2, {});
  auto swap2 = CPrimeCategory::object(2, {{1, 0}});
  CHECK(cat.homs(pt, two).size() == 2);
  CHECK(cat.homs(pt, swap2).empty());
  CHECK(cat.homs(two, swap2).empty());
  CHECK(cat.homs(swap2, two).size() == 1);
  // A point fixed by the target group.
  auto fix0 = CPrimeCategory::object(3, {{0, 2, 1}});
  CHECK(cat.homs(pt, fix0).size() == 1);
  CHECK(cat.homs(swap2, fix0).size() == 1);
  CHECK_THROWS_AS(cat.morphism(pt, swap2, {0}), ValidationError);
  for (const auto& x : cat.objects(3))
    for (const auto& f : cat.homs(x, x)) CHECK(cat.is_iso(f));
}

TEST_CASE("C' with trivial groups amalgamates like sets") {
  CPrimeCategory cat(4);
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = a; c <= 3; ++c) {
        auto x = CPrimeCategory::object(a, {}), y = CPrimeCategory::object(b, {}), z = CPrimeCategory::object(c, {});
        auto f = cat.homs(x, y).front();
        auto g = cat.homs(x, z).front();
        auto ams = cat.amalgamate(f, g);
        CHECK(static_cast<long>(ams.size()) == set_amalgams(a, b, c));
        for (const auto& am : ams) {
          CHECK(am.apex.group.size() == 1);
          CHECK(cat.compose(am.left, f) == cat.compose(am.right, g));
        }
      }
}

TEST_CASE("self-amalgams of an unordered pair") {
  CPrimeCategory cat(3);
  auto empty = cat.initial_set()[0];
  auto swap2 = CPrimeCategory::object(2, {{1, 0}});
  auto f = cat.homs(empty, swap2).front();
  auto ams = cat.amalgamate(f, f);
  REQUIRE(ams.size() == 3);
  std::vector<std::pair<int, std::size_t>> shapes;
  for (const auto& am : ams) shapes.emplace_back(am.apex.n, am.apex.group.size());
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<std::pair<int, std::size_t>>{{2, 2}, {3, 1}, {4, 4}});
}

TEST_CASE("C' is an A-category with amalgamation at small size") {
  CPrimeCategory cat(3);
  CHECK(is_A_category(cat, 3).pass());
  CHECK(has_amalgamation_property(cat, 3).pass());
  CHECK(has_joint_embedding(cat, 3).pass());
  BCategory<CPrimeCategory> b(cat);
  auto report = verify_axioms(b, SuiteBounds{2, 2, 3, 2});
  for (const auto& r : report.results) CHECK_MESSAGE(r.pass, r.name << " " << r.witness.dump());
  CHECK(is_nondegenerate(b, 3).pass());
}
