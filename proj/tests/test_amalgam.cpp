#include <doctest.h>

#include "fraisse/amalgam.hpp"
#include "fraisse/error.hpp"
#include "fraisse/structure_category.hpp"
#include "oracles.hpp"

using namespace fraisse;

namespace {

Structure set_of(int n) { return Structure(builtin_class("sets")->signature(), n); }

Embedding perm_embedding(const char* small, const char* big, std::vector<int> positions) {
  return Embedding{perm_to_structure(Permutation::parse(small)), perm_to_structure(Permutation::parse(big)),
                   std::move(positions)};
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

template <class Cat>
void check_amalgam_invariants(const Cat& cat, const Embedding& b, const Embedding& c,
                              const std::vector<Amalgam<Cat>>& amalgams) {
  for (const auto& a : amalgams) {
    CHECK(cat.structure_class().contains(a.apex));
    CHECK(is_embedding(a.left.map, b.target, a.apex));
    CHECK(is_embedding(a.right.map, c.target, a.apex));
    CHECK(compose(a.left, b).map == compose(a.right, c).map);
    std::vector<char> hit(a.apex.size(), 0);
    for (int v : a.left.map) hit[v] = 1;
    for (int v : a.right.map) hit[v] = 1;
    CHECK(std::all_of(hit.begin(), hit.end(), [](char h) { return h; }));
  }
}

// Every cocone (E, b'', c'') with E a member of size <= |B| + |C| factors
// through exactly one returned amalgam, by exactly one map.
void check_initial_set_property(const StructureCategory& cat, const Embedding& b, const Embedding& c) {
  auto amalgams = cat.amalgamate(b, c);
  const int bound = b.target.size() + c.target.size();
  for (int n = 0; n <= bound; ++n) {
    for (const auto& e : oracle::iso_classes(cat.structure_class().signature(), n,
                                             [&](const Structure& s) { return cat.structure_class().contains(s); })) {
      for (const auto& bl : oracle::embeddings(b.target, e)) {
        for (const auto& cl : oracle::embeddings(c.target, e)) {
          bool commutes = true;
          for (std::size_t i = 0; i < b.map.size(); ++i) commutes &= bl[b.map[i]] == cl[c.map[i]];
          if (!commutes) continue;
          std::size_t factorizations = 0;
          for (const auto& a : amalgams) {
            for (const auto& h : oracle::embeddings(a.apex, e)) {
              bool ok = true;
              for (int v = 0; v < b.target.size(); ++v) ok &= h[a.left.map[v]] == bl[v];
              for (int v = 0; v < c.target.size(); ++v) ok &= h[a.right.map[v]] == cl[v];
              factorizations += ok;
            }
          }
          CHECK(factorizations == 1);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("sets: two 2-point sets over a point") {
  StructureCategory cat(builtin_class("sets"));
  Embedding b{set_of(1), set_of(2), {0}};
  auto amalgams = cat.amalgamate(b, b);
  REQUIRE(amalgams.size() == 2);
  std::multiset<int> sizes{amalgams[0].apex.size(), amalgams[1].apex.size()};
  CHECK(sizes == std::multiset<int>{2, 3});
  check_amalgam_invariants(cat, b, b, amalgams);
  CHECK_FALSE(is_epimorphism_in_A(cat, b));
}

TEST_CASE("sets: amalgamation set size counts partial matchings") {
  StructureCategory cat(builtin_class("sets"));
  for (int k = 0; k <= 1; ++k) {
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 3; ++q) {
        std::vector<int> shared(k);
        for (int i = 0; i < k; ++i) shared[i] = i;
        Embedding b{set_of(k), set_of(k + p), shared};
        Embedding c{set_of(k), set_of(k + q), shared};
        std::size_t expected = 0;
        for (int m = 0; m <= std::min(p, q); ++m) expected += binom(p, m) * binom(q, m) * factorial(m);
        CHECK(cat.amalgamate(b, c).size() == expected);
      }
    }
  }
}

TEST_CASE("all permutations: 1342 and 3124 over 123 amalgamate uniquely to 41352") {
  StructureCategory cat(builtin_class("all_permutations"));
  auto b = perm_embedding("123", "1342", {0, 1, 2});
  auto c = perm_embedding("123", "3124", {1, 2, 3});
  auto amalgams = amalgamation_set(cat, b, c);
  REQUIRE(amalgams.size() == 1);
  CHECK(structure_to_perm(amalgams[0].apex).to_string() == "41352");
  check_amalgam_invariants(cat, b, c, amalgams);

  StructureCategory sep(builtin_class("separable"));
  CHECK(amalgamation_set(sep, b, c).empty());
}

TEST_CASE("matchings: vertex into edge has only the trivial self-amalgamation") {
  auto cls = builtin_class("matchings");
  StructureCategory cat(cls);
  Structure vertex(cls->signature(), 1);
  Structure::Builder eb(cls->signature(), 2);
  eb.add(0, {0, 1}).add(0, {1, 0});
  Structure edge = std::move(eb).build();
  Embedding f{vertex, edge, {0}};
  auto selfs = self_amalgamations(cat, f);
  REQUIRE(selfs.size() == 1);
  CHECK(selfs[0].left.map == selfs[0].right.map);
  CHECK(is_epimorphism_in_A(cat, f));

  auto v = is_A_category(cat, 3);
  REQUIRE_FALSE(v.pass());
  CHECK(v.counterexample->f.source == vertex);
  CHECK(v.counterexample->f.target == edge);
}

TEST_CASE("isomorphisms have only the trivial self-amalgamation") {
  StructureCategory cat(builtin_class("graphs"));
  for (const auto& x : cat.objects(3)) {
    for (const auto& f : automorphisms(cat, x)) {
      auto selfs = self_amalgamations(cat, f);
      REQUIRE(selfs.size() == 1);
      CHECK(is_epimorphism_in_A(cat, f));
    }
  }
}

TEST_CASE("minimal amalgams form an initial set of the cocone category") {
  for (const char* name : {"graphs", "matchings", "total_orders"}) {
    StructureCategory cat(builtin_class(name));
    for (const auto& a : cat.objects(1)) {
      for (const auto& bo : cat.objects(2)) {
        for (const auto& co : cat.objects(2)) {
          for (const auto& b : cat.homs(a, bo))
            for (const auto& c : cat.homs(a, co)) check_initial_set_property(cat, b, c);
        }
      }
    }
  }
}

TEST_CASE("A-category verdicts") {
  for (const char* name : {"sets", "total_orders", "separable"}) {
    StructureCategory cat(builtin_class(name));
    CHECK_MESSAGE(is_A_category(cat, 4).pass(), name);
  }
}

TEST_CASE("A-category implies every endomorphism is an isomorphism") {
  for (const char* name : {"sets", "total_orders", "graphs"}) {
    StructureCategory cat(builtin_class(name));
    REQUIRE(is_A_category(cat, 3).pass());
    for (const auto& x : cat.objects(3))
      for (const auto& f : cat.homs(x, x)) CHECK(cat.is_iso(f));
  }
}

TEST_CASE("amalgamation property") {
  for (const char* name : {"sets", "total_orders"}) {
    StructureCategory cat(builtin_class(name));
    CHECK_MESSAGE(has_amalgamation_property(cat, 4).pass(), name);
  }
  StructureCategory sep(builtin_class("separable"));
  auto v = has_amalgamation_property(sep, 4);
  REQUIRE_FALSE(v.pass());
  // The search meets 1342 / 2314 over 123 before the mirror span 1342 / 3124.
  const auto& w = *v.counterexample;
  CHECK(structure_to_perm(w.b.source).to_string() == "123");
  CHECK(w.b.target.size() == 4);
  CHECK(w.c.target.size() == 4);
  CHECK(amalgamation_set(sep, w.b, w.c).empty());
  CHECK(amalgamation_set(sep, perm_embedding("123", "1342", {0, 1, 2}), perm_embedding("123", "3124", {1, 2, 3})).empty());
}

TEST_CASE("joint embedding") {
  for (const char* name : {"sets", "graphs", "separable"}) {
    StructureCategory cat(builtin_class(name));
    CHECK_MESSAGE(has_joint_embedding(cat, 4).pass(), name);
  }
}

TEST_CASE("initial set") {
  StructureCategory cat(builtin_class("graphs"));
  auto init = initial_set(cat);
  REQUIRE(init.size() == 1);
  CHECK(init[0].size() == 0);
  StructureCategory pairs(product_class(builtin_class("sets"), builtin_class("sets")));
  REQUIRE(initial_set(pairs).size() == 1);
  CHECK(initial_set(pairs)[0].size() == 0);
}

TEST_CASE("bad spans are rejected") {
  StructureCategory cat(builtin_class("sets"));
  Embedding b{set_of(1), set_of(2), {0}};
  Embedding c{set_of(2), set_of(2), {0, 1}};
  CHECK_THROWS_AS(cat.amalgamate(b, c), ValidationError);
  StructureCategory graphs(builtin_class("graphs"));
  Embedding big{Structure(builtin_class("graphs")->signature(), 0), Structure(builtin_class("graphs")->signature(), 7), {}};
  CHECK_THROWS_AS(graphs.amalgamate(big, big), CapExceeded);
}
