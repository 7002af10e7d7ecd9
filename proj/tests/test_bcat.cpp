#include <doctest.h>

#include "fraisse/bcat.hpp"
#include "fraisse/bcat_quotients.hpp"
#include "fraisse/structure_category.hpp"
#include "oracles.hpp"

using namespace fraisse;

namespace {

using SetsB = BCategory<StructureCategory>;

SetsB sets_b() { return SetsB(StructureCategory(builtin_class("sets"))); }

Structure set_of(int n) { return Structure(builtin_class("sets")->signature(), n); }

// The atom map (Y) -> (X) given by an embedding X -> Y.
SetsB::Morphism atom_map(const SetsB& b, const Embedding& e) {
  return b.make(b.atom(e.target), b.atom(e.source), {0}, {e});
}

}  // namespace

TEST_CASE("composition composes index maps and satisfies the category laws") {
  auto b = sets_b();
  auto objs = b.objects(2, 2);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : b.homs(x, y)) {
        CHECK(b.compose(b.identity(y), f) == f);
        CHECK(b.compose(f, b.identity(x)) == f);
        for (const auto& z : objs)
          for (const auto& g : b.homs(y, z)) {
            auto gf = b.compose(g, f);
            for (std::size_t i = 0; i < f.index.size(); ++i) CHECK(gf.index[i] == g.index[f.index[i]]);
            CHECK(b.is_valid(gf));
          }
      }
}

TEST_CASE("hom sets count choices of summand and component") {
  auto b = sets_b();
  // maps (S1, S1) -> (S2, S0): each atom picks a summand j and an embedding Y_j -> X_i
  SetsB::Object x{{set_of(1), set_of(1)}};
  SetsB::Object y{{set_of(2), set_of(0)}};
  // per atom: S2 -> S1 has no embedding, S0 -> S1 has one
  CHECK(b.homs(x, y).size() == 1);
  // the empty atom of y has no map to a point
  CHECK(b.homs(y, x).empty());
  SetsB::Object z{{set_of(2), set_of(1)}};
  // S2 picks a summand and one of 2 embeddings; S1 picks a summand
  CHECK(b.homs(z, x).size() == 4 * 2);
  CHECK(b.homs(x, SetsB::Object{}).empty());
}

TEST_CASE("fiber product of two 2-point sets over a point") {
  auto b = sets_b();
  Embedding e{set_of(1), set_of(2), {0}};
  auto f = atom_map(b, e);
  auto p = b.fiber_product(f, f);
  REQUIRE(p.object.size() == 2);
  std::multiset<int> sizes{p.object.atoms[0].size(), p.object.atoms[1].size()};
  CHECK(sizes == std::multiset<int>{2, 3});
  CHECK(b.compose(f, p.left) == b.compose(f, p.right));
}

TEST_CASE("separable permutations: 1342 and 3124 over 123 have empty fiber product") {
  BCategory<StructureCategory> b(StructureCategory(builtin_class("separable")));
  auto p123 = perm_to_structure(Permutation::parse("123"));
  Embedding e1{p123, perm_to_structure(Permutation::parse("1342")), {0, 1, 2}};
  Embedding e2{p123, perm_to_structure(Permutation::parse("3124")), {1, 2, 3}};
  auto p = b.fiber_product(b.make(b.atom(e1.target), b.atom(p123), {0}, {e1}),
                           b.make(b.atom(e2.target), b.atom(p123), {0}, {e2}));
  CHECK(p.object.empty());
}

TEST_CASE("fold map kernel pair") {
  auto b = sets_b();
  SetsB::Object x{{set_of(1)}};
  auto cp = b.coproduct(x, x);
  auto fold = b.copair(b.identity(x), b.identity(x));
  CHECK(b.is_epi(fold));
  CHECK_FALSE(b.is_mono(fold));
  auto kp = b.kernel_pair(fold);
  CHECK(kp.subset.size() == 4);
  CHECK(b.is_mono(cp.left));
  CHECK_FALSE(b.is_epi(cp.left));
}

TEST_CASE("final object and products") {
  auto b = sets_b();
  auto one = b.final_object();
  REQUIRE(one.size() == 1);
  for (const auto& x : b.objects(2, 2)) CHECK(b.homs(x, one).size() == 1);
  SetsB::Object x{{set_of(2)}};
  auto p = b.product(x, x);
  // 2-point sets glued along a partial matching of their points: 1 + 4 + 2
  CHECK(p.object.size() == 7);
}

TEST_CASE("images and subobjects") {
  auto b = sets_b();
  SetsB::Object y{{set_of(1), set_of(2), set_of(1)}};
  CHECK(b.subobjects(y).size() == 8);
  SetsB::Object x{{set_of(2)}};
  for (const auto& f : b.homs(x, y)) {
    auto im = b.image(f);
    CHECK(b.compose(im.sub.inclusion, im.corestriction) == f);
    CHECK(b.is_epi(im.corestriction));
    CHECK(b.is_mono(im.sub.inclusion));
    CHECK(im.sub.subset.size() == 1);
  }
  auto im0 = b.image(b.homs(SetsB::Object{}, y).front());
  CHECK(im0.sub.subset.empty());
}

TEST_CASE("epimorphisms out of a 2-point atom") {
  auto b = sets_b();
  auto epis = epis_out_of(b, SetsB::Object{{set_of(2)}});
  // targets: the empty set, a point (two ways), the 2-point set itself
  CHECK(epis.size() == 4);
  for (const auto& e : epis) CHECK(b.is_epi(e));
}

TEST_CASE("equivalence relations and quotients on a 1-point atom") {
  auto b = sets_b();
  SetsB::Object x{{set_of(1)}};
  auto rels = equivalence_relations(b, x);
  // X x X = {point, 2-point}: the diagonal and everything
  REQUIRE(rels.size() == 2);
  for (const auto& r : rels) {
    CHECK(is_equivalence_relation(b, r));
    CHECK(is_effective(b, r));
  }
  auto q = quotient(b, rels.front());
  CHECK(b.is_iso(q));
}

TEST_CASE("coequalizer of equal maps is an isomorphism") {
  auto b = sets_b();
  SetsB::Object x{{set_of(2)}};
  auto id = b.identity(x);
  CHECK(b.is_iso(coequalizer(b, id, id)));
}

TEST_CASE("fiber_product_empty agrees with the fiber product") {
  for (std::string name : {"sets", "separable", "matchings"}) {
    SetsB b(StructureCategory(builtin_class(name)));
    auto objs = b.objects(3, 1);
    for (const auto& z : objs)
      for (const auto& x : objs)
        for (const auto& f : b.homs(x, z))
          for (const auto& y : objs)
            for (const auto& g : b.homs(y, z)) CHECK(b.fiber_product_empty(f, g) == b.fiber_product(f, g).object.empty());
  }
}
