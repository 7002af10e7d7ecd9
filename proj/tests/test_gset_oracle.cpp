#include <doctest.h>

#include <chrono>
#include <memory>

#include "fraisse/bcat_quotients.hpp"
#include "fraisse/gset_oracle.hpp"

using namespace fraisse;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

TransitiveB full_b(const GroupPtr& g) { return TransitiveB(TransitiveCategory(StabilizerClass::full(g))); }

Subgroup of_order(const FiniteGroup& g, std::size_t k) {
  for (const auto& h : all_subgroups(g))
    if (h.size() == k) return h;
  return {};
}

}  // namespace

TEST_CASE("set level of objects and maps") {
  auto g = share(FiniteGroup::symmetric(3));
  auto b = full_b(g);
  const auto& cat = b.base();
  auto c2 = cat.object_of(of_order(*g, 2));
  CHECK(set_level(b, b.atom(c2)).points == 3);
  CHECK(set_level(b, b.final_object()).points == 1);
  auto regular = b.atom(cat.object_of(trivial_subgroup()));
  for (const auto& f : b.homs(regular, b.atom(c2))) {
    auto m = set_level(b, f);
    CHECK(is_equivariant(set_level(b, regular), set_level(b, b.atom(c2)), m));
  }
  // Set-level coequalizer of the kernel pair of G/1 -> G/C2 is G/C2.
  auto q = b.homs(regular, b.atom(c2)).front();
  auto [r1, r2] = b.projections(b.kernel_pair(q));
  auto coeq = coequalizer(set_level(b, regular), set_level(b, r1), set_level(b, r2));
  CHECK(isomorphic(coeq.object, set_level(b, b.atom(c2))));
  CHECK(b.is_iso(b.factorizations(q, coequalizer(b, r1, r2)).at(0)));
}

TEST_CASE("epis out of an atom correspond to overgroups") {
  for (auto g : {share(FiniteGroup::symmetric(3)), share(FiniteGroup::dihedral(4))}) {
    auto b = full_b(g);
    const auto& cat = b.base();
    for (const auto& a : cat.objects(static_cast<int>(g->order()))) {
      std::size_t over = 0;
      for (const auto& v : all_subgroups(*g)) over += contains(v, cat.subgroup(a));
      CHECK(epis_out_of(b, b.atom(a)).size() == over);
    }
  }
}

TEST_CASE("bcat constructions agree with the set-level oracle") {
  for (auto [g, atoms] : {std::pair{share(FiniteGroup::cyclic(2)), 2}, {share(FiniteGroup::symmetric(3)), 2},
                          {share(FiniteGroup::dihedral(4)), 1}}) {
    auto b = full_b(g);
    auto report = oracle_agreement(b, SuiteBounds{static_cast<int>(g->order()), atoms, 0, 0});
    for (const auto& r : report.results) CHECK_MESSAGE(r.pass, g->order() << " " << r.name << " " << r.witness.dump());
    CHECK(double_coset_identity(g).pass);
  }
  CHECK(double_coset_identity(share(FiniteGroup::symmetric(4))).pass);
}

TEST_CASE("effective equivalence relations") {
  auto g = share(FiniteGroup::symmetric(3));
  auto full = effectivity_report(full_b(g), SuiteBounds{6, 2, 0, 0});
  CHECK(full.relations > 0);
  CHECK(full.all_effective());
  CHECK(full.reflected_quotients_agree);

  TransitiveB coarse(TransitiveCategory(StabilizerClass::closure(g, {})));
  auto c2 = of_order(*g, 2);
  auto r = coset_relation(coarse, c2);
  CHECK(is_equivalence_relation(coarse, r));
  CHECK(r.subset.size() == 2);
  auto q = quotient(coarse, r);
  CHECK(q.target == coarse.final_object());
  auto kp = coarse.kernel_pair(q);
  CHECK(kp.subset.size() == 6);
  CHECK_FALSE(is_effective(coarse, r));

  auto report = effectivity_report(coarse, SuiteBounds{6, 1, 0, 0});
  CHECK_FALSE(report.all_effective());
  CHECK(report.reflected_quotients_agree);
  bool found = false;
  for (const auto& w : report.witnesses)
    found = found || (w.at("relation") == Json(r.subset) && w.at("relation_points") == 12 && w.at("kernel_pair_points") == 36);
  CHECK(found);

  // The diagonal is always effective.
  auto regular = coarse.atom(coarse.base().object_of(trivial_subgroup()));
  CHECK(is_effective(coarse, coarse.relation(regular, diagonal_subset(coarse, regular))));
}

TEST_CASE("fiber functor is exact and conservative") {
  auto g = share(FiniteGroup::symmetric(3));
  auto b = full_b(g);
  auto report = fiber_functor_check(b, SuiteBounds{6, 2, 0, 0});
  for (const auto& r : report.results) CHECK_MESSAGE(r.pass, r.name << " " << r.witness.dump());
  auto p = b.product(b.atom(b.base().object_of(trivial_subgroup())), b.atom(b.base().object_of(trivial_subgroup())));
  CHECK(p.object.size() == 6);
}
