#include <doctest.h>

#include <string>

#include "fraisse/bcat_checks.hpp"
#include "fraisse/structure_category.hpp"

using namespace fraisse;

namespace {

using StructB = BCategory<StructureCategory>;

StructB b_of(const std::string& name) { return StructB(StructureCategory(builtin_class(name))); }

StructB::Morphism perm_atom_map(const StructB& b, const char* small, const char* big, std::vector<int> positions) {
  Embedding e{perm_to_structure(Permutation::parse(small)), perm_to_structure(Permutation::parse(big)),
              std::move(positions)};
  return b.make(b.atom(e.target), b.atom(e.source), {0}, {e});
}

}  // namespace

TEST_CASE("axiom suite passes for A-categories of structures") {
  for (std::string name : {"sets", "total_orders", "graphs"}) {
    auto report = verify_axioms(b_of(name), SuiteBounds{});
    for (const auto& r : report.results) CHECK_MESSAGE(r.pass, name << ": " << r.name);
  }
  auto pairs = StructB(StructureCategory(product_class(builtin_class("sets"), builtin_class("sets"))));
  CHECK(verify_axioms(pairs, SuiteBounds{}).pass());
}

TEST_CASE("matchings violate the mono-of-atoms axiom at the vertex-edge map") {
  auto report = verify_axioms(b_of("matchings"), SuiteBounds{});
  const auto* r = report.find("mono_of_atoms_iso");
  REQUIRE(r != nullptr);
  REQUIRE_FALSE(r->pass);
  const auto& f = r->witness.at("f");
  CHECK(f.at("source").at("atoms")[0].at("size") == 2);
  CHECK(f.at("target").at("atoms")[0].at("size") == 1);
  CHECK(report.find("theorem_ab")->pass);
  CHECK(report.find("category_laws")->pass);
  CHECK(report.find("fiber_product_universal")->pass);
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(b_of("sets"), 4).pass());
  CHECK(is_nondegenerate(b_of("graphs"), 3).pass());
  auto pairs = StructB(StructureCategory(product_class(builtin_class("sets"), builtin_class("total_orders"))));
  CHECK(is_nondegenerate(pairs, 3).pass());

  auto sep = b_of("separable");
  auto v = is_nondegenerate(sep, 4);
  REQUIRE_FALSE(v.pass());
  REQUIRE(v.counterexample->f.has_value());
  CHECK(sep.fiber_product(*v.counterexample->f, *v.counterexample->g).object.empty());
  auto f = perm_atom_map(sep, "123", "1342", {0, 1, 2});
  auto g = perm_atom_map(sep, "123", "3124", {1, 2, 3});
  CHECK(sep.fiber_product(f, g).object.empty());
}

TEST_CASE("epis are stable in nondegenerate instances") {
  for (std::string name : {"sets", "total_orders", "graphs"}) CHECK_MESSAGE(check_epi_stability(b_of(name), SuiteBounds{}).pass, name);
}

TEST_CASE("the three nondegeneracy conditions agree") {
  for (auto [name, size] : {std::pair{"sets", 3}, {"total_orders", 3}, {"graphs", 2}}) {
    auto report = nondegeneracy_conditions(b_of(name), SuiteBounds{size, 1, 0, 0});
    for (const auto& r : report.results) CHECK_MESSAGE(r.pass, name << ": " << r.name);
  }
}

TEST_CASE("separable permutations: base change of an epi is not an epi") {
  auto sep = b_of("separable");
  auto f = perm_atom_map(sep, "123", "1342", {0, 1, 2});
  auto g = perm_atom_map(sep, "123", "3124", {1, 2, 3});
  REQUIRE(sep.is_epi(f));
  auto p = sep.fiber_product(f, g);
  CHECK(p.object.empty());
  CHECK_FALSE(sep.is_epi(p.right));
}

TEST_CASE("factor-through criterion") {
  for (std::string name : {"sets", "total_orders", "graphs"}) CHECK_MESSAGE(check_factor_through(b_of(name), SuiteBounds{2, 2, 2, 2}).pass, name);
}
