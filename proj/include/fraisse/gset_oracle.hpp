#pragma once

#include <vector>

#include "fraisse/bcat.hpp"
#include "fraisse/bcat_checks.hpp"
#include "fraisse/gsets.hpp"
#include "fraisse/transitive_category.hpp"

namespace fraisse {

using TransitiveB = BCategory<TransitiveCategory>;

/// The underlying G-set: atoms G/U_i one after another.
GSet set_level(const TransitiveB& b, const TransitiveB::Object& x);
/// The underlying equivariant point map of f.
std::vector<int> set_level(const TransitiveB& b, const TransitiveB::Morphism& f);

/// Atoms of X x X whose points all lie in `pairs` (points of X numbered as
/// in set_level). Throws ValidationError if some atom lies partly inside.
TransitiveB::Relation relation_from_pairs(const TransitiveB& b, const TransitiveB::Object& x,
                                          const std::vector<std::pair<int, int>>& pairs);

/// The relation g ~ gh (h in H) on the regular atom G/1.
TransitiveB::Relation coset_relation(const TransitiveB& b, const Subgroup& h);

/// Fiber products, kernel pairs, images and coequalizers computed in B
/// against the same constructions on the underlying G-sets, for all maps
/// between objects of `bounds` (max_size, max_atoms).
AxiomReport oracle_agreement(const TransitiveB& b, const SuiteBounds& bounds);

/// |G\(G/U x G/V)| = |U\G/V| for all subgroups U, V.
AxiomResult double_coset_identity(const GroupPtr& g);

/// Every equivalence relation on an object at bound, tested for
/// effectivity. The quotient is also compared with the set-level quotient
/// pushed into the stabilizer class by the reflector.
struct EffectivityReport {
  std::size_t relations = 0;
  std::size_t ineffective = 0;
  bool reflected_quotients_agree = true;
  Json witnesses = Json::array();  // the ineffective relations

  bool all_effective() const { return ineffective == 0; }
};
EffectivityReport effectivity_report(const TransitiveB& b, const SuiteBounds& bounds);
void to_json(Json& j, const EffectivityReport& r);

/// The forgetful functor to finite sets: 1 goes to a point, fiber products,
/// images and coequalizers are preserved, and maps that are bijective on
/// points are isomorphisms.
AxiomReport fiber_functor_check(const TransitiveB& b, const SuiteBounds& bounds);

}  // namespace fraisse
