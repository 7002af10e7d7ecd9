#pragma once

#include <compare>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/gsets.hpp"
#include "fraisse/json_io.hpp"

namespace fraisse {

/// G/U for U the representative of conjugacy class `cls`.
struct TransitiveObject {
  int cls = 0;
  friend auto operator<=>(const TransitiveObject&, const TransitiveObject&) = default;
};

/// A morphism G/U -> G/V of the A-category is the G-map G/V -> G/U sending
/// gV to gxU; x is the least element of the coset xU.
struct TransitiveMorphism {
  TransitiveObject source;
  TransitiveObject target;
  int x = 0;
  friend auto operator<=>(const TransitiveMorphism&, const TransitiveMorphism&) = default;
};

/// The opposite of the category of transitive G-sets with stabilizers in a
/// stabilizer class. Size is the index of the stabilizer.
class TransitiveCategory {
 public:
  using Object = TransitiveObject;
  using Morphism = TransitiveMorphism;

  explicit TransitiveCategory(StabilizerClass e);

  const FiniteGroup& group() const noexcept { return *e_.group(); }
  const GroupPtr& group_ptr() const noexcept { return e_.group(); }
  const StabilizerClass& stabilizer_class() const noexcept { return e_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const ConjugacyClass& conjugacy_class(const Object& x) const { return classes_.at(x.cls); }
  const Subgroup& subgroup(const Object& x) const { return classes_.at(x.cls).rep; }

  /// The object G/U' for the class of U; throws ValidationError if U is not
  /// conjugate to a member. `by` receives t with U = t U' t^-1.
  Object object_of(const Subgroup& u, int* by = nullptr) const;

  /// Coset gU of a point of G/U, ordered as in coset_space.
  const std::vector<Subgroup>& cosets(const Object& x) const { return cosets_.at(x.cls); }
  int coset_of(const Object& x, int g) const { return coset_of_.at(x.cls)[g]; }

  /// The G-map G/V -> G/U underlying f, as a point map.
  std::vector<int> point_map(const Morphism& f) const;

  std::vector<Object> objects(int n) const;
  std::vector<Morphism> homs(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism identity(const Object& x) const { return {x, x, 0}; }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  bool is_iso(const Morphism& f) const { return size(f.source) == size(f.target); }
  bool isomorphic(const Object& x, const Object& y) const { return x == y; }
  int size(const Object& x) const { return static_cast<int>(cosets_.at(x.cls).size()); }

  /// One amalgam per orbit of the fiber product of the underlying G-maps.
  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const;
  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const;
  std::vector<Object> initial_set() const;

 private:
  int least_in_coset(int x, const Object& u) const;

  StabilizerClass e_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::vector<Subgroup>> cosets_;
  std::vector<std::vector<int>> coset_of_;
  std::vector<Subgroup> normalizers_;
};

static_assert(ACategory<TransitiveCategory>);

void to_json(Json& j, const TransitiveObject& x);
void to_json(Json& j, const TransitiveMorphism& f);

}  // namespace fraisse
