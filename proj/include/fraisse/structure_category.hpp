#pragma once

#include <cstddef>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/classkit.hpp"
#include "fraisse/relstruct.hpp"

namespace fraisse {

/// A hereditary structure class as an A-category: objects are members,
/// morphisms are embeddings.
class StructureCategory {
 public:
  using Object = Structure;
  using Morphism = Embedding;

  explicit StructureCategory(ClassPtr cls);

  const StructureClass& structure_class() const noexcept { return *cls_; }
  const ClassPtr& class_ptr() const noexcept { return cls_; }

  /// Members of size <= n, by size and then canonical order.
  std::vector<Structure> objects(int n) const;
  std::vector<Embedding> homs(const Structure& x, const Structure& y) const;
  Embedding compose(const Embedding& g, const Embedding& f) const;
  Embedding identity(const Structure& x) const;
  const Structure& source(const Embedding& f) const { return f.source; }
  const Structure& target(const Embedding& f) const { return f.target; }
  bool is_iso(const Embedding& f) const { return f.source.size() == f.target.size(); }
  bool isomorphic(const Structure& x, const Structure& y) const;
  int size(const Structure& x) const { return x.size(); }

  /// Minimal amalgams of the span (b, c). Each apex is canonical and jointly
  /// covered by the legs; the list is sorted and free of cocone-isomorphic
  /// duplicates. Throws ValidationError when b and c have different sources
  /// or an object is not a member, CapExceeded above the class cap.
  std::vector<AmalgamOf<Structure, Embedding>> amalgamate(const Embedding& b, const Embedding& c) const;
  /// Stops after `limit` amalgams; apexes are not canonicalized.
  std::vector<AmalgamOf<Structure, Embedding>> amalgamate_some(const Embedding& b, const Embedding& c,
                                                               std::size_t limit) const;

  /// {empty structure} when it is a member.
  std::vector<Structure> initial_set() const;

 private:
  std::vector<AmalgamOf<Structure, Embedding>> run(const Embedding& b, const Embedding& c,
                                                    std::size_t limit) const;

  ClassPtr cls_;
};

static_assert(ACategory<StructureCategory>);

}  // namespace fraisse
