#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fraisse/permlab.hpp"
#include "fraisse/relstruct.hpp"
#include "fraisse/verdict.hpp"

namespace fraisse {

class StructureClass;
using ClassPtr = std::shared_ptr<const StructureClass>;

/// A class of finite structures over one signature, closed under isomorphism.
///
/// Enumeration extends members one point at a time, which requires the class
/// to be hereditary. A non-hereditary class must name a hereditary `ambient`
/// superclass; its members are then enumerated by filtering the ambient class.
class StructureClass {
 public:
  using Predicate = std::function<bool(const Structure&)>;

  StructureClass(std::string name, SignaturePtr signature, Predicate member, bool hereditary, int cap,
                 ClassPtr ambient = nullptr);

  const std::string& name() const noexcept { return name_; }
  const SignaturePtr& signature() const noexcept { return signature_; }
  bool hereditary() const noexcept { return hereditary_; }
  int cap() const noexcept { return cap_; }
  const ClassPtr& ambient() const noexcept { return ambient_; }

  /// Components when this class was built by product_class.
  const std::pair<ClassPtr, ClassPtr>& components() const noexcept { return components_; }

  /// False for structures over a different signature.
  bool contains(const Structure& x) const;

 private:
  friend ClassPtr product_class(ClassPtr, ClassPtr);

  std::string name_;
  SignaturePtr signature_;
  Predicate member_;
  bool hereditary_;
  int cap_;
  ClassPtr ambient_;
  std::pair<ClassPtr, ClassPtr> components_;
};

inline constexpr int kDefaultClassCap = 6;
inline constexpr int kOrderClassCap = 8;

/// sets, total_orders, graphs, matchings, all_permutations,
/// separable_permutations, perfect_matchings (non-hereditary), empty.
/// Throws ValidationError on an unknown name.
ClassPtr builtin_class(std::string_view name);
std::vector<std::string> builtin_class_names();

ClassPtr permutation_class(const PermClass& cls);

/// One canonical representative per isomorphism class of members of size n,
/// in increasing structure order. Throws CapExceeded above the class cap.
std::vector<Structure> enumerate_class(const StructureClass& cls, int n);

/// Levels 0..n_max of enumerate_class.
std::vector<std::vector<Structure>> enumerate_upto(const StructureClass& cls, int n_max);

struct ClassProfile {
  std::vector<std::size_t> counts;
};

ClassProfile profile(const StructureClass& cls, int n_max);

struct HereditaryWitness {
  Structure member;
  std::vector<int> subset;
};

Verdict<HereditaryWitness> check_hereditary(const StructureClass& cls, int n_max);

/// Pairs (X1, X2) encoded as one structure: the unary relation "first" marks
/// the points of X1, relations of the components are prefixed "1." / "2.".
ClassPtr product_class(ClassPtr c1, ClassPtr c2);

Structure pair_structure(const StructureClass& product, const Structure& x1, const Structure& x2);
std::pair<Structure, Structure> split_pair(const StructureClass& product, const Structure& x);

}  // namespace fraisse
