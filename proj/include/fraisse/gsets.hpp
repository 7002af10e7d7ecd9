#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

namespace fraisse {

/// A permutation group on {0..degree-1}, with every element listed.
///
/// Elements are indexed in lexicographic order of their images, so the
/// identity has index 0. Products compose right to left: mul(a, b) applies b
/// first.
class FiniteGroup {
 public:
  using Perm = std::vector<int>;

  static constexpr std::size_t kDefaultCap = 5000;

  /// Throws ValidationError on a malformed generator, CapExceeded when the
  /// closure is larger than `cap`.
  FiniteGroup(int degree, std::vector<Perm> generators, std::size_t cap = kDefaultCap);

  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);  // order 2n, acting on an n-gon

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  /// Indices of the generators.
  const std::vector<int>& generator_indices() const noexcept { return gen_idx_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  /// Throws ValidationError if p is not an element.
  int index_of(const Perm& p) const;

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<int> gen_idx_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<int> table_;  // order x order, filled for small groups
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted element indices.
using Subgroup = std::vector<int>;

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
/// g H g^-1, sorted.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int by);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool contains(const Subgroup& big, const Subgroup& small);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup whole_group(const FiniteGroup& g);
inline Subgroup trivial_subgroup() { return {0}; }

inline constexpr std::size_t kDefaultSubgroupCap = 200;

/// Every subgroup, sorted by order and then by elements. Throws CapExceeded
/// when |G| > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap);

/// A conjugacy class of subgroups; rep is the least conjugate and
/// conjugates[k] = conjugators[k] rep conjugators[k]^-1.
struct ConjugacyClass {
  Subgroup rep;
  std::vector<Subgroup> conjugates;
  std::vector<int> conjugators;
};

/// One class per conjugacy class, ordered by subgroup order, then rep.
std::vector<ConjugacyClass> subgroups_up_to_conjugacy(const FiniteGroup& g,
                                                      std::size_t cap = kDefaultSubgroupCap);

/// Number of G-maps G/U -> G/V, i.e. of cosets xV with x^-1 U x inside V.
std::size_t hom_count(const FiniteGroup& g, const Subgroup& u, const Subgroup& v);
/// Least representatives x of those cosets.
std::vector<int> hom_list(const FiniteGroup& g, const Subgroup& u, const Subgroup& v);

/// Number of double cosets U\G/V.
std::size_t double_coset_count(const FiniteGroup& g, const Subgroup& u, const Subgroup& v);

/// A family of subgroups containing G and the trivial subgroup, closed under
/// conjugation and intersection.
class StabilizerClass {
 public:
  /// Throws ValidationError unless `members` satisfies the closure conditions.
  StabilizerClass(GroupPtr group, std::vector<Subgroup> members);

  static StabilizerClass full(GroupPtr group);
  /// Smallest valid class containing the seeds.
  static StabilizerClass closure(GroupPtr group, std::vector<Subgroup> seeds);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Subgroup>& members() const noexcept { return members_; }
  bool contains(const Subgroup& u) const;

  /// Intersection of the members containing u.
  Subgroup reflector(const Subgroup& u) const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> members_;  // sorted
};

/// A finite G-set with the action of every element tabulated.
struct GSet {
  GroupPtr group;
  int points = 0;
  std::vector<std::vector<int>> action;  // action[g][p]

  int act(int g, int p) const { return action[g][p]; }
  /// Orbits as sorted point lists, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  Subgroup stabilizer(int p) const;
  /// Throws ValidationError if the table is not an action.
  void validate() const;
};

/// G/U on the left cosets, numbered by least element.
GSet coset_space(const GroupPtr& g, const Subgroup& u);
/// Left cosets of u as sorted element lists, ordered by least element.
std::vector<Subgroup> left_cosets(const FiniteGroup& g, const Subgroup& u);

GSet disjoint_union(const std::vector<GSet>& parts);
GSet product(const GSet& x, const GSet& y);

/// Points (x, y) with f(x) = g(y), numbered lexicographically, with projections.
struct SetFiberProduct {
  GSet object;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::pair<int, int>> pairs;
};
SetFiberProduct fiber_product(const GSet& x, const std::vector<int>& f, const GSet& y, const std::vector<int>& g);

/// Restriction to an invariant subset, points renumbered in increasing order.
GSet restrict_to(const GSet& x, const std::vector<int>& subset);

/// Quotient by the equivalence relation generated by f(p) ~ g(p); returns
/// the quotient and the class of each point of y.
struct SetQuotient {
  GSet object;
  std::vector<int> map;
};
SetQuotient coequalizer(const GSet& y, const std::vector<int>& f, const std::vector<int>& g);

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<int>& f);

/// Same multiset of orbit stabilizers up to conjugacy.
bool isomorphic(const GSet& x, const GSet& y);

}  // namespace fraisse
