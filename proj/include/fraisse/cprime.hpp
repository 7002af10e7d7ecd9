#pragma once

#include <compare>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/json_io.hpp"

namespace fraisse {

/// A finite set {0..n-1} with a group of permutations of it, stored as the
/// least sorted element list among its conjugates.
struct CPrimeObject {
  int n = 0;
  std::vector<std::vector<int>> group;
  friend auto operator<=>(const CPrimeObject&, const CPrimeObject&) = default;
};

/// An injection a : X -> Y such that every element of the target group
/// preserves a(X) and restricts to an element of the source group; taken
/// modulo the source group acting on the right, `map` is the least
/// representative.
struct CPrimeMorphism {
  CPrimeObject source;
  CPrimeObject target;
  std::vector<int> map;
  friend auto operator<=>(const CPrimeMorphism&, const CPrimeMorphism&) = default;
};

class CPrimeCategory {
 public:
  using Object = CPrimeObject;
  using Morphism = CPrimeMorphism;

  static constexpr int kMaxObjectSize = 5;
  static constexpr int kMaxApexSize = 8;

  /// Throws CapExceeded for n_max > 5.
  explicit CPrimeCategory(int n_max);

  int n_max() const noexcept { return n_max_; }

  /// Canonical object for a group given by generators on {0..n-1}. Throws
  /// ValidationError on a bad generator, CapExceeded when n > 8.
  static Object object(int n, const std::vector<std::vector<int>>& generators);

  /// The least representative of f's class; throws ValidationError unless
  /// the map satisfies the morphism condition.
  Morphism morphism(const Object& x, const Object& y, const std::vector<int>& map) const;

  std::vector<Object> objects(int n) const;
  std::vector<Morphism> homs(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism identity(const Object& x) const;
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  bool is_iso(const Morphism& f) const {
    return f.source.n == f.target.n && f.source.group.size() == f.target.group.size();
  }
  bool isomorphic(const Object& x, const Object& y) const { return x == y; }
  int size(const Object& x) const { return x.n; }
  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const;
  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const;
  std::vector<Object> initial_set() const { return {Object{0, {{}}}}; }

 private:
  int n_max_;
  std::vector<std::vector<Object>> by_size_;
};

static_assert(ACategory<CPrimeCategory>);

void to_json(Json& j, const CPrimeObject& x);
void to_json(Json& j, const CPrimeMorphism& f);

}  // namespace fraisse
