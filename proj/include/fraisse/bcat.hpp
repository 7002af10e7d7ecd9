#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/error.hpp"

namespace fraisse {

/// A finite sequence of atoms; the empty sequence is the initial object 0.
template <ACategory C>
struct BObject {
  std::vector<typename C::Object> atoms;

  std::size_t size() const noexcept { return atoms.size(); }
  bool empty() const noexcept { return atoms.empty(); }

  friend auto operator<=>(const BObject&, const BObject&) = default;
  friend bool operator==(const BObject&, const BObject&) = default;
};

/// f : X -> Y given by an index map a : [n] -> [m] and, for each atom i of X,
/// a morphism of the underlying category from Y[a(i)] to X[i].
template <ACategory C>
struct BMorphism {
  BObject<C> source;
  BObject<C> target;
  std::vector<int> index;
  std::vector<typename C::Morphism> components;

  friend auto operator<=>(const BMorphism&, const BMorphism&) = default;
  friend bool operator==(const BMorphism&, const BMorphism&) = default;
};

/// The category B(A) of finite sequences of objects of an A-category.
template <ACategory C>
class BCategory {
 public:
  using Base = C;
  using AObject = typename C::Object;
  using AMorphism = typename C::Morphism;
  using Object = BObject<C>;
  using Morphism = BMorphism<C>;

  struct Coproduct {
    Object object;
    Morphism left;
    Morphism right;
  };

  struct Subobject {
    std::vector<int> subset;
    Object object;
    Morphism inclusion;
  };

  struct Image {
    Subobject sub;
    Morphism corestriction;
  };

  /// P = X x_Z Y with projections left : P -> X, right : P -> Y.
  struct FiberProduct {
    Object object;
    Morphism left;
    Morphism right;
  };

  /// A subobject of X x X, recorded by its atom indices in `square`.
  struct Relation {
    Object carrier;
    FiberProduct square;
    std::vector<int> subset;
  };

  explicit BCategory(C base) : a_(std::move(base)) {}

  const C& base() const noexcept { return a_; }

  Object atom(const AObject& x) const { return Object{{x}}; }

  /// Objects with at most max_atoms atoms of size at most max_size, one per
  /// isomorphism class (atom sequences in non-decreasing order).
  std::vector<Object> objects(int max_size, int max_atoms) const {
    auto atoms = a_.objects(max_size);
    std::vector<Object> out;
    std::vector<int> pick;
    auto go = [&](auto& self, std::size_t from) -> void {
      Object o;
      for (int k : pick) o.atoms.push_back(atoms[k]);
      out.push_back(std::move(o));
      if (static_cast<int>(pick.size()) == max_atoms) return;
      for (std::size_t k = from; k < atoms.size(); ++k) {
        pick.push_back(static_cast<int>(k));
        self(self, k);
        pick.pop_back();
      }
    };
    go(go, 0);
    return out;
  }

  bool is_valid(const Morphism& f) const {
    if (f.index.size() != f.source.size() || f.components.size() != f.source.size()) return false;
    for (std::size_t i = 0; i < f.index.size(); ++i) {
      const int j = f.index[i];
      if (j < 0 || j >= static_cast<int>(f.target.size())) return false;
      if (!(a_.source(f.components[i]) == f.target.atoms[j])) return false;
      if (!(a_.target(f.components[i]) == f.source.atoms[i])) return false;
    }
    return true;
  }

  /// Builds a morphism from its factorization; throws ValidationError if the
  /// data does not type-check.
  Morphism make(Object source, Object target, std::vector<int> index, std::vector<AMorphism> components) const {
    Morphism f{std::move(source), std::move(target), std::move(index), std::move(components)};
    if (!is_valid(f)) throw ValidationError("ill-typed B-morphism");
    return f;
  }

  Morphism identity(const Object& x) const {
    Morphism f{x, x, {}, {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
      f.index.push_back(static_cast<int>(i));
      f.components.push_back(a_.identity(x.atoms[i]));
    }
    return f;
  }

  /// g o f.
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target == g.source)) throw ValidationError("B-morphisms do not compose");
    Morphism h{f.source, g.target, {}, {}};
    for (std::size_t i = 0; i < f.index.size(); ++i) {
      const int j = f.index[i];
      h.index.push_back(g.index[j]);
      h.components.push_back(a_.compose(f.components[i], g.components[j]));
    }
    return h;
  }

  std::vector<Morphism> homs(const Object& x, const Object& y) const {
    std::vector<std::vector<std::pair<int, AMorphism>>> choices(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        for (auto& h : a_.homs(y.atoms[j], x.atoms[i])) choices[i].emplace_back(static_cast<int>(j), std::move(h));
    std::vector<Morphism> out;
    Morphism cur{x, y, {}, {}};
    auto go = [&](auto& self, std::size_t i) -> void {
      if (i == x.size()) {
        out.push_back(cur);
        return;
      }
      for (const auto& [j, h] : choices[i]) {
        cur.index.push_back(j);
        cur.components.push_back(h);
        self(self, i + 1);
        cur.index.pop_back();
        cur.components.pop_back();
      }
    };
    go(go, 0);
    return out;
  }

  Coproduct coproduct(const Object& x, const Object& y) const {
    Object s = x;
    s.atoms.insert(s.atoms.end(), y.atoms.begin(), y.atoms.end());
    Morphism l{x, s, {}, {}}, r{y, s, {}, {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
      l.index.push_back(static_cast<int>(i));
      l.components.push_back(a_.identity(x.atoms[i]));
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
      r.index.push_back(static_cast<int>(x.size() + i));
      r.components.push_back(a_.identity(y.atoms[i]));
    }
    return {std::move(s), std::move(l), std::move(r)};
  }

  /// The map X + Y -> Z restricting to f and g.
  Morphism copair(const Morphism& f, const Morphism& g) const {
    if (!(f.target == g.target)) throw ValidationError("copair needs a common target");
    Morphism h{coproduct(f.source, g.source).object, f.target, f.index, f.components};
    h.index.insert(h.index.end(), g.index.begin(), g.index.end());
    h.components.insert(h.components.end(), g.components.begin(), g.components.end());
    return h;
  }

  /// f + g : X + Y -> X' + Y'.
  Morphism sum(const Morphism& f, const Morphism& g) const {
    auto cp = coproduct(f.target, g.target);
    return copair(compose(cp.left, f), compose(cp.right, g));
  }

  bool is_epi(const Morphism& f) const {
    std::vector<char> hit(f.target.size(), 0);
    for (int j : f.index) hit[j] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h; });
  }

  bool is_mono(const Morphism& f) const {
    std::vector<char> hit(f.target.size(), 0);
    for (std::size_t i = 0; i < f.index.size(); ++i) {
      if (hit[f.index[i]]) return false;
      hit[f.index[i]] = 1;
      if (!a_.is_iso(f.components[i])) return false;
    }
    return true;
  }

  bool is_iso(const Morphism& f) const { return is_mono(f) && is_epi(f); }

  /// The inverse of an isomorphism, found by search in the underlying category.
  std::optional<Morphism> inverse(const Morphism& f) const {
    if (!is_iso(f)) return std::nullopt;
    Morphism g{f.target, f.source, std::vector<int>(f.target.size()), {}};
    std::vector<std::optional<AMorphism>> comps(f.target.size());
    for (std::size_t i = 0; i < f.index.size(); ++i) {
      const int j = f.index[i];
      g.index[j] = static_cast<int>(i);
      for (const auto& h : a_.homs(f.source.atoms[i], f.target.atoms[j]))
        if (a_.compose(f.components[i], h) == a_.identity(f.source.atoms[i])) comps[j] = h;
      if (!comps[j]) return std::nullopt;
    }
    for (auto& c : comps) g.components.push_back(*c);
    return g;
  }

  Subobject subobject(const Object& x, const std::vector<int>& subset) const {
    Object s;
    Morphism inc{{}, x, {}, {}};
    for (int k : subset) {
      if (k < 0 || k >= static_cast<int>(x.size())) throw ValidationError("subobject index out of range");
      s.atoms.push_back(x.atoms[k]);
      inc.index.push_back(k);
      inc.components.push_back(a_.identity(x.atoms[k]));
    }
    inc.source = s;
    return {subset, std::move(s), std::move(inc)};
  }

  /// All 2^n index subsets, by size and then lexicographically.
  std::vector<std::vector<int>> subobjects(const Object& x) const {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k) {
      std::vector<char> pick(n, 0);
      std::fill(pick.begin(), pick.begin() + k, 1);
      do {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
          if (pick[v]) s.push_back(v);
        out.push_back(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
  }

  Image image(const Morphism& f) const {
    std::set<int> used(f.index.begin(), f.index.end());
    std::vector<int> subset(used.begin(), used.end());
    auto sub = subobject(f.target, subset);
    Morphism cor{f.source, sub.object, {}, f.components};
    for (int j : f.index)
      cor.index.push_back(static_cast<int>(std::lower_bound(subset.begin(), subset.end(), j) - subset.begin()));
    return {std::move(sub), std::move(cor)};
  }

  Object final_object() const { return Object{a_.initial_set()}; }

  Morphism to_final(const Object& x) const {
    Object one = final_object();
    Morphism f{x, one, {}, {}};
    for (const auto& atom : x.atoms) {
      std::optional<std::pair<int, AMorphism>> found;
      for (std::size_t j = 0; j < one.size(); ++j) {
        for (const auto& h : a_.homs(one.atoms[j], atom)) {
          if (found) throw ConsistencyError("initial set is not initial: several maps to one atom");
          found.emplace(static_cast<int>(j), h);
        }
      }
      if (!found) throw ConsistencyError("initial set is not initial: an atom receives no map");
      f.index.push_back(found->first);
      f.components.push_back(found->second);
    }
    return f;
  }

  /// Atoms of X x_Z Y are the amalgams of (f_i, g_j) over pairs of atoms
  /// lying over the same atom of Z, i outer and j inner.
  FiberProduct fiber_product(const Morphism& f, const Morphism& g) const {
    if (!(f.target == g.target)) throw ValidationError("fiber product needs a common target");
    FiberProduct p{{}, {{}, f.source, {}, {}}, {{}, g.source, {}, {}}};
    for (std::size_t i = 0; i < f.index.size(); ++i) {
      for (std::size_t j = 0; j < g.index.size(); ++j) {
        if (f.index[i] != g.index[j]) continue;
        for (auto& am : a_.amalgamate(f.components[i], g.components[j])) {
          p.object.atoms.push_back(am.apex);
          p.left.index.push_back(static_cast<int>(i));
          p.left.components.push_back(std::move(am.left));
          p.right.index.push_back(static_cast<int>(j));
          p.right.components.push_back(std::move(am.right));
        }
      }
    }
    p.left.source = p.object;
    p.right.source = p.object;
    return p;
  }

  /// Whether X x_Z Y has no atoms; stops at the first amalgam.
  bool fiber_product_empty(const Morphism& f, const Morphism& g) const {
    if (!(f.target == g.target)) throw ValidationError("fiber product needs a common target");
    for (std::size_t i = 0; i < f.index.size(); ++i)
      for (std::size_t j = 0; j < g.index.size(); ++j)
        if (f.index[i] == g.index[j] && !a_.amalgamate_some(f.components[i], g.components[j], 1).empty())
          return false;
    return true;
  }

  FiberProduct product(const Object& x, const Object& y) const {
    return fiber_product(to_final(x), to_final(y));
  }

  /// Every m : W -> P with left o m = u and right o m = v.
  std::vector<Morphism> mediators(const FiberProduct& p, const Morphism& u, const Morphism& v) const {
    if (!(u.source == v.source) || !(u.target == p.left.target) || !(v.target == p.right.target))
      throw ValidationError("cone does not match the fiber product");
    const Object& w = u.source;
    std::vector<std::vector<std::pair<int, AMorphism>>> choices(w.size());
    for (std::size_t s = 0; s < w.size(); ++s) {
      for (std::size_t k = 0; k < p.object.size(); ++k) {
        if (p.left.index[k] != u.index[s] || p.right.index[k] != v.index[s]) continue;
        for (auto& h : a_.homs(p.object.atoms[k], w.atoms[s]))
          if (a_.compose(h, p.left.components[k]) == u.components[s] &&
              a_.compose(h, p.right.components[k]) == v.components[s])
            choices[s].emplace_back(static_cast<int>(k), std::move(h));
      }
    }
    std::vector<Morphism> out;
    Morphism cur{w, p.object, {}, {}};
    auto go = [&](auto& self, std::size_t s) -> void {
      if (s == w.size()) {
        out.push_back(cur);
        return;
      }
      for (const auto& [k, h] : choices[s]) {
        cur.index.push_back(k);
        cur.components.push_back(h);
        self(self, s + 1);
        cur.index.pop_back();
        cur.components.pop_back();
      }
    };
    go(go, 0);
    return out;
  }

  /// The unique mediator; ConsistencyError if there is none or several.
  Morphism mediator(const FiberProduct& p, const Morphism& u, const Morphism& v) const {
    auto ms = mediators(p, u, v);
    if (ms.size() != 1)
      throw ConsistencyError("expected one mediating morphism, found " + std::to_string(ms.size()));
    return ms.front();
  }

  /// X -> X x X.
  Morphism diagonal(const Object& x) const {
    auto id = identity(x);
    return mediator(product(x, x), id, id);
  }

  /// The relation on X carried by the given atoms of X x X.
  Relation relation(const Object& x, std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    auto sq = product(x, x);
    for (int k : subset)
      if (k < 0 || k >= static_cast<int>(sq.object.size())) throw ValidationError("relation index out of range");
    return {x, std::move(sq), std::move(subset)};
  }

  /// The two maps R -> X.
  std::pair<Morphism, Morphism> projections(const Relation& r) const {
    auto inc = subobject(r.square.object, r.subset).inclusion;
    return {compose(r.square.left, inc), compose(r.square.right, inc)};
  }

  /// Eq(f) = X x_Y X, as the image of its mediator into X x X.
  Relation kernel_pair(const Morphism& f) const {
    auto k = fiber_product(f, f);
    auto sq = product(f.source, f.source);
    auto m = mediator(sq, k.left, k.right);
    std::set<int> used(m.index.begin(), m.index.end());
    return {f.source, std::move(sq), std::vector<int>(used.begin(), used.end())};
  }

  std::vector<int> orbit_map(const Morphism& f) const { return f.index; }

  /// Every k with k o g = f (g and f sharing a source).
  std::vector<Morphism> factorizations(const Morphism& f, const Morphism& g) const {
    if (!(f.source == g.source)) throw ValidationError("factorization needs a common source");
    std::vector<Morphism> out;
    for (auto& k : homs(g.target, f.target))
      if (compose(k, g) == f) out.push_back(std::move(k));
    return out;
  }

 private:
  C a_;
};

}  // namespace fraisse
