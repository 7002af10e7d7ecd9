#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/bcat.hpp"
#include "fraisse/error.hpp"
#include "fraisse/json_io.hpp"

namespace fraisse {

namespace detail {

template <class Cat, class Object>
void sort_by_size(const Cat& cat, std::vector<Object>& objs) {
  std::stable_sort(objs.begin(), objs.end(),
                   [&](const Object& x, const Object& y) { return cat.size(x) < cat.size(y); });
}

}  // namespace detail

/// Atoms of the sum category B(C1) x B(C2): an atom is an atom of either side.
/// Its final object has two atoms, so it is never nondegenerate.
template <ACategory C1, ACategory C2>
class SumCategory {
 public:
  using Object = std::variant<typename C1::Object, typename C2::Object>;
  using Morphism = std::variant<typename C1::Morphism, typename C2::Morphism>;

  SumCategory(C1 first, C2 second) : c1_(std::move(first)), c2_(std::move(second)) {}

  const C1& first() const noexcept { return c1_; }
  const C2& second() const noexcept { return c2_; }

  std::vector<Object> objects(int n) const {
    std::vector<Object> out;
    for (auto& x : c1_.objects(n)) out.emplace_back(std::in_place_index<0>, std::move(x));
    for (auto& x : c2_.objects(n)) out.emplace_back(std::in_place_index<1>, std::move(x));
    detail::sort_by_size(*this, out);
    return out;
  }

  std::vector<Morphism> homs(const Object& x, const Object& y) const {
    std::vector<Morphism> out;
    if (x.index() != y.index()) return out;
    if (x.index() == 0)
      for (auto& f : c1_.homs(std::get<0>(x), std::get<0>(y))) out.emplace_back(std::in_place_index<0>, std::move(f));
    else
      for (auto& f : c2_.homs(std::get<1>(x), std::get<1>(y))) out.emplace_back(std::in_place_index<1>, std::move(f));
    return out;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (g.index() != f.index()) throw ValidationError("morphisms of different summands do not compose");
    if (f.index() == 0) return Morphism(std::in_place_index<0>, c1_.compose(std::get<0>(g), std::get<0>(f)));
    return Morphism(std::in_place_index<1>, c2_.compose(std::get<1>(g), std::get<1>(f)));
  }

  Morphism identity(const Object& x) const {
    if (x.index() == 0) return Morphism(std::in_place_index<0>, c1_.identity(std::get<0>(x)));
    return Morphism(std::in_place_index<1>, c2_.identity(std::get<1>(x)));
  }

  Object source(const Morphism& f) const {
    if (f.index() == 0) return Object(std::in_place_index<0>, c1_.source(std::get<0>(f)));
    return Object(std::in_place_index<1>, c2_.source(std::get<1>(f)));
  }

  Object target(const Morphism& f) const {
    if (f.index() == 0) return Object(std::in_place_index<0>, c1_.target(std::get<0>(f)));
    return Object(std::in_place_index<1>, c2_.target(std::get<1>(f)));
  }

  bool is_iso(const Morphism& f) const {
    return f.index() == 0 ? c1_.is_iso(std::get<0>(f)) : c2_.is_iso(std::get<1>(f));
  }

  bool isomorphic(const Object& x, const Object& y) const {
    if (x.index() != y.index()) return false;
    return x.index() == 0 ? c1_.isomorphic(std::get<0>(x), std::get<0>(y))
                          : c2_.isomorphic(std::get<1>(x), std::get<1>(y));
  }

  int size(const Object& x) const { return x.index() == 0 ? c1_.size(std::get<0>(x)) : c2_.size(std::get<1>(x)); }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const {
    return amalgamate_some(b, c, 0);
  }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const {
    if (b.index() != c.index()) throw ValidationError("span legs lie in different summands");
    std::vector<AmalgamOf<Object, Morphism>> out;
    auto wrap = [&]<std::size_t I>(auto&& ams, std::integral_constant<std::size_t, I>) {
      for (auto& a : ams)
        out.push_back({Object(std::in_place_index<I>, std::move(a.apex)), Morphism(std::in_place_index<I>, std::move(a.left)),
                       Morphism(std::in_place_index<I>, std::move(a.right))});
    };
    if (b.index() == 0) {
      const auto& x = std::get<0>(b);
      const auto& y = std::get<0>(c);
      wrap(limit ? c1_.amalgamate_some(x, y, limit) : c1_.amalgamate(x, y), std::integral_constant<std::size_t, 0>{});
    } else {
      const auto& x = std::get<1>(b);
      const auto& y = std::get<1>(c);
      wrap(limit ? c2_.amalgamate_some(x, y, limit) : c2_.amalgamate(x, y), std::integral_constant<std::size_t, 1>{});
    }
    return out;
  }

  std::vector<Object> initial_set() const {
    std::vector<Object> out;
    for (auto& x : c1_.initial_set()) out.emplace_back(std::in_place_index<0>, std::move(x));
    for (auto& x : c2_.initial_set()) out.emplace_back(std::in_place_index<1>, std::move(x));
    return out;
  }

 private:
  C1 c1_;
  C2 c2_;
};

/// Pairs of objects with componentwise morphisms; B of this category is the
/// tensor product B(C1) (x) B(C2). Sizes add.
template <ACategory C1, ACategory C2>
class ProductCategory {
 public:
  using Object = std::pair<typename C1::Object, typename C2::Object>;
  using Morphism = std::pair<typename C1::Morphism, typename C2::Morphism>;

  ProductCategory(C1 first, C2 second) : c1_(std::move(first)), c2_(std::move(second)) {}

  std::vector<Object> objects(int n) const {
    std::vector<Object> out;
    auto left = c1_.objects(n);
    auto right = c2_.objects(n);
    for (const auto& x : left)
      for (const auto& y : right)
        if (c1_.size(x) + c2_.size(y) <= n) out.emplace_back(x, y);
    detail::sort_by_size(*this, out);
    return out;
  }

  std::vector<Morphism> homs(const Object& x, const Object& y) const {
    std::vector<Morphism> out;
    auto right = c2_.homs(x.second, y.second);
    for (const auto& f : c1_.homs(x.first, y.first))
      for (const auto& g : right) out.emplace_back(f, g);
    return out;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    return {c1_.compose(g.first, f.first), c2_.compose(g.second, f.second)};
  }
  Morphism identity(const Object& x) const { return {c1_.identity(x.first), c2_.identity(x.second)}; }
  Object source(const Morphism& f) const { return {c1_.source(f.first), c2_.source(f.second)}; }
  Object target(const Morphism& f) const { return {c1_.target(f.first), c2_.target(f.second)}; }
  bool is_iso(const Morphism& f) const { return c1_.is_iso(f.first) && c2_.is_iso(f.second); }
  bool isomorphic(const Object& x, const Object& y) const {
    return c1_.isomorphic(x.first, y.first) && c2_.isomorphic(x.second, y.second);
  }
  int size(const Object& x) const { return c1_.size(x.first) + c2_.size(x.second); }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const {
    return combine(c1_.amalgamate(b.first, c.first), c2_.amalgamate(b.second, c.second), 0);
  }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const {
    auto left = c1_.amalgamate_some(b.first, c.first, limit);
    if (left.empty()) return {};
    return combine(std::move(left), c2_.amalgamate_some(b.second, c.second, limit), limit);
  }

  std::vector<Object> initial_set() const {
    std::vector<Object> out;
    auto right = c2_.initial_set();
    for (const auto& x : c1_.initial_set())
      for (const auto& y : right) out.emplace_back(x, y);
    return out;
  }

 private:
  template <class L, class R>
  std::vector<AmalgamOf<Object, Morphism>> combine(const L& left, const R& right, std::size_t limit) const {
    std::vector<AmalgamOf<Object, Morphism>> out;
    for (const auto& a : left)
      for (const auto& b : right) {
        if (limit && out.size() >= limit) return out;
        out.push_back({{a.apex, b.apex}, {a.left, b.left}, {a.right, b.right}});
      }
    return out;
  }

  C1 c1_;
  C2 c2_;
};

/// Atoms of B(C) over a fixed object S: an atom X with a map X -> S, which
/// on the A side is an index j and a morphism s : S_j -> X, taken up to
/// automorphisms of X.
template <ACategory C>
struct SliceObject {
  typename C::Object object;
  int index = 0;
  typename C::Morphism structure;

  friend auto operator<=>(const SliceObject&, const SliceObject&) = default;
  friend bool operator==(const SliceObject&, const SliceObject&) = default;
};

template <ACategory C>
struct SliceMorphism {
  SliceObject<C> source;
  SliceObject<C> target;
  typename C::Morphism map;

  friend auto operator<=>(const SliceMorphism&, const SliceMorphism&) = default;
  friend bool operator==(const SliceMorphism&, const SliceMorphism&) = default;
};

template <ACategory C>
class SliceCategory {
 public:
  using Object = SliceObject<C>;
  using Morphism = SliceMorphism<C>;

  SliceCategory(C base, BObject<C> over) : c_(std::move(base)), over_(std::move(over)) {}

  const BObject<C>& over() const noexcept { return over_; }

  /// The representative of (x, j, s) with the least structure map.
  Object normalize(const Object& x) const { return normalize_with(x).first; }

  std::vector<Object> objects(int n) const {
    std::vector<Object> out;
    for (const auto& x : c_.objects(n))
      for (std::size_t j = 0; j < over_.size(); ++j)
        for (const auto& s : homs_up_to_automorphism(c_, over_.atoms[j], x, false))
          out.push_back(normalize({x, static_cast<int>(j), s}));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    detail::sort_by_size(*this, out);
    return out;
  }

  std::vector<Morphism> homs(const Object& x, const Object& y) const {
    std::vector<Morphism> out;
    if (x.index != y.index) return out;
    for (auto& h : c_.homs(x.object, y.object))
      if (c_.compose(h, x.structure) == y.structure) out.push_back({x, y, std::move(h)});
    return out;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target == g.source)) throw ValidationError("slice morphisms do not compose");
    return {f.source, g.target, c_.compose(g.map, f.map)};
  }
  Morphism identity(const Object& x) const { return {x, x, c_.identity(x.object)}; }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  bool is_iso(const Morphism& f) const { return c_.is_iso(f.map); }
  bool isomorphic(const Object& x, const Object& y) const { return normalize(x) == normalize(y); }
  int size(const Object& x) const { return c_.size(x.object); }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const {
    auto out = lift(c_.amalgamate(b.map, c.map), b, c);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const {
    return lift(c_.amalgamate_some(b.map, c.map, limit), b, c);
  }

  std::vector<Object> initial_set() const {
    std::vector<Object> out;
    for (std::size_t j = 0; j < over_.size(); ++j)
      out.push_back(normalize({over_.atoms[j], static_cast<int>(j), c_.identity(over_.atoms[j])}));
    return out;
  }

 private:
  // Normal form and the automorphism carrying x to it.
  std::pair<Object, typename C::Morphism> normalize_with(const Object& x) const {
    std::pair<Object, typename C::Morphism> best{x, c_.identity(x.object)};
    for (const auto& a : automorphisms(c_, x.object)) {
      Object y{x.object, x.index, c_.compose(a, x.structure)};
      if (y < best.first) best = {std::move(y), a};
    }
    return best;
  }

  template <class Amalgams>
  std::vector<AmalgamOf<Object, Morphism>> lift(Amalgams ams, const Morphism& b, const Morphism& c) const {
    std::vector<AmalgamOf<Object, Morphism>> out;
    for (auto& a : ams) {
      Object d{a.apex, b.target.index, c_.compose(a.left, b.target.structure)};
      auto [nd, alpha] = normalize_with(d);
      out.push_back({nd, {b.target, nd, c_.compose(alpha, a.left)}, {c.target, nd, c_.compose(alpha, a.right)}});
    }
    return out;
  }

  C c_;
  BObject<C> over_;
};

template <ACategory C>
void to_json(Json& j, const SliceObject<C>& x) {
  j = Json{{"object", x.object}, {"index", x.index}, {"structure", x.structure}};
}

template <ACategory C>
void to_json(Json& j, const SliceMorphism<C>& f) {
  j = Json{{"source", f.source}, {"target", f.target}, {"map", f.map}};
}

/// The atoms appearing in X^k for k <= power, with everything else inherited
/// from the base. Amalgams are taken in the base; for a generated subcategory
/// they are atoms of some power of X, possibly beyond the bound.
template <ACategory C>
class GeneratedCategory {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  GeneratedCategory(C base, const BObject<C>& x, int power) : c_(std::move(base)) {
    BCategory<C> b(c_);
    BObject<C> p = b.final_object();
    std::set<Object> seen(p.atoms.begin(), p.atoms.end());
    for (int k = 1; k <= power; ++k) {
      p = b.product(p, x).object;
      seen.insert(p.atoms.begin(), p.atoms.end());
    }
    atoms_.assign(seen.begin(), seen.end());
    detail::sort_by_size(c_, atoms_);
  }

  const std::vector<Object>& generated_atoms() const noexcept { return atoms_; }
  bool contains(const Object& x) const { return std::find(atoms_.begin(), atoms_.end(), x) != atoms_.end(); }

  std::vector<Object> objects(int n) const {
    std::vector<Object> out;
    for (const auto& x : atoms_)
      if (c_.size(x) <= n) out.push_back(x);
    return out;
  }
  std::vector<Morphism> homs(const Object& x, const Object& y) const { return c_.homs(x, y); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return c_.compose(g, f); }
  Morphism identity(const Object& x) const { return c_.identity(x); }
  Object source(const Morphism& f) const { return c_.source(f); }
  Object target(const Morphism& f) const { return c_.target(f); }
  bool is_iso(const Morphism& f) const { return c_.is_iso(f); }
  bool isomorphic(const Object& x, const Object& y) const { return c_.isomorphic(x, y); }
  int size(const Object& x) const { return c_.size(x); }
  std::vector<AmalgamOf<Object, Morphism>> amalgamate(const Morphism& b, const Morphism& c) const {
    return c_.amalgamate(b, c);
  }
  std::vector<AmalgamOf<Object, Morphism>> amalgamate_some(const Morphism& b, const Morphism& c,
                                                           std::size_t limit) const {
    return c_.amalgamate_some(b, c, limit);
  }
  std::vector<Object> initial_set() const { return c_.initial_set(); }

 private:
  C c_;
  std::vector<Object> atoms_;
};

}  // namespace fraisse

template <class... Ts>
struct nlohmann::adl_serializer<std::variant<Ts...>> {
  static void to_json(nlohmann::json& j, const std::variant<Ts...>& v) {
    j = nlohmann::json{{"summand", v.index()}};
    std::visit([&](const auto& x) { j["value"] = x; }, v);
  }
};
