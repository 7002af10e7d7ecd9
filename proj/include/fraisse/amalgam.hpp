#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "fraisse/verdict.hpp"

namespace fraisse {

/// A cocone over a pre-amalgamation: apex D with legs B -> D and C -> D.
template <class Object, class Morphism>
struct AmalgamOf {
  Object apex;
  Morphism left;
  Morphism right;

  friend auto operator<=>(const AmalgamOf&, const AmalgamOf&) = default;
  friend bool operator==(const AmalgamOf&, const AmalgamOf&) = default;
};

/// What the generic algorithms need from an A-category.
///
/// Objects and morphisms are values with a total order. `objects(n)` lists
/// one representative per isomorphism class of size at most n, smallest
/// first. `amalgamate(b, c)` returns the amalgamation set of the span
/// (b, c) in a fixed canonical order; `amalgamate_some` may stop after
/// `limit` amalgams, in any order.
template <class C>
concept ACategory = requires(const C& cat, const typename C::Object& x, const typename C::Morphism& f,
                             int n, std::size_t limit) {
  { cat.objects(n) } -> std::same_as<std::vector<typename C::Object>>;
  { cat.homs(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.identity(x) } -> std::same_as<typename C::Morphism>;
  { cat.source(f) } -> std::convertible_to<typename C::Object>;
  { cat.target(f) } -> std::convertible_to<typename C::Object>;
  { cat.is_iso(f) } -> std::same_as<bool>;
  { cat.isomorphic(x, x) } -> std::same_as<bool>;
  { cat.size(x) } -> std::same_as<int>;
  { cat.amalgamate(f, f) } -> std::same_as<std::vector<AmalgamOf<typename C::Object, typename C::Morphism>>>;
  { cat.amalgamate_some(f, f, limit) } -> std::same_as<std::vector<AmalgamOf<typename C::Object, typename C::Morphism>>>;
  { cat.initial_set() } -> std::same_as<std::vector<typename C::Object>>;
};

template <class C>
using Amalgam = AmalgamOf<typename C::Object, typename C::Morphism>;

/// A span B <-b- A -c-> C.
template <class C>
struct PreAmalgamation {
  typename C::Morphism b;
  typename C::Morphism c;
};

template <ACategory C>
std::vector<Amalgam<C>> amalgamation_set(const C& cat, const typename C::Morphism& b,
                                         const typename C::Morphism& c) {
  return cat.amalgamate(b, c);
}

template <ACategory C>
std::vector<Amalgam<C>> self_amalgamations(const C& cat, const typename C::Morphism& f) {
  return cat.amalgamate(f, f);
}

template <ACategory C>
bool is_epimorphism_in_A(const C& cat, const typename C::Morphism& f) {
  return cat.amalgamate_some(f, f, 2).size() == 1;
}

template <ACategory C>
std::vector<typename C::Morphism> automorphisms(const C& cat, const typename C::Object& x) {
  auto homs = cat.homs(x, x);
  std::erase_if(homs, [&](const auto& f) { return !cat.is_iso(f); });
  return homs;
}

/// Morphisms x -> y, one per orbit of Aut(y) x Aut(x) acting by
/// f |-> alpha o f o beta. Smallest member of each orbit, increasing.
template <ACategory C>
std::vector<typename C::Morphism> homs_up_to_automorphism(const C& cat, const typename C::Object& x,
                                                          const typename C::Object& y,
                                                          bool act_on_source = true) {
  using M = typename C::Morphism;
  auto homs = cat.homs(x, y);
  std::sort(homs.begin(), homs.end());
  auto aut_y = automorphisms(cat, y);
  std::vector<M> aut_x = act_on_source ? automorphisms(cat, x) : std::vector<M>{cat.identity(x)};
  std::set<M> seen;
  std::vector<M> reps;
  for (const auto& f : homs) {
    if (seen.contains(f)) continue;
    reps.push_back(f);
    for (const auto& a : aut_y)
      for (const auto& b : aut_x) seen.insert(cat.compose(a, cat.compose(f, b)));
  }
  return reps;
}

template <class C>
struct AcatWitness {
  typename C::Morphism f;
};

/// Every non-isomorphism f : X -> Y with |Y| <= n_max must have a
/// self-amalgamation besides (id_Y, id_Y).
template <ACategory C>
Verdict<AcatWitness<C>> is_A_category(const C& cat, int n_max) {
  auto objs = cat.objects(n_max);
  for (const auto& y : objs) {
    for (const auto& x : objs) {
      if (cat.size(x) > cat.size(y)) continue;
      for (const auto& f : homs_up_to_automorphism(cat, x, y)) {
        if (cat.is_iso(f)) continue;
        if (cat.amalgamate_some(f, f, 2).size() < 2) return Verdict<AcatWitness<C>>::fail({f});
      }
    }
  }
  return Verdict<AcatWitness<C>>::ok();
}

/// Every span with |B|, |C| <= n_max has an amalgam. Spans are reduced
/// modulo automorphisms of A, B and C, and (b, c) is not tried again as (c, b).
template <ACategory C>
Verdict<PreAmalgamation<C>> has_amalgamation_property(const C& cat, int n_max) {
  auto objs = cat.objects(n_max);
  for (const auto& a : objs) {
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const auto& bo = objs[i];
      if (cat.size(bo) < cat.size(a)) continue;
      auto bs = homs_up_to_automorphism(cat, a, bo);
      if (bs.empty()) continue;
      for (std::size_t j = i; j < objs.size(); ++j) {
        const auto& co = objs[j];
        if (cat.size(co) < cat.size(a)) continue;
        auto cs = homs_up_to_automorphism(cat, a, co, false);
        for (const auto& b : bs)
          for (const auto& c : cs)
            if (cat.amalgamate_some(b, c, 1).empty()) return Verdict<PreAmalgamation<C>>::fail({b, c});
      }
    }
  }
  return Verdict<PreAmalgamation<C>>::ok();
}

template <class C>
struct JepWitness {
  typename C::Object x;
  typename C::Object y;
};

/// Every pair of objects of size <= n_max embeds into a common object.
template <ACategory C>
Verdict<JepWitness<C>> has_joint_embedding(const C& cat, int n_max) {
  auto objs = cat.objects(n_max);
  auto initial = cat.initial_set();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i; j < objs.size(); ++j) {
      bool joined = false;
      for (const auto& o : initial) {
        auto fx = cat.homs(o, objs[i]);
        auto fy = cat.homs(o, objs[j]);
        if (fx.empty() || fy.empty()) continue;
        if (!cat.amalgamate_some(fx.front(), fy.front(), 1).empty()) {
          joined = true;
          break;
        }
      }
      if (!joined) return Verdict<JepWitness<C>>::fail({objs[i], objs[j]});
    }
  }
  return Verdict<JepWitness<C>>::ok();
}

template <ACategory C>
std::vector<typename C::Object> initial_set(const C& cat) {
  return cat.initial_set();
}

}  // namespace fraisse
