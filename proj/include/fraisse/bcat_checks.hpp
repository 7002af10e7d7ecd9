#pragma once

#include <map>
#include <string>
#include <vector>

#include "fraisse/amalgam.hpp"
#include "fraisse/bcat.hpp"
#include "fraisse/bcat_quotients.hpp"
#include "fraisse/json_io.hpp"

namespace fraisse {

struct AxiomResult {
  std::string name;
  bool pass = true;
  Json witness;  // null when passing
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

inline void to_json(Json& j, const AxiomReport& report) {
  j = Json{{"pass", report.pass()}, {"axioms", Json::object()}};
  for (const auto& r : report.results) {
    Json entry{{"pass", r.pass}};
    if (!r.pass) entry["witness"] = r.witness;
    j["axioms"][r.name] = std::move(entry);
  }
}

/// Objects with at most max_atoms atoms of size at most max_size are checked;
/// cancellation probes range over objects with at most probe_atoms atoms of
/// size at most probe_size.
struct SuiteBounds {
  int max_size = 2;
  int max_atoms = 2;
  int probe_size = 3;
  int probe_atoms = 2;
};

namespace detail {

template <ACategory C>
struct Universe {
  const BCategory<C>& cat;
  std::vector<BObject<C>> objects;
  std::vector<BObject<C>> atoms;
  std::vector<BObject<C>> probes;

  Universe(const BCategory<C>& c, const SuiteBounds& b)
      : cat(c), objects(c.objects(b.max_size, b.max_atoms)), probes(c.objects(b.probe_size, b.probe_atoms)) {
    for (const auto& o : objects)
      if (o.size() == 1) atoms.push_back(o);
  }

  template <class F>
  bool each_hom(const std::vector<BObject<C>>& from, const std::vector<BObject<C>>& to, F&& f) const {
    for (const auto& x : from)
      for (const auto& y : to)
        for (const auto& h : cat.homs(x, y))
          if (!f(h)) return false;
    return true;
  }
};

inline AxiomResult failed(std::string name, Json witness) { return {std::move(name), false, std::move(witness)}; }
inline AxiomResult passed(std::string name) { return {std::move(name), true, nullptr}; }

template <ACategory C>
bool mono_by_cancellation(const Universe<C>& u, const BMorphism<C>& f) {
  for (const auto& w : u.probes) {
    std::map<BMorphism<C>, BMorphism<C>> seen;
    for (const auto& g : u.cat.homs(w, f.source)) {
      auto [it, fresh] = seen.emplace(u.cat.compose(f, g), g);
      if (!fresh) return false;
    }
  }
  return true;
}

template <ACategory C>
bool epi_by_cancellation(const Universe<C>& u, const BMorphism<C>& f) {
  for (const auto& z : u.probes) {
    std::map<BMorphism<C>, BMorphism<C>> seen;
    for (const auto& g : u.cat.homs(f.target, z)) {
      auto [it, fresh] = seen.emplace(u.cat.compose(g, f), g);
      if (!fresh) return false;
    }
  }
  return true;
}

/// Mono in the sense of X -> X x_Y X being an isomorphism.
template <ACategory C>
bool mono_by_diagonal(const BCategory<C>& cat, const BMorphism<C>& f) {
  auto k = cat.fiber_product(f, f);
  auto id = cat.identity(f.source);
  auto ms = cat.mediators(k, id, id);
  return ms.size() == 1 && cat.is_iso(ms.front());
}

}  // namespace detail

template <ACategory C>
AxiomResult check_category_laws(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    if (!cat.is_valid(f) || !(cat.compose(cat.identity(f.target), f) == f) ||
        !(cat.compose(f, cat.identity(f.source)) == f)) {
      w = {{"identity_law", f}};
      return false;
    }
    // Associativity on atomic sources; maps out of sums are copairs.
    if (f.source.size() != 1) return true;
    for (const auto& z : u.objects) {
      for (const auto& g : cat.homs(f.target, z)) {
        auto gf = cat.compose(g, f);
        for (const auto& t : u.atoms)
          for (const auto& h : cat.homs(z, t))
            if (!(cat.compose(h, gf) == cat.compose(cat.compose(h, g), f))) {
              w = {{"f", f}, {"g", g}, {"h", h}};
              return false;
            }
      }
    }
    return true;
  });
  return ok ? detail::passed("category_laws") : detail::failed("category_laws", w);
}

template <ACategory C>
AxiomResult check_coproducts(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x : u.objects) {
    if (!(cat.coproduct(x, {}).object == x)) return detail::failed("coproducts", {{"unit", x}});
    for (const auto& y : u.objects) {
      if (static_cast<int>(x.size() + y.size()) > b.max_atoms) continue;
      auto cp = cat.coproduct(x, y);
      if (!cat.is_mono(cp.left) || !cat.is_mono(cp.right))
        return detail::failed("coproducts", {{"x", x}, {"y", y}, {"reason", "injection not mono"}});
      for (const auto& z : u.atoms) {
        auto hs = cat.homs(cp.object, z);
        for (const auto& f : cat.homs(x, z)) {
          for (const auto& g : cat.homs(y, z)) {
            int count = 0;
            for (const auto& h : hs) count += cat.compose(h, cp.left) == f && cat.compose(h, cp.right) == g;
            if (count != 1) return detail::failed("coproducts", {{"f", f}, {"g", g}, {"mediators", count}});
          }
        }
      }
    }
  }
  return detail::passed("coproducts");
}

template <ACategory C>
AxiomResult check_map_to_empty(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x : u.objects)
    if (!x.empty() && !cat.homs(x, {}).empty()) return detail::failed("map_to_empty", {{"x", x}});
  return detail::passed("map_to_empty");
}

template <ACategory C>
AxiomResult check_final_object(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  auto one = cat.final_object();
  for (const auto& x : u.objects) {
    auto hs = cat.homs(x, one);
    if (hs.size() != 1 || !(hs.front() == cat.to_final(x)))
      return detail::failed("final_object", {{"x", x}, {"maps", hs.size()}});
  }
  return detail::passed("final_object");
}

/// Every map out of a sum is the copairing of its restrictions, and each
/// atom lands in exactly one summand.
template <ACategory C>
AxiomResult check_factorization(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    if (f.source.empty()) return true;
    BMorphism<C> rebuilt;
    bool first = true;
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      auto inc = cat.subobject(f.source, {static_cast<int>(i)}).inclusion;
      auto fi = cat.compose(f, inc);
      if (fi.index.size() != 1) {
        w = {{"f", f}};
        return false;
      }
      rebuilt = first ? fi : cat.copair(rebuilt, fi);
      first = false;
    }
    if (!(rebuilt == f) ||
        !(cat.make(f.source, f.target, cat.orbit_map(f), f.components) == f)) {
      w = {{"f", f}};
      return false;
    }
    return true;
  });
  return ok ? detail::passed("factorization") : detail::failed("factorization", w);
}

template <ACategory C>
AxiomResult check_mono_epi_classification(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    const bool mono = detail::mono_by_cancellation(u, f);
    const bool epi = detail::epi_by_cancellation(u, f);
    if (mono != cat.is_mono(f) || epi != cat.is_epi(f)) {
      w = {{"f", f}, {"mono_by_cancellation", mono}, {"is_mono", cat.is_mono(f)},
           {"epi_by_cancellation", epi}, {"is_epi", cat.is_epi(f)}};
      return false;
    }
    return true;
  });
  return ok ? detail::passed("mono_epi_classification") : detail::failed("mono_epi_classification", w);
}

template <ACategory C>
AxiomResult check_balanced(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    if (!(cat.is_mono(f) && cat.is_epi(f))) return true;
    auto g = cat.inverse(f);
    if (!g || !(cat.compose(*g, f) == cat.identity(f.source)) || !(cat.compose(f, *g) == cat.identity(f.target))) {
      w = {{"f", f}};
      return false;
    }
    return true;
  });
  return ok ? detail::passed("balanced") : detail::failed("balanced", w);
}

/// f = q o p^-1 through the graph of f inside X x Y.
template <ACategory C>
AxiomResult check_hom_finite(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    auto xy = cat.product(f.source, f.target);
    auto gamma = cat.image(cat.mediator(xy, cat.identity(f.source), f));
    auto p_inv = cat.inverse(gamma.corestriction);
    if (!p_inv) {
      w = {{"f", f}, {"reason", "projection from the graph is not invertible"}};
      return false;
    }
    auto q = cat.compose(xy.right, gamma.sub.inclusion);
    if (!(cat.compose(q, *p_inv) == f)) {
      w = {{"f", f}};
      return false;
    }
    return true;
  });
  return ok ? detail::passed("hom_finite") : detail::failed("hom_finite", w);
}

template <ACategory C>
AxiomResult check_ei_atom(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x : u.atoms)
    for (const auto& f : cat.homs(x, x))
      if (!cat.is_iso(f)) return detail::failed("ei_atom", {{"f", f}});
  return detail::passed("ei_atom");
}

template <ACategory C>
AxiomResult check_epi_atom(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.atoms, u.atoms, [&](const auto& f) {
    if (cat.is_epi(f) && detail::epi_by_cancellation(u, f)) return true;
    w = {{"f", f}};
    return false;
  });
  return ok ? detail::passed("epi_atom") : detail::failed("epi_atom", w);
}

/// A map of atoms whose diagonal X -> X x_Y X is an isomorphism must be an
/// isomorphism.
template <ACategory C>
AxiomResult check_mono_of_atoms_iso(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.atoms, u.atoms, [&](const auto& f) {
    if (cat.is_iso(f) || !detail::mono_by_diagonal(cat, f)) return true;
    w = {{"f", f}};
    return false;
  });
  return ok ? detail::passed("mono_of_atoms_iso") : detail::failed("mono_of_atoms_iso", w);
}

template <ACategory C>
AxiomResult check_subobjects(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x : u.objects) {
    auto subs = cat.subobjects(x);
    if (subs.size() != (std::size_t{1} << x.size())) return detail::failed("subobjects", {{"x", x}});
    for (const auto& w : u.objects) {
      for (const auto& m : cat.homs(w, x)) {
        if (!cat.is_mono(m)) continue;
        auto im = cat.image(m);
        if (std::find(subs.begin(), subs.end(), im.sub.subset) == subs.end() || !cat.is_iso(im.corestriction))
          return detail::failed("subobjects", {{"mono", m}});
      }
    }
  }
  return detail::passed("subobjects");
}

template <ACategory C>
AxiomResult check_image(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    auto im = cat.image(f);
    const bool full = im.sub.subset.size() == f.target.size();
    if (!cat.is_mono(im.sub.inclusion) || !cat.is_epi(im.corestriction) ||
        !(cat.compose(im.sub.inclusion, im.corestriction) == f) || full != cat.is_epi(f)) {
      w = {{"f", f}};
      return false;
    }
    return true;
  });
  return ok ? detail::passed("image") : detail::failed("image", w);
}

template <ACategory C>
AxiomResult check_mono_diagonal(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    if (cat.is_mono(f) == detail::mono_by_diagonal(cat, f)) return true;
    w = {{"f", f}, {"is_mono", cat.is_mono(f)}};
    return false;
  });
  return ok ? detail::passed("mono_diagonal") : detail::failed("mono_diagonal", w);
}

/// Over atoms X, Y, Z: the square commutes and every cone from a probe has
/// exactly one mediator.
template <ACategory C>
AxiomResult check_fiber_product_universal(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& z : u.atoms) {
    for (const auto& x : u.atoms) {
      for (const auto& f : cat.homs(x, z)) {
        for (const auto& y : u.atoms) {
          for (const auto& g : cat.homs(y, z)) {
            auto p = cat.fiber_product(f, g);
            if (!(cat.compose(f, p.left) == cat.compose(g, p.right)))
              return detail::failed("fiber_product_universal", {{"f", f}, {"g", g}, {"reason", "not commutative"}});
            // Cones from a sum are copairs of cones from its atoms.
            for (const auto& w : u.probes) {
              if (w.size() != 1) continue;
              auto vs = cat.homs(w, y);
              for (const auto& uu : cat.homs(w, x)) {
                auto fu = cat.compose(f, uu);
                for (const auto& v : vs) {
                  if (!(fu == cat.compose(g, v))) continue;
                  auto n = cat.mediators(p, uu, v).size();
                  if (n != 1)
                    return detail::failed("fiber_product_universal",
                                          {{"f", f}, {"g", g}, {"u", uu}, {"v", v}, {"mediators", n}});
                }
              }
            }
          }
        }
      }
    }
  }
  return detail::passed("fiber_product_universal");
}

template <ACategory C>
AxiomResult check_fiber_distributes(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& z : u.atoms)
    for (const auto& x1 : u.atoms)
      for (const auto& f1 : cat.homs(x1, z))
        for (const auto& x2 : u.atoms)
          for (const auto& f2 : cat.homs(x2, z))
            for (const auto& y : u.atoms)
              for (const auto& g : cat.homs(y, z)) {
                auto whole = cat.fiber_product(cat.copair(f1, f2), g).object;
                auto parts = cat.coproduct(cat.fiber_product(f1, g).object, cat.fiber_product(f2, g).object).object;
                if (!(whole == parts))
                  return detail::failed("fiber_distributes", {{"f1", f1}, {"f2", f2}, {"g", g}});
              }
  return detail::passed("fiber_distributes");
}

template <ACategory C>
AxiomResult check_monic_sum(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  std::vector<BMorphism<C>> maps;
  u.each_hom(u.atoms, u.objects, [&](const auto& f) {
    if (static_cast<int>(f.target.size()) * 2 <= b.max_atoms || f.target.size() <= 1) maps.push_back(f);
    return true;
  });
  for (const auto& f : maps)
    for (const auto& g : maps) {
      auto s = cat.sum(f, g);
      if (cat.is_mono(s) != (cat.is_mono(f) && cat.is_mono(g)) ||
          cat.is_epi(s) != (cat.is_epi(f) && cat.is_epi(g)))
        return detail::failed("monic_sum", {{"f", f}, {"g", g}});
    }
  return detail::passed("monic_sum");
}

template <ACategory C>
AxiomResult check_orbit_functor(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  Json w;
  bool ok = u.each_hom(u.objects, u.objects, [&](const auto& f) {
    auto a = cat.orbit_map(f);
    if (cat.orbit_map(cat.identity(f.source)).size() != f.source.size()) return false;
    std::vector<char> hit(f.target.size(), 0);
    for (int j : a) hit[j] = 1;
    const bool surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h; });
    if (surjective != cat.is_epi(f)) {
      w = {{"f", f}, {"reason", "epi vs surjective orbit map"}};
      return false;
    }
    // mono iff the diagonal is surjective on orbits
    auto k = cat.fiber_product(f, f);
    auto id = cat.identity(f.source);
    auto d = cat.mediator(k, id, id);
    std::vector<char> dhit(k.object.size(), 0);
    for (int j : d.index) dhit[j] = 1;
    const bool dsurj = std::all_of(dhit.begin(), dhit.end(), [](char h) { return h; });
    if (dsurj != cat.is_mono(f)) {
      w = {{"f", f}, {"reason", "mono vs diagonal orbit map"}};
      return false;
    }
    for (const auto& z : u.atoms)
      for (const auto& g : cat.homs(f.target, z)) {
        auto ga = cat.orbit_map(g);
        auto gfa = cat.orbit_map(cat.compose(g, f));
        for (std::size_t i = 0; i < a.size(); ++i)
          if (gfa[i] != ga[a[i]]) {
            w = {{"f", f}, {"g", g}, {"reason", "not functorial"}};
            return false;
          }
      }
    return true;
  });
  return ok ? detail::passed("orbit_functor") : detail::failed("orbit_functor", w);
}

/// The A-category test at the bound agrees with the mono-of-atoms axiom.
template <ACategory C>
AxiomResult check_theorem_ab(const BCategory<C>& cat, const SuiteBounds& b) {
  const bool acat = is_A_category(cat.base(), b.max_size).pass();
  const bool axiom = check_mono_of_atoms_iso(cat, b).pass;
  if (acat == axiom) return detail::passed("theorem_ab");
  return detail::failed("theorem_ab", {{"is_A_category", acat}, {"mono_of_atoms_iso", axiom}});
}

template <ACategory C>
AxiomReport verify_axioms(const BCategory<C>& cat, const SuiteBounds& b) {
  AxiomReport r;
  r.results.push_back(check_category_laws(cat, b));
  r.results.push_back(check_coproducts(cat, b));
  r.results.push_back(check_map_to_empty(cat, b));
  r.results.push_back(check_final_object(cat, b));
  r.results.push_back(check_factorization(cat, b));
  r.results.push_back(check_mono_epi_classification(cat, b));
  r.results.push_back(check_balanced(cat, b));
  r.results.push_back(check_hom_finite(cat, b));
  r.results.push_back(check_ei_atom(cat, b));
  r.results.push_back(check_epi_atom(cat, b));
  r.results.push_back(check_mono_of_atoms_iso(cat, b));
  r.results.push_back(check_subobjects(cat, b));
  r.results.push_back(check_image(cat, b));
  r.results.push_back(check_mono_diagonal(cat, b));
  r.results.push_back(check_fiber_product_universal(cat, b));
  r.results.push_back(check_fiber_distributes(cat, b));
  r.results.push_back(check_monic_sum(cat, b));
  r.results.push_back(check_orbit_functor(cat, b));
  r.results.push_back(check_theorem_ab(cat, b));
  return r;
}

template <ACategory C>
struct NondegeneracyWitness {
  std::optional<BObject<C>> final_object;  // set when 1 is not atomic
  std::optional<BMorphism<C>> f;            // otherwise: atom maps with empty fiber product
  std::optional<BMorphism<C>> g;
};

/// 1 is atomic and atom maps X -> Z <- Y (atoms of size <= n_max) have a
/// nonempty fiber product.
template <ACategory C>
Verdict<NondegeneracyWitness<C>> is_nondegenerate(const BCategory<C>& cat, int n_max) {
  auto one = cat.final_object();
  if (one.size() != 1) return Verdict<NondegeneracyWitness<C>>::fail({one, std::nullopt, std::nullopt});
  auto ap = has_amalgamation_property(cat.base(), n_max);
  if (ap.pass()) return Verdict<NondegeneracyWitness<C>>::ok();
  const auto& [b, c] = *ap.counterexample;
  const auto& a = cat.base();
  auto f = cat.make(cat.atom(a.target(b)), cat.atom(a.source(b)), {0}, {b});
  auto g = cat.make(cat.atom(a.target(c)), cat.atom(a.source(c)), {0}, {c});
  return Verdict<NondegeneracyWitness<C>>::fail({std::nullopt, f, g});
}

/// Condition (a): fiber products of atom maps are nonempty.
template <ACategory C>
AxiomResult check_atom_fibers_nonempty(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& z : u.atoms)
    for (const auto& x : u.atoms)
      for (const auto& f : cat.homs(x, z))
        for (const auto& y : u.atoms)
          for (const auto& g : cat.homs(y, z))
            if (cat.fiber_product_empty(f, g))
              return detail::failed("atom_fibers_nonempty", {{"f", f}, {"g", g}});
  return detail::passed("atom_fibers_nonempty");
}

/// Condition (b): base changes of epis between atoms are epi.
template <ACategory C>
AxiomResult check_base_change_epi(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& z : u.atoms)
    for (const auto& x : u.atoms)
      for (const auto& f : cat.homs(x, z)) {
        if (!cat.is_epi(f)) continue;
        for (const auto& y : u.atoms)
          for (const auto& g : cat.homs(y, z))
            if (!cat.is_epi(cat.fiber_product(f, g).right))
              return detail::failed("base_change_epi", {{"epi", f}, {"along", g}});
      }
  return detail::passed("base_change_epi");
}

/// Condition (c): products of epis between atoms are epi.
template <ACategory C>
AxiomResult check_product_epi(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x1 : u.atoms)
    for (const auto& y1 : u.atoms)
      for (const auto& f : cat.homs(x1, y1)) {
        if (!cat.is_epi(f)) continue;
        for (const auto& x2 : u.atoms)
          for (const auto& y2 : u.atoms)
            for (const auto& g : cat.homs(x2, y2)) {
              if (!cat.is_epi(g)) continue;
              auto px = cat.product(x1, x2);
              auto py = cat.product(y1, y2);
              auto fg = cat.mediator(py, cat.compose(f, px.left), cat.compose(g, px.right));
              if (!cat.is_epi(fg)) return detail::failed("product_epi", {{"f", f}, {"g", g}});
            }
      }
  return detail::passed("product_epi");
}

/// Conditions (a), (b), (c) of the nondegeneracy criterion, checked
/// separately so that their agreement can be observed.
template <ACategory C>
AxiomReport nondegeneracy_conditions(const BCategory<C>& cat, const SuiteBounds& b) {
  AxiomReport r;
  r.results.push_back(check_atom_fibers_nonempty(cat, b));
  r.results.push_back(check_base_change_epi(cat, b));
  r.results.push_back(check_product_epi(cat, b));
  return r;
}

/// Base changes and products of epis between atoms are epi.
template <ACategory C>
AxiomResult check_epi_stability(const BCategory<C>& cat, const SuiteBounds& b) {
  for (auto r : {check_base_change_epi(cat, b), check_product_epi(cat, b)})
    if (!r.pass) return detail::failed("epi_stability", r.witness);
  return detail::passed("epi_stability");
}

/// For epis f, g out of a common object: f factors through g iff Eq(g) is
/// contained in Eq(f).
template <ACategory C>
AxiomResult check_factor_through(const BCategory<C>& cat, const SuiteBounds& b) {
  detail::Universe<C> u(cat, b);
  for (const auto& x : u.objects) {
    auto epis = epis_out_of(cat, x);
    std::vector<std::vector<int>> eq;
    for (const auto& e : epis) eq.push_back(cat.kernel_pair(e).subset);
    for (std::size_t i = 0; i < epis.size(); ++i)
      for (std::size_t j = 0; j < epis.size(); ++j) {
        const bool factors = !cat.factorizations(epis[i], epis[j]).empty();
        const bool contained = detail::subset_of(eq[j], eq[i]);
        if (factors != contained)
          return detail::failed("factor_through", {{"f", epis[i]}, {"g", epis[j]}, {"factors", factors}});
      }
  }
  return detail::passed("factor_through");
}

}  // namespace fraisse
