#include "fraisse/gset_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fraisse/bcat_quotients.hpp"
#include "fraisse/error.hpp"

namespace fraisse {

GSet set_level(const TransitiveB& b, const TransitiveB::Object& x) {
  const auto& cat = b.base();
  std::vector<GSet> parts;
  for (const auto& a : x.atoms) parts.push_back(coset_space(cat.group_ptr(), cat.subgroup(a)));
  if (parts.empty()) {
    GSet empty{cat.group_ptr(), 0, {}};
    empty.action.assign(cat.group().order(), {});
    return empty;
  }
  return disjoint_union(parts);
}

namespace {

std::vector<int> offsets(const TransitiveB& b, const TransitiveB::Object& x) {
  std::vector<int> out{0};
  for (const auto& a : x.atoms) out.push_back(out.back() + b.base().size(a));
  return out;
}

// Points of the atoms in `subset` of the square, as pairs of points of X.
std::set<std::pair<int, int>> pairs_of(const TransitiveB& b, const TransitiveB::FiberProduct& sq,
                                       const std::vector<int>& subset) {
  auto l = set_level(b, sq.left);
  auto r = set_level(b, sq.right);
  auto off = offsets(b, sq.object);
  std::set<std::pair<int, int>> out;
  for (int k : subset)
    for (int p = off[k]; p < off[k + 1]; ++p) out.emplace(l[p], r[p]);
  return out;
}

bool injective(const std::vector<int>& f) {
  std::set<int> s(f.begin(), f.end());
  return s.size() == f.size();
}

// Same partition of the domain.
bool same_kernel(const std::vector<int>& f, const std::vector<int>& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if ((f[i] == f[j]) != (g[i] == g[j])) return false;
  return true;
}

}  // namespace

std::vector<int> set_level(const TransitiveB& b, const TransitiveB::Morphism& f) {
  const auto& cat = b.base();
  auto src = offsets(b, f.source);
  auto tgt = offsets(b, f.target);
  std::vector<int> out(src.back());
  for (std::size_t i = 0; i < f.source.size(); ++i) {
    auto m = cat.point_map(f.components[i]);
    for (std::size_t p = 0; p < m.size(); ++p) out[src[i] + p] = tgt[f.index[i]] + m[p];
  }
  return out;
}

TransitiveB::Relation relation_from_pairs(const TransitiveB& b, const TransitiveB::Object& x,
                                          const std::vector<std::pair<int, int>>& pairs) {
  std::set<std::pair<int, int>> want(pairs.begin(), pairs.end());
  auto sq = b.product(x, x);
  auto off = offsets(b, sq.object);
  auto l = set_level(b, sq.left);
  auto r = set_level(b, sq.right);
  std::vector<int> subset;
  for (std::size_t k = 0; k + 1 < off.size(); ++k) {
    int inside = 0;
    for (int p = off[k]; p < off[k + 1]; ++p) inside += want.contains({l[p], r[p]});
    if (inside == off[k + 1] - off[k])
      subset.push_back(static_cast<int>(k));
    else if (inside != 0)
      throw ValidationError("pairs are not a union of orbits");
  }
  return b.relation(x, subset);
}

TransitiveB::Relation coset_relation(const TransitiveB& b, const Subgroup& h) {
  const auto& cat = b.base();
  const auto regular = cat.object_of(trivial_subgroup());
  const auto& g = cat.group();
  std::vector<std::pair<int, int>> pairs;
  // On G/1 the point of g is coset_of(g).
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    for (int y : h) pairs.emplace_back(cat.coset_of(regular, x), cat.coset_of(regular, g.mul(x, y)));
  return relation_from_pairs(b, b.atom(regular), pairs);
}

AxiomReport oracle_agreement(const TransitiveB& b, const SuiteBounds& bounds) {
  auto objects = b.objects(bounds.max_size, bounds.max_atoms);
  AxiomReport report;

  // Fiber products and kernel pairs.
  {
    Json witness;
    std::map<TransitiveB::Object, GSet> cache;
    auto level = [&](const TransitiveB::Object& x) -> const GSet& {
      auto it = cache.find(x);
      if (it == cache.end()) it = cache.emplace(x, set_level(b, x)).first;
      return it->second;
    };
    // Bijective on points with equivariant legs, hence an isomorphism over X and Y.
    auto check = [&](const TransitiveB::Morphism& f, const TransitiveB::Morphism& g) {
      auto fp = b.fiber_product(f, g);
      auto sf = set_level(b, f), sg = set_level(b, g);
      const auto& x = level(f.source);
      const auto& y = level(g.source);
      const auto& p = level(fp.object);
      std::set<std::pair<int, int>> want;
      for (int i = 0; i < x.points; ++i)
        for (int j = 0; j < y.points; ++j)
          if (sf[i] == sg[j]) want.emplace(i, j);
      auto l = set_level(b, fp.left), r = set_level(b, fp.right);
      std::set<std::pair<int, int>> got;
      for (int q = 0; q < p.points; ++q) got.emplace(l[q], r[q]);
      bool ok = got == want && static_cast<int>(got.size()) == p.points && is_equivariant(p, x, l) &&
                is_equivariant(p, y, r);
      if (!ok) witness = {{"f", f}, {"g", g}};
      return ok;
    };
    bool ok = true;
    for (const auto& z : objects)
      for (const auto& x : objects)
        for (const auto& f : b.homs(x, z))
          for (const auto& y : objects)
            for (const auto& g : b.homs(y, z))
              if (ok) ok = check(f, g);
    report.results.push_back(ok ? detail::passed("fiber_product") : detail::failed("fiber_product", witness));

    ok = true;
    for (const auto& x : objects)
      for (const auto& y : objects)
        for (const auto& f : b.homs(x, y)) {
          if (!ok) break;
          auto kp = b.kernel_pair(f);
          auto sf = set_level(b, f);
          std::set<std::pair<int, int>> want;
          for (std::size_t i = 0; i < sf.size(); ++i)
            for (std::size_t j = 0; j < sf.size(); ++j)
              if (sf[i] == sf[j]) want.emplace(i, j);
          if (pairs_of(b, kp.square, kp.subset) != want) {
            ok = false;
            witness = {{"f", f}};
          }
        }
    report.results.push_back(ok ? detail::passed("kernel_pair") : detail::failed("kernel_pair", witness));
  }

  // Images.
  {
    bool ok = true;
    Json witness;
    for (const auto& x : objects)
      for (const auto& y : objects)
        for (const auto& f : b.homs(x, y)) {
          if (!ok) break;
          auto im = b.image(f);
          auto inc = set_level(b, im.sub.inclusion);
          auto sf = set_level(b, f);
          std::set<int> want(sf.begin(), sf.end()), got(inc.begin(), inc.end());
          auto core = set_level(b, im.corestriction);
          bool factors = true;
          for (std::size_t p = 0; p < sf.size(); ++p) factors = factors && inc[core[p]] == sf[p];
          if (!injective(inc) || want != got || !factors) {
            ok = false;
            witness = {{"f", f}};
          }
        }
    report.results.push_back(ok ? detail::passed("image") : detail::failed("image", witness));
  }

  // Coequalizers.
  {
    bool ok = true;
    Json witness;
    for (const auto& x : objects)
      for (const auto& y : objects) {
        auto hs = b.homs(x, y);
        if (hs.empty()) continue;
        auto quotients = quotients_of(b, y);
        for (std::size_t i = 0; i < hs.size() && ok; ++i)
          for (std::size_t j = i; j < hs.size() && ok; ++j) {
            auto q = coequalizer(b, hs[i], hs[j], quotients);
            auto sq = set_level(b, q);
            auto ys = set_level(b, y);
            auto oracle = coequalizer(ys, set_level(b, hs[i]), set_level(b, hs[j]));
            auto qs = set_level(b, q.target);
            std::set<int> hit(sq.begin(), sq.end());
            if (!same_kernel(sq, oracle.map) || static_cast<int>(hit.size()) != qs.points ||
                !is_equivariant(ys, qs, sq)) {
              ok = false;
              witness = {{"f", hs[i]}, {"g", hs[j]}};
            }
          }
      }
    report.results.push_back(ok ? detail::passed("coequalizer") : detail::failed("coequalizer", witness));
  }
  return report;
}

AxiomResult double_coset_identity(const GroupPtr& g) {
  auto subs = all_subgroups(*g);
  for (const auto& u : subs)
    for (const auto& v : subs) {
      auto orbits = product(coset_space(g, u), coset_space(g, v)).orbits().size();
      if (orbits != double_coset_count(*g, u, v))
        return detail::failed("double_coset_identity", {{"u", u}, {"v", v}, {"orbits", orbits}});
    }
  return detail::passed("double_coset_identity");
}

EffectivityReport effectivity_report(const TransitiveB& b, const SuiteBounds& bounds) {
  const auto& cat = b.base();
  EffectivityReport out;
  for (const auto& x : b.objects(bounds.max_size, bounds.max_atoms)) {
    if (x.size() == 0) continue;
    for (const auto& r : equivalence_relations(b, x)) {
      ++out.relations;
      auto q = quotient(b, r);
      auto kp = b.kernel_pair(q).subset;

      // Set-level quotient, reflected orbit by orbit.
      auto xs = set_level(b, x);
      std::vector<int> f, g;
      for (const auto& [p, p2] : pairs_of(b, r.square, r.subset)) {
        f.push_back(p);
        g.push_back(p2);
      }
      auto sq = coequalizer(xs, f, g);
      std::multiset<int> reflected, got;
      for (const auto& o : sq.object.orbits())
        reflected.insert(cat.object_of(cat.stabilizer_class().reflector(sq.object.stabilizer(o.front()))).cls);
      for (const auto& a : q.target.atoms) got.insert(a.cls);
      if (reflected != got) out.reflected_quotients_agree = false;

      if (kp != r.subset) {
        ++out.ineffective;
        out.witnesses.push_back({{"carrier", x},
                                 {"relation", r.subset},
                                 {"square_atoms", r.square.object.size()},
                                 {"quotient", q.target},
                                 {"kernel_pair", kp},
                                 {"relation_points", f.size()},
                                 {"kernel_pair_points", pairs_of(b, r.square, kp).size()}});
      }
    }
  }
  return out;
}

void to_json(Json& j, const EffectivityReport& r) {
  j = Json{{"relations", r.relations},
           {"ineffective", r.ineffective},
           {"all_effective", r.all_effective()},
           {"reflected_quotients_agree", r.reflected_quotients_agree},
           {"witnesses", r.witnesses}};
}

AxiomReport fiber_functor_check(const TransitiveB& b, const SuiteBounds& bounds) {
  AxiomReport report;
  const int one = set_level(b, b.final_object()).points;
  report.results.push_back(one == 1 ? detail::passed("final_object_is_point")
                                    : detail::failed("final_object_is_point", {{"points", one}}));
  for (auto& r : oracle_agreement(b, bounds).results) {
    r.name = "preserves_" + r.name;
    report.results.push_back(std::move(r));
  }
  bool ok = true;
  Json witness;
  auto objects = b.objects(bounds.max_size, bounds.max_atoms);
  for (const auto& x : objects)
    for (const auto& y : objects)
      for (const auto& f : b.homs(x, y)) {
        if (!ok) break;
        auto sf = set_level(b, f);
        std::set<int> hit(sf.begin(), sf.end());
        const bool bijective = injective(sf) && static_cast<int>(hit.size()) == set_level(b, y).points;
        if (bijective != b.is_iso(f)) {
          ok = false;
          witness = {{"f", f}, {"bijective", bijective}};
        }
      }
  report.results.push_back(ok ? detail::passed("conservative") : detail::failed("conservative", witness));
  return report;
}

}  // namespace fraisse
