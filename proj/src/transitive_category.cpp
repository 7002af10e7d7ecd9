#include "fraisse/transitive_category.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fraisse/error.hpp"

namespace fraisse {

TransitiveCategory::TransitiveCategory(StabilizerClass e) : e_(std::move(e)) {
  const auto& g = group();
  std::set<Subgroup> placed;
  for (const auto& u : e_.members()) {
    if (placed.contains(u)) continue;
    std::map<Subgroup, int> conj;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) conj.emplace(conjugate(g, u, x), x);
    ConjugacyClass c;
    c.rep = conj.begin()->first;
    const int to_rep = conj.begin()->second;
    for (const auto& [k, x] : conj) {
      c.conjugates.push_back(k);
      c.conjugators.push_back(g.mul(x, g.inv(to_rep)));
      placed.insert(k);
    }
    classes_.push_back(std::move(c));
  }
  std::stable_sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.rep.size() != b.rep.size() ? a.rep.size() < b.rep.size() : a.rep < b.rep;
  });
  for (const auto& c : classes_) {
    cosets_.push_back(left_cosets(g, c.rep));
    std::vector<int> of(g.order());
    for (std::size_t i = 0; i < cosets_.back().size(); ++i)
      for (int x : cosets_.back()[i]) of[x] = static_cast<int>(i);
    coset_of_.push_back(std::move(of));
    normalizers_.push_back(normalizer(g, c.rep));
  }
}

TransitiveObject TransitiveCategory::object_of(const Subgroup& u, int* by) const {
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const auto& c = classes_[k];
    if (c.rep.size() != u.size()) continue;
    auto it = std::lower_bound(c.conjugates.begin(), c.conjugates.end(), u);
    if (it != c.conjugates.end() && *it == u) {
      if (by) *by = c.conjugators[it - c.conjugates.begin()];
      return {static_cast<int>(k)};
    }
  }
  throw ValidationError("subgroup is not in the stabilizer class");
}

int TransitiveCategory::least_in_coset(int x, const Object& u) const {
  return cosets_.at(u.cls)[coset_of(u, x)].front();
}

std::vector<int> TransitiveCategory::point_map(const Morphism& f) const {
  std::vector<int> out;
  for (const auto& c : cosets(f.target)) out.push_back(coset_of(f.source, group().mul(c.front(), f.x)));
  return out;
}

std::vector<TransitiveObject> TransitiveCategory::objects(int n) const {
  std::vector<Object> out;
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (static_cast<int>(cosets_[k].size()) <= n) out.push_back({static_cast<int>(k)});
  std::stable_sort(out.begin(), out.end(), [&](const Object& a, const Object& b) { return size(a) < size(b); });
  return out;
}

std::vector<TransitiveMorphism> TransitiveCategory::homs(const Object& x, const Object& y) const {
  std::vector<Morphism> out;
  for (int r : hom_list(group(), subgroup(y), subgroup(x))) out.push_back({x, y, r});
  return out;
}

TransitiveMorphism TransitiveCategory::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target == g.source)) throw ValidationError("morphisms do not compose");
  return {f.source, g.target, least_in_coset(group().mul(g.x, f.x), f.source)};
}

std::vector<AmalgamOf<TransitiveObject, TransitiveMorphism>> TransitiveCategory::amalgamate(const Morphism& b,
                                                                                           const Morphism& c) const {
  auto out = amalgamate_some(b, c, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AmalgamOf<TransitiveObject, TransitiveMorphism>> TransitiveCategory::amalgamate_some(
    const Morphism& b, const Morphism& c, std::size_t limit) const {
  if (!(b.source == c.source)) throw ValidationError("span legs have different sources");
  const auto& g = group();
  const Object a = b.source, bo = b.target, co = c.target;
  const auto& cb = cosets(bo);
  const auto& cc = cosets(co);
  auto over_a = [&](int p, int x) { return coset_of(a, g.mul(p, x)); };
  std::vector<int> image_c(cc.size());
  for (std::size_t j = 0; j < cc.size(); ++j) image_c[j] = over_a(cc[j].front(), c.x);

  std::vector<AmalgamOf<Object, Morphism>> out;
  std::vector<std::vector<char>> seen(cb.size(), std::vector<char>(cc.size(), 0));
  for (std::size_t i = 0; i < cb.size(); ++i) {
    const int ai = over_a(cb[i].front(), b.x);
    for (std::size_t j = 0; j < cc.size(); ++j) {
      if (seen[i][j] || image_c[j] != ai) continue;
      // Mark the orbit of (i, j).
      std::vector<std::pair<int, int>> orbit{{static_cast<int>(i), static_cast<int>(j)}};
      seen[i][j] = 1;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (int s : g.generator_indices()) {
          int ni = coset_of(bo, g.mul(s, cb[orbit[k].first].front()));
          int nj = coset_of(co, g.mul(s, cc[orbit[k].second].front()));
          if (!seen[ni][nj]) {
            seen[ni][nj] = 1;
            orbit.emplace_back(ni, nj);
          }
        }
      const int p = cb[i].front(), q = cc[j].front();
      Subgroup w = intersect(conjugate(g, subgroup(bo), p), conjugate(g, subgroup(co), q));
      int t = 0;
      const Object d = object_of(w, &t);
      const int ti = g.inv(t);
      const int xl = g.mul(ti, p), xr = g.mul(ti, q);
      std::pair<int, int> best{least_in_coset(xl, bo), least_in_coset(xr, co)};
      for (int n : normalizers_[d.cls])
        best = std::min(best, std::pair{least_in_coset(g.mul(n, xl), bo), least_in_coset(g.mul(n, xr), co)});
      out.push_back({d, {bo, d, best.first}, {co, d, best.second}});
      if (limit && out.size() >= limit) return out;
    }
  }
  return out;
}

std::vector<TransitiveObject> TransitiveCategory::initial_set() const {
  return {object_of(whole_group(group()))};
}

void to_json(Json& j, const TransitiveObject& x) { j = Json{{"class", x.cls}}; }

void to_json(Json& j, const TransitiveMorphism& f) {
  j = Json{{"source", f.source}, {"target", f.target}, {"x", f.x}};
}

}  // namespace fraisse
