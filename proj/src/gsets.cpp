#include "fraisse/gsets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "fraisse/error.hpp"

namespace fraisse {

namespace {

using Perm = FiniteGroup::Perm;

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool is_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0) throw ValidationError("negative degree");
  for (const auto& g : generators_)
    if (!is_permutation(g, degree)) throw ValidationError("generator is not a permutation of the given degree");
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded("group order exceeds " + std::to_string(cap));
        queue.push_back(std::move(q));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
  for (const auto& g : generators_) gen_idx_.push_back(index_of(g));
  const std::size_t n = elements_.size();
  if (n <= 1024) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
  }
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Perm q(degree);
    for (int i = 0; i < degree; ++i) q[elements_[a][i]] = i;
    inv_[a] = index_.at(q);
  }
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return FiniteGroup(n, gens);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return FiniteGroup(n, {c});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  Perm c(n), r(n);
  for (int i = 0; i < n; ++i) {
    c[i] = (i + 1) % n;
    r[i] = (n - i) % n;
  }
  return FiniteGroup(n, {c, r});
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw ValidationError("permutation is not a group element");
  return it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(compose(elements_[a], elements_[b]));
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (!std::binary_search(h.begin(), h.end(), 0)) return false;
  for (int a : h) {
    if (a < 0 || a >= static_cast<int>(g.order())) return false;
  }
  for (int a : h)
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  return true;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int by) {
  Subgroup out;
  out.reserve(h.size());
  for (int x : h) out.push_back(g.conj(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const Subgroup& big, const Subgroup& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (conjugate(g, h, x) == h) out.push_back(x);
  return out;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup out(g.order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("subgroup enumeration needs |G| <= " + std::to_string(cap));
  std::set<Subgroup> seen{trivial_subgroup()};
  std::deque<Subgroup> queue{trivial_subgroup()};
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      Subgroup k = generated_subgroup(g, gens);
      if (seen.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

std::vector<ConjugacyClass> subgroups_up_to_conjugacy(const FiniteGroup& g, std::size_t cap) {
  std::vector<ConjugacyClass> out;
  std::set<Subgroup> placed;
  for (const auto& h : all_subgroups(g, cap)) {
    if (placed.contains(h)) continue;
    std::map<Subgroup, int> conj;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) conj.emplace(conjugate(g, h, x), x);
    ConjugacyClass c;
    c.rep = conj.begin()->first;
    // Conjugators relative to the least conjugate.
    const int to_rep = conj.begin()->second;
    for (const auto& [k, x] : conj) {
      c.conjugates.push_back(k);
      c.conjugators.push_back(g.mul(x, g.inv(to_rep)));
      placed.insert(k);
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.rep.size() != b.rep.size() ? a.rep.size() < b.rep.size() : a.rep < b.rep;
  });
  return out;
}

std::vector<int> hom_list(const FiniteGroup& g, const Subgroup& u, const Subgroup& v) {
  std::set<int> reps;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool ok = true;
    for (int a : u)
      if (!std::binary_search(v.begin(), v.end(), g.mul(g.inv(x), g.mul(a, x)))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int least = x;
    for (int b : v) least = std::min(least, g.mul(x, b));
    reps.insert(least);
  }
  return {reps.begin(), reps.end()};
}

std::size_t hom_count(const FiniteGroup& g, const Subgroup& u, const Subgroup& v) { return hom_list(g, u, v).size(); }

std::size_t double_coset_count(const FiniteGroup& g, const Subgroup& u, const Subgroup& v) {
  std::vector<char> seen(g.order(), 0);
  std::size_t count = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[x]) continue;
    ++count;
    for (int a : u)
      for (int b : v) seen[g.mul(a, g.mul(x, b))] = 1;
  }
  return count;
}

StabilizerClass::StabilizerClass(GroupPtr group, std::vector<Subgroup> members) : group_(std::move(group)) {
  if (!group_) throw ValidationError("stabilizer class needs a group");
  const auto& g = *group_;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (!is_subgroup(g, m)) throw ValidationError("stabilizer class member is not a subgroup");
  }
  std::set<Subgroup> s(members.begin(), members.end());
  members_.assign(s.begin(), s.end());
  if (!s.contains(whole_group(g))) throw ValidationError("stabilizer class must contain G");
  if (!s.contains(trivial_subgroup())) throw ValidationError("stabilizer class must contain the trivial subgroup");
  for (const auto& m : members_) {
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
      if (!s.contains(conjugate(g, m, x))) throw ValidationError("stabilizer class is not closed under conjugation");
    for (const auto& n : members_)
      if (!s.contains(intersect(m, n))) throw ValidationError("stabilizer class is not closed under intersection");
  }
}

StabilizerClass StabilizerClass::full(GroupPtr group) {
  auto subs = all_subgroups(*group);
  return StabilizerClass(std::move(group), std::move(subs));
}

StabilizerClass StabilizerClass::closure(GroupPtr group, std::vector<Subgroup> seeds) {
  const auto& g = *group;
  std::set<Subgroup> s{whole_group(g), trivial_subgroup()};
  for (auto& m : seeds) {
    std::sort(m.begin(), m.end());
    if (!is_subgroup(g, m)) throw ValidationError("seed is not a subgroup");
    s.insert(m);
  }
  while (true) {
    std::set<Subgroup> next = s;
    for (const auto& m : s) {
      for (int x = 0; x < static_cast<int>(g.order()); ++x) next.insert(conjugate(g, m, x));
      for (const auto& n : s) next.insert(intersect(m, n));
    }
    if (next.size() == s.size()) break;
    s = std::move(next);
  }
  return StabilizerClass(std::move(group), {s.begin(), s.end()});
}

bool StabilizerClass::contains(const Subgroup& u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

Subgroup StabilizerClass::reflector(const Subgroup& u) const {
  Subgroup out = whole_group(*group_);
  for (const auto& m : members_)
    if (fraisse::contains(m, u)) out = intersect(out, m);
  return out;
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<int> orbit_of(points, -1);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < points; ++p) {
    if (orbit_of[p] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> orbit{p};
    orbit_of[p] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int s : group->generator_indices()) {
        int q = act(s, orbit[k]);
        if (orbit_of[q] < 0) {
          orbit_of[q] = id;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup GSet::stabilizer(int p) const {
  Subgroup out;
  for (int g = 0; g < static_cast<int>(group->order()); ++g)
    if (act(g, p) == p) out.push_back(g);
  return out;
}

void GSet::validate() const {
  const auto& g = *group;
  if (action.size() != g.order()) throw ValidationError("action table has the wrong number of rows");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != points) throw ValidationError("action row has the wrong length");
    if (!is_permutation(row, points)) throw ValidationError("group element does not act by a permutation");
  }
  for (int p = 0; p < points; ++p)
    if (act(0, p) != p) throw ValidationError("identity does not act trivially");
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int b = 0; b < static_cast<int>(g.order()); ++b)
      for (int p = 0; p < points; ++p)
        if (act(g.mul(a, b), p) != act(a, act(b, p))) throw ValidationError("action is not compatible with products");
}

std::vector<Subgroup> left_cosets(const FiniteGroup& g, const Subgroup& u) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Subgroup> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[x]) continue;
    Subgroup c;
    for (int a : u) c.push_back(g.mul(x, a));
    std::sort(c.begin(), c.end());
    for (int y : c) seen[y] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

GSet coset_space(const GroupPtr& gp, const Subgroup& u) {
  const auto& g = *gp;
  auto cosets = left_cosets(g, u);
  std::vector<int> coset_of(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) coset_of[x] = static_cast<int>(i);
  GSet out{gp, static_cast<int>(cosets.size()), {}};
  out.action.assign(g.order(), std::vector<int>(cosets.size()));
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (std::size_t i = 0; i < cosets.size(); ++i) out.action[a][i] = coset_of[g.mul(a, cosets[i].front())];
  return out;
}

GSet disjoint_union(const std::vector<GSet>& parts) {
  if (parts.empty()) throw ValidationError("disjoint union of no G-sets has no group");
  GSet out{parts.front().group, 0, {}};
  out.action.assign(out.group->order(), {});
  for (const auto& x : parts) {
    for (std::size_t a = 0; a < out.action.size(); ++a)
      for (int p = 0; p < x.points; ++p) out.action[a].push_back(out.points + x.act(static_cast<int>(a), p));
    out.points += x.points;
  }
  return out;
}

GSet product(const GSet& x, const GSet& y) {
  std::vector<int> fx(x.points, 0), fy(y.points, 0);
  return fiber_product(x, fx, y, fy).object;
}

SetFiberProduct fiber_product(const GSet& x, const std::vector<int>& f, const GSet& y, const std::vector<int>& g) {
  SetFiberProduct out;
  std::map<std::pair<int, int>, int> index;
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < y.points; ++q)
      if (f[p] == g[q]) {
        index.emplace(std::pair{p, q}, static_cast<int>(out.pairs.size()));
        out.pairs.emplace_back(p, q);
        out.left.push_back(p);
        out.right.push_back(q);
      }
  out.object = GSet{x.group, static_cast<int>(out.pairs.size()), {}};
  out.object.action.assign(x.group->order(), std::vector<int>(out.pairs.size()));
  for (int a = 0; a < static_cast<int>(x.group->order()); ++a)
    for (std::size_t k = 0; k < out.pairs.size(); ++k)
      out.object.action[a][k] = index.at({x.act(a, out.pairs[k].first), y.act(a, out.pairs[k].second)});
  return out;
}

GSet restrict_to(const GSet& x, const std::vector<int>& subset) {
  std::vector<int> pos(x.points, -1);
  for (std::size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = static_cast<int>(k);
  GSet out{x.group, static_cast<int>(subset.size()), {}};
  out.action.assign(x.group->order(), std::vector<int>(subset.size()));
  for (int a = 0; a < static_cast<int>(x.group->order()); ++a)
    for (std::size_t k = 0; k < subset.size(); ++k) {
      int q = pos[x.act(a, subset[k])];
      if (q < 0) throw ValidationError("subset is not invariant");
      out.action[a][k] = q;
    }
  return out;
}

SetQuotient coequalizer(const GSet& y, const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> parent(y.points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (std::size_t k = 0; k < f.size(); ++k) {
    int a = find(f[k]), b = find(g[k]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  SetQuotient out;
  std::map<int, int> cls;
  for (int p = 0; p < y.points; ++p) {
    auto [it, fresh] = cls.emplace(find(p), static_cast<int>(cls.size()));
    out.map.push_back(it->second);
  }
  out.object = GSet{y.group, static_cast<int>(cls.size()), {}};
  out.object.action.assign(y.group->order(), std::vector<int>(cls.size()));
  for (int a = 0; a < static_cast<int>(y.group->order()); ++a)
    for (int p = 0; p < y.points; ++p) out.object.action[a][out.map[p]] = out.map[y.act(a, p)];
  return out;
}

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.points) return false;
  for (int a = 0; a < static_cast<int>(x.group->order()); ++a)
    for (int p = 0; p < x.points; ++p)
      if (f[x.act(a, p)] != y.act(a, f[p])) return false;
  return true;
}

namespace {

std::vector<Subgroup> orbit_types(const GSet& x) {
  const auto& g = *x.group;
  std::vector<Subgroup> out;
  for (const auto& o : x.orbits()) {
    const Subgroup stab = x.stabilizer(o.front());
    Subgroup best = stab;
    for (int t = 0; t < static_cast<int>(g.order()); ++t) best = std::min(best, conjugate(g, stab, t));
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool isomorphic(const GSet& x, const GSet& y) {
  if (x.points != y.points || x.group->order() != y.group->order()) return false;
  return orbit_types(x) == orbit_types(y);
}

}  // namespace fraisse
