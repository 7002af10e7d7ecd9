#include "fraisse/cprime.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "fraisse/error.hpp"
#include "fraisse/gsets.hpp"

namespace fraisse {

namespace {

using Perm = std::vector<int>;

const std::vector<Perm>& all_perms(int m) {
  static const auto table = [] {
    std::array<std::vector<Perm>, CPrimeCategory::kMaxApexSize + 1> t;
    for (int k = 0; k <= CPrimeCategory::kMaxApexSize; ++k) {
      Perm p(k);
      std::iota(p.begin(), p.end(), 0);
      do t[k].push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
  }();
  if (m < 0 || m > CPrimeCategory::kMaxApexSize)
    throw CapExceeded("sets larger than " + std::to_string(CPrimeCategory::kMaxApexSize) + " are not supported");
  return table[m];
}

std::vector<Perm> conjugated(const std::vector<Perm>& group, const Perm& s) {
  std::vector<Perm> out;
  out.reserve(group.size());
  for (const auto& g : group) {
    Perm h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[s[i]] = s[g[i]];
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least conjugate and every relabeling reaching it.
std::pair<std::vector<Perm>, std::vector<Perm>> canonical_group(int n, const std::vector<Perm>& group) {
  std::vector<Perm> best;
  std::vector<Perm> sigmas;
  for (const auto& s : all_perms(n)) {
    auto c = conjugated(group, s);
    if (sigmas.empty() || c < best) {
      best = std::move(c);
      sigmas = {s};
    } else if (c == best) {
      sigmas.push_back(s);
    }
  }
  return {best, sigmas};
}

std::vector<Perm> closure(int n, const std::vector<Perm>& gens) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_group(const CPrimeObject& x, const Perm& p) { return std::binary_search(x.group.begin(), x.group.end(), p); }

bool satisfies(const CPrimeObject& x, const CPrimeObject& y, const Perm& a) {
  if (static_cast<int>(a.size()) != x.n) return false;
  std::vector<int> pre(y.n, -1);
  for (int i = 0; i < x.n; ++i) {
    if (a[i] < 0 || a[i] >= y.n || pre[a[i]] >= 0) return false;
    pre[a[i]] = i;
  }
  Perm r(x.n);
  for (const auto& h : y.group) {
    for (int i = 0; i < x.n; ++i) {
      const int back = pre[h[a[i]]];
      if (back < 0) return false;
      r[i] = back;
    }
    if (!in_group(x, r)) return false;
  }
  return true;
}

Perm least_rep(const CPrimeObject& x, const Perm& a) {
  Perm best = a;
  Perm c(a.size());
  for (const auto& g : x.group) {
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[g[i]];
    best = std::min(best, c);
  }
  return best;
}

}  // namespace

CPrimeCategory::CPrimeCategory(int n_max) : n_max_(n_max) {
  if (n_max > kMaxObjectSize) throw CapExceeded("C' objects are enumerated up to size 5");
  for (int k = 0; k <= std::max(n_max, 0); ++k) {
    auto sym = FiniteGroup::symmetric(k);
    std::vector<Object> level;
    for (const auto& c : subgroups_up_to_conjugacy(sym)) {
      std::vector<Perm> gens;
      for (int e : c.rep) gens.push_back(sym.element(e));
      level.push_back(object(k, gens));
    }
    std::sort(level.begin(), level.end());
    by_size_.push_back(std::move(level));
  }
}

CPrimeObject CPrimeCategory::object(int n, const std::vector<std::vector<int>>& generators) {
  if (n < 0) throw ValidationError("negative set size");
  for (const auto& g : generators) {
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    if (s != id) throw ValidationError("generator is not a permutation of the set");
  }
  return {n, canonical_group(n, closure(n, generators)).first};
}

CPrimeMorphism CPrimeCategory::morphism(const Object& x, const Object& y, const std::vector<int>& map) const {
  if (!satisfies(x, y, map)) throw ValidationError("map is not a morphism of C'");
  return {x, y, least_rep(x, map)};
}

std::vector<CPrimeObject> CPrimeCategory::objects(int n) const {
  std::vector<Object> out;
  for (int k = 0; k <= std::min(n, n_max_); ++k) out.insert(out.end(), by_size_[k].begin(), by_size_[k].end());
  return out;
}

std::vector<CPrimeMorphism> CPrimeCategory::homs(const Object& x, const Object& y) const {
  std::set<Perm> maps;
  if (x.n > y.n) return {};
  // Injections as prefixes of permutations of the target.
  std::set<Perm> seen;
  for (const auto& p : all_perms(y.n)) {
    Perm a(p.begin(), p.begin() + x.n);
    if (!seen.insert(a).second) continue;
    if (satisfies(x, y, a)) maps.insert(least_rep(x, a));
  }
  std::vector<Morphism> out;
  for (const auto& a : maps) out.push_back({x, y, a});
  return out;
}

CPrimeMorphism CPrimeCategory::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target == g.source)) throw ValidationError("morphisms do not compose");
  Perm a(f.map.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.map[f.map[i]];
  return {f.source, g.target, least_rep(f.source, a)};
}

CPrimeMorphism CPrimeCategory::identity(const Object& x) const {
  Perm id(x.n);
  std::iota(id.begin(), id.end(), 0);
  return {x, x, id};
}

std::vector<AmalgamOf<CPrimeObject, CPrimeMorphism>> CPrimeCategory::amalgamate(const Morphism& b,
                                                                               const Morphism& c) const {
  return amalgamate_some(b, c, 0);
}

std::vector<AmalgamOf<CPrimeObject, CPrimeMorphism>> CPrimeCategory::amalgamate_some(const Morphism& b,
                                                                                    const Morphism& c,
                                                                                    std::size_t limit) const {
  if (!(b.source == c.source)) throw ValidationError("span legs have different sources");
  const Object& a = b.source;
  const Object& bo = b.target;
  const Object& co = c.target;
  const int nb = bo.n, nc = co.n;
  std::set<AmalgamOf<Object, Morphism>> found;

  // B sits in D as {0..nb-1}; cp maps C into D, new points numbered in order.
  Perm cp(nc, -1);
  std::vector<char> used(nb, 0);
  auto finish = [&](int m) {
    bool commutes = false;
    for (const auto& k : a.group) {
      bool ok = true;
      for (int i = 0; i < a.n && ok; ++i) ok = b.map[i] == cp[c.map[k[i]]];
      if (ok) {
        commutes = true;
        break;
      }
    }
    if (!commutes) return;
    std::vector<char> in_b(m, 0), in_c(m, 0);
    for (int i = 0; i < nb; ++i) in_b[i] = 1;
    std::vector<int> cpre(m, -1);
    for (int j = 0; j < nc; ++j) {
      in_c[cp[j]] = 1;
      cpre[cp[j]] = j;
    }
    // Permutations of D preserving B and cp(C) with restrictions in the groups.
    std::set<Perm> l;
    for (const auto& g : bo.group) {
      bool keeps = true;
      for (int i = 0; i < nb && keeps; ++i) keeps = in_c[i] == in_c[g[i]];
      if (!keeps) continue;
      for (const auto& h : co.group) {
        Perm pi(m);
        for (int i = 0; i < nb; ++i) pi[i] = g[i];
        bool agree = true;
        for (int j = 0; j < nc && agree; ++j) {
          const int from = cp[j], to = cp[h[j]];
          if (from < nb)
            agree = pi[from] == to;
          else
            pi[from] = to;
        }
        if (agree) l.insert(pi);
      }
    }
    auto [group, sigmas] = canonical_group(m, {l.begin(), l.end()});
    Object d{m, group};
    std::pair<Perm, Perm> best;
    bool first = true;
    for (const auto& s : sigmas) {
      Perm left(nb), right(nc);
      for (int i = 0; i < nb; ++i) left[i] = s[i];
      for (int j = 0; j < nc; ++j) right[j] = s[cp[j]];
      std::pair<Perm, Perm> cand{least_rep(bo, left), least_rep(co, right)};
      if (first || cand < best) best = std::move(cand);
      first = false;
    }
    found.insert({d, {bo, d, best.first}, {co, d, best.second}});
  };
  auto go = [&](auto& self, int j, int next) -> void {
    if (limit && found.size() >= limit) return;
    if (j == nc) {
      finish(next);
      return;
    }
    for (int t = 0; t < nb; ++t) {
      if (used[t]) continue;
      used[t] = 1;
      cp[j] = t;
      self(self, j + 1, next);
      used[t] = 0;
    }
    if (next + 1 > kMaxApexSize) throw CapExceeded("amalgam would exceed the supported apex size");
    cp[j] = next;
    self(self, j + 1, next + 1);
  };
  go(go, 0, nb);
  return {found.begin(), found.end()};
}

void to_json(Json& j, const CPrimeObject& x) { j = Json{{"size", x.n}, {"group", x.group}}; }

void to_json(Json& j, const CPrimeMorphism& f) {
  j = Json{{"source", f.source}, {"target", f.target}, {"map", f.map}};
}

}  // namespace fraisse
