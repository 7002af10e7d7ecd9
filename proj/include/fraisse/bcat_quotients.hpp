#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "fraisse/bcat.hpp"

namespace fraisse {

/// Epimorphisms out of X, one per isomorphism class under the target.
///
/// An epi is a partition of the atoms of X (blocks numbered by first
/// appearance) with, for each block, a target atom Y_b and maps Y_b -> X_i
/// for i in the block, taken up to the action of Aut(Y_b). Candidate target
/// atoms are the objects no larger than the smallest atom of the block.
template <ACategory C>
std::vector<BMorphism<C>> epis_out_of(const BCategory<C>& cat, const BObject<C>& x) {
  using AMorphism = typename C::Morphism;
  const auto& a = cat.base();
  const int n = static_cast<int>(x.size());

  // Per block: target atom and one component per member, listed by member order.
  struct BlockChoice {
    typename C::Object target;
    std::vector<AMorphism> components;
  };
  auto block_choices = [&](const std::vector<int>& members) {
    int bound = a.size(x.atoms[members[0]]);
    for (int i : members) bound = std::min(bound, a.size(x.atoms[i]));
    std::vector<BlockChoice> out;
    for (const auto& y : a.objects(bound)) {
      std::vector<std::vector<AMorphism>> per(members.size());
      bool possible = true;
      for (std::size_t m = 0; m < members.size() && possible; ++m) {
        per[m] = a.homs(y, x.atoms[members[m]]);
        possible = !per[m].empty();
      }
      if (!possible) continue;
      auto auts = automorphisms(a, y);
      std::set<std::vector<AMorphism>> seen;
      std::vector<AMorphism> cur;
      auto go = [&](auto& self, std::size_t m) -> void {
        if (m == members.size()) {
          if (seen.contains(cur)) return;
          for (const auto& al : auts) {
            std::vector<AMorphism> moved;
            for (const auto& h : cur) moved.push_back(a.compose(h, al));
            seen.insert(std::move(moved));
          }
          out.push_back({y, cur});
          return;
        }
        for (const auto& h : per[m]) {
          cur.push_back(h);
          self(self, m + 1);
          cur.pop_back();
        }
      };
      go(go, 0);
    }
    return out;
  };

  std::vector<BMorphism<C>> result;
  std::vector<int> rgs(n, 0);
  auto emit_partition = [&]() {
    const int blocks = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> members(blocks);
    for (int i = 0; i < n; ++i) members[rgs[i]].push_back(i);
    std::vector<std::vector<BlockChoice>> options;
    for (const auto& m : members) {
      options.push_back(block_choices(m));
      if (options.back().empty()) return;
    }
    std::vector<std::size_t> pick(blocks, 0);
    while (true) {
      BMorphism<C> f{x, {}, rgs, std::vector<AMorphism>(n)};
      for (int b = 0; b < blocks; ++b) {
        const auto& ch = options[b][pick[b]];
        f.target.atoms.push_back(ch.target);
        for (std::size_t m = 0; m < members[b].size(); ++m) f.components[members[b][m]] = ch.components[m];
      }
      result.push_back(std::move(f));
      int b = blocks - 1;
      while (b >= 0 && ++pick[b] == options[b].size()) pick[b--] = 0;
      if (b < 0) break;
    }
  };
  // Restricted growth strings enumerate set partitions.
  auto go = [&](auto& self, int i, int max_block) -> void {
    if (i == n) {
      emit_partition();
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  go(go, 0, -1);
  return result;
}

/// Epis out of X with their kernel pairs, for repeated coequalizer queries.
template <ACategory C>
struct QuotientsOf {
  std::vector<BMorphism<C>> epis;
  std::vector<std::vector<int>> kernels;
};

template <ACategory C>
QuotientsOf<C> quotients_of(const BCategory<C>& cat, const BObject<C>& x) {
  QuotientsOf<C> out{epis_out_of(cat, x), {}};
  for (const auto& e : out.epis) out.kernels.push_back(cat.kernel_pair(e).subset);
  return out;
}

/// The equalizing epi among `q` (the quotients of the common target) with
/// the smallest kernel pair. Throws ConsistencyError if no equalizing epi
/// exists or the smallest one is not unique.
template <ACategory C>
BMorphism<C> coequalizer(const BCategory<C>& cat, const BMorphism<C>& f, const BMorphism<C>& g,
                         const QuotientsOf<C>& q) {
  if (!(f.source == g.source) || !(f.target == g.target)) throw ValidationError("coequalizer needs parallel maps");
  std::vector<std::size_t> equalizing;
  for (std::size_t i = 0; i < q.epis.size(); ++i)
    if (cat.compose(q.epis[i], f) == cat.compose(q.epis[i], g)) equalizing.push_back(i);
  if (equalizing.empty()) throw ConsistencyError("no epimorphism equalizes the pair");
  std::vector<std::size_t> minimal;
  for (std::size_t i : equalizing) {
    bool below_all = true;
    for (std::size_t j : equalizing) {
      below_all = std::includes(q.kernels[j].begin(), q.kernels[j].end(), q.kernels[i].begin(), q.kernels[i].end());
      if (!below_all) break;
    }
    if (below_all) minimal.push_back(i);
  }
  if (minimal.size() != 1)
    throw ConsistencyError("expected one minimal equalizing epimorphism, found " + std::to_string(minimal.size()));
  return q.epis[minimal.front()];
}

template <ACategory C>
BMorphism<C> coequalizer(const BCategory<C>& cat, const BMorphism<C>& f, const BMorphism<C>& g) {
  if (!(f.target == g.target)) throw ValidationError("coequalizer needs parallel maps");
  return coequalizer(cat, f, g, quotients_of(cat, f.target));
}

namespace detail {

template <ACategory C>
std::vector<int> swapped(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  auto sw = cat.mediator(r.square, r.square.right, r.square.left);
  std::set<int> out;
  for (int k : r.subset) out.insert(sw.index[k]);
  return {out.begin(), out.end()};
}

// Atoms of X x X hit by R x_X R -> X x X, (s, t) |-> (r1 s, r2 t).
template <ACategory C>
std::vector<int> composed(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  if (r.subset.empty()) return {};
  auto [r1, r2] = cat.projections(r);
  auto t = cat.fiber_product(r2, r1);
  auto m = cat.mediator(r.square, cat.compose(r1, t.left), cat.compose(r2, t.right));
  std::set<int> out(m.index.begin(), m.index.end());
  return {out.begin(), out.end()};
}

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

template <ACategory C>
std::vector<int> diagonal_subset(const BCategory<C>& cat, const BObject<C>& x) {
  auto d = cat.diagonal(x);
  std::set<int> out(d.index.begin(), d.index.end());
  return {out.begin(), out.end()};
}

template <ACategory C>
bool is_reflexive(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  return detail::subset_of(diagonal_subset(cat, r.carrier), r.subset);
}

template <ACategory C>
bool is_symmetric(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  return detail::subset_of(detail::swapped(cat, r), r.subset);
}

template <ACategory C>
bool is_transitive(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  return detail::subset_of(detail::composed(cat, r), r.subset);
}

template <ACategory C>
bool is_equivalence_relation(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  return is_reflexive(cat, r) && is_symmetric(cat, r) && is_transitive(cat, r);
}

/// Coequalizer of the two projections R -> X. Throws ValidationError unless
/// R is an equivalence relation.
template <ACategory C>
BMorphism<C> quotient(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  if (!is_equivalence_relation(cat, r)) throw ValidationError("not an equivalence relation");
  auto [r1, r2] = cat.projections(r);
  return coequalizer(cat, r1, r2);
}

/// R is the kernel pair of its quotient map.
template <ACategory C>
bool is_effective(const BCategory<C>& cat, const typename BCategory<C>::Relation& r) {
  return cat.kernel_pair(quotient(cat, r)).subset == r.subset;
}

/// Smallest equivalence relation containing r.
template <ACategory C>
typename BCategory<C>::Relation equivalence_closure(const BCategory<C>& cat, typename BCategory<C>::Relation r) {
  std::set<int> grown(r.subset.begin(), r.subset.end());
  for (int k : diagonal_subset(cat, r.carrier)) grown.insert(k);
  r.subset.assign(grown.begin(), grown.end());
  while (true) {
    for (int k : detail::swapped(cat, r)) grown.insert(k);
    for (int k : detail::composed(cat, r)) grown.insert(k);
    if (grown.size() == r.subset.size()) return r;
    r.subset.assign(grown.begin(), grown.end());
  }
}

/// Every equivalence relation on X, ordered by atom index sets.
template <ACategory C>
std::vector<typename BCategory<C>::Relation> equivalence_relations(const BCategory<C>& cat, const BObject<C>& x) {
  auto start = equivalence_closure(cat, cat.relation(x, {}));
  const int atoms = static_cast<int>(start.square.object.size());
  std::set<std::vector<int>> seen{start.subset};
  std::deque<std::vector<int>> queue{start.subset};
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (int k = 0; k < atoms; ++k) {
      if (std::binary_search(s.begin(), s.end(), k)) continue;
      auto t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), k), k);
      auto closed = equivalence_closure(cat, typename BCategory<C>::Relation{x, start.square, t}).subset;
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<typename BCategory<C>::Relation> out;
  for (const auto& s : seen) out.push_back({x, start.square, s});
  return out;
}

}  // namespace fraisse
