#pragma once

// Brute-force reference implementations used to derive expected values.
// Deliberately naive: nothing here goes through the library's search code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "fraisse/relstruct.hpp"

namespace oracle {

using fraisse::Structure;

// Every tuple over {0..n-1} of length k, lexicographic.
inline std::vector<std::vector<int>> all_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(k, 0);
  if (n == 0) return k == 0 ? std::vector<std::vector<int>>{{}} : out;
  while (true) {
    out.push_back(t);
    int p = k - 1;
    while (p >= 0 && ++t[p] == n) t[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

inline bool holds(const Structure& x, std::size_t r, const std::vector<int>& t) {
  for (const auto& s : x.tuples(r))
    if (s == t) return true;
  return false;
}

// f : x -> y as a plain vector; checks injectivity, preservation and reflection
// by looking at every tuple of x's ground set.
inline bool is_embedding(const std::vector<int>& f, const Structure& x, const Structure& y) {
  std::set<int> seen(f.begin(), f.end());
  if (static_cast<int>(seen.size()) != x.size()) return false;
  for (std::size_t r = 0; r < x.signature().size(); ++r) {
    for (const auto& t : all_tuples(x.size(), x.signature().arity(r))) {
      std::vector<int> image;
      for (int v : t) image.push_back(f[v]);
      if (holds(x, r, t) != holds(y, r, image)) return false;
    }
  }
  return true;
}

// All injections {0..m-1} -> {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> injections(int m, int n) {
  std::vector<std::vector<int>> out;
  for (const auto& t : all_tuples(n, m)) {
    std::set<int> s(t.begin(), t.end());
    if (static_cast<int>(s.size()) == m) out.push_back(t);
  }
  return out;
}

inline std::vector<std::vector<int>> embeddings(const Structure& x, const Structure& y) {
  std::vector<std::vector<int>> out;
  for (const auto& f : injections(x.size(), y.size()))
    if (is_embedding(f, x, y)) out.push_back(f);
  return out;
}

inline bool isomorphic(const Structure& x, const Structure& y) {
  return x.size() == y.size() && !oracle::embeddings(x, y).empty();
}

// Every labeled structure of size n over the signature of `like`.
inline std::vector<Structure> labeled_structures(const fraisse::SignaturePtr& sig, int n) {
  std::vector<std::pair<std::size_t, std::vector<int>>> slots;
  for (std::size_t r = 0; r < sig->size(); ++r)
    for (const auto& t : all_tuples(n, sig->arity(r))) slots.emplace_back(r, t);
  std::vector<Structure> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    Structure::Builder b(sig, n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1ul) b.add(slots[i].first, slots[i].second);
    out.push_back(std::move(b).build());
  }
  return out;
}

// Isomorphism-class representatives among the labeled structures accepted by `member`.
inline std::vector<Structure> iso_classes(const fraisse::SignaturePtr& sig, int n,
                                          const std::function<bool(const Structure&)>& member) {
  std::vector<Structure> reps;
  for (const auto& s : labeled_structures(sig, n)) {
    if (!member(s)) continue;
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const Structure& r) { return isomorphic(r, s); });
    if (fresh) reps.push_back(s);
  }
  return reps;
}

inline std::size_t automorphism_count(const Structure& x) { return oracle::embeddings(x, x).size(); }

inline bool has_repeat(const std::vector<int>& t) { return std::set<int>(t.begin(), t.end()).size() != t.size(); }

// Calls f on every labeled structure of size n, one at a time. With
// `distinct_only`, tuples with a repeated entry are left out.
inline void for_each_labeled(const fraisse::SignaturePtr& sig, int n, bool distinct_only,
                             const std::function<void(const Structure&)>& f) {
  std::vector<std::pair<std::size_t, std::vector<int>>> slots;
  for (std::size_t r = 0; r < sig->size(); ++r)
    for (const auto& t : all_tuples(n, sig->arity(r)))
      if (!distinct_only || !has_repeat(t)) slots.emplace_back(r, t);
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    Structure::Builder b(sig, n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1ul) b.add(slots[i].first, slots[i].second);
    f(std::move(b).build());
  }
}

// Isomorphism classes of members of size n, counted as the sum of
// |Aut(x)| / n! over labeled members x. Tuples with repeated entries are
// skipped when no member on fewer points than the largest arity has one;
// for a hereditary class that rules them out everywhere.
inline std::size_t count_by_automorphisms(const fraisse::SignaturePtr& sig, int n,
                                          const std::function<bool(const Structure&)>& member) {
  int max_arity = 0;
  for (std::size_t r = 0; r < sig->size(); ++r) max_arity = std::max(max_arity, sig->arity(r));
  bool repeats = false;
  for (int m = 0; m < max_arity; ++m)
    for_each_labeled(sig, m, false, [&](const Structure& x) {
      if (!member(x)) return;
      for (std::size_t r = 0; r < sig->size(); ++r)
        for (const auto& t : x.tuples(r))
          if (has_repeat(t)) repeats = true;
    });
  std::size_t aut_sum = 0, fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  for_each_labeled(sig, n, !repeats, [&](const Structure& x) {
    if (member(x)) aut_sum += automorphism_count(x);
  });
  return aut_sum / fact;
}

}  // namespace oracle
