#include <algorithm>
#include <map>
#include <numeric>

#include "fraisse/relstruct.hpp"

namespace fraisse {

namespace {

// Iterated colour refinement. Colours are ranks of sorted invariant keys,
// so the resulting partition and its order are isomorphism invariant.
std::vector<int> refine_colours(const Structure& x) {
  const int n = x.size();
  const auto& sig = x.signature();
  std::vector<int> colour(n, 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    std::vector<std::vector<long>> keys(n);
    for (int v = 0; v < n; ++v) keys[v].push_back(colour[v]);
    std::vector<std::vector<std::vector<long>>> incident(n);
    for (std::size_t r = 0; r < sig.size(); ++r) {
      for (std::size_t i = 0; i < x.tuple_count(r); ++i) {
        auto t = x.tuple(r, i);
        for (std::size_t p = 0; p < t.size(); ++p) {
          std::vector<long> entry{static_cast<long>(r), static_cast<long>(p)};
          for (int u : t) entry.push_back(colour[u]);
          incident[t[p]].push_back(std::move(entry));
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      std::sort(incident[v].begin(), incident[v].end());
      for (const auto& e : incident[v]) {
        keys[v].push_back(-1);
        keys[v].insert(keys[v].end(), e.begin(), e.end());
      }
    }
    std::map<std::vector<long>, int> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    int id = 0;
    for (auto& [k, r] : rank) r = id++;
    for (int v = 0; v < n; ++v) colour[v] = rank[keys[v]];
    if (id == classes) break;
    classes = id;
  }
  return colour;
}

std::vector<std::vector<int>> encode(const Structure& x, const std::vector<int>& perm) {
  const auto& sig = x.signature();
  std::vector<std::vector<int>> enc(sig.size());
  for (std::size_t r = 0; r < sig.size(); ++r) {
    const int k = sig.arity(r);
    const std::size_t count = x.tuple_count(r);
    std::vector<std::vector<int>> tuples(count, std::vector<int>(k));
    for (std::size_t i = 0; i < count; ++i) {
      auto t = x.tuple(r, i);
      for (int p = 0; p < k; ++p) tuples[i][p] = perm[t[p]];
    }
    std::sort(tuples.begin(), tuples.end());
    for (auto& t : tuples) enc[r].insert(enc[r].end(), t.begin(), t.end());
  }
  return enc;
}

}  // namespace

CanonicalForm canonical_form(const Structure& x) {
  const int n = x.size();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (x.bare()) return CanonicalForm{x, identity};

  std::vector<int> colour = refine_colours(x);
  int ncolours = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> cells(ncolours);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  std::vector<int> start(ncolours, 0);
  for (int c = 1; c < ncolours; ++c) start[c] = start[c - 1] + static_cast<int>(cells[c - 1].size());

  std::vector<int> perm(n, 0);
  std::vector<int> best_perm;
  std::vector<std::vector<int>> best;
  bool have = false;

  // Odometer over the product of per-cell permutations.
  std::vector<std::vector<int>> order = cells;
  while (true) {
    for (int c = 0; c < ncolours; ++c)
      for (std::size_t i = 0; i < order[c].size(); ++i) perm[order[c][i]] = start[c] + static_cast<int>(i);
    auto enc = encode(x, perm);
    if (!have || enc < best) {
      best = std::move(enc);
      best_perm = perm;
      have = true;
    }
    int c = ncolours - 1;
    while (c >= 0 && !std::next_permutation(order[c].begin(), order[c].end())) --c;
    if (c < 0) break;
  }
  return CanonicalForm{relabel(x, best_perm), best_perm};
}

}  // namespace fraisse
