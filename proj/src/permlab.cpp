#include "fraisse/permlab.hpp"

#include <algorithm>
#include <numeric>

#include "fraisse/error.hpp"

namespace fraisse {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) throw ValidationError("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto piece = text.substr(start, end - start);
      if (piece.empty()) throw ValidationError("empty entry in permutation '" + std::string(text) + "'");
      int v = 0;
      for (char ch : piece) {
        if (ch < '0' || ch > '9') throw ValidationError("bad permutation '" + std::string(text) + "'");
        v = v * 10 + (ch - '0');
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ValidationError("bad permutation '" + std::string(text) + "'");
      values.push_back(ch - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

std::vector<Permutation> permutations_of_length(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

SignaturePtr permutation_signature() {
  static const SignaturePtr sig = make_signature({{"pos", 2}, {"val", 2}});
  return sig;
}

Structure perm_to_structure(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  Structure::Builder b(permutation_signature(), n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i < j) b.add(0, {i, j});
      if (sigma[i] < sigma[j]) b.add(1, {i, j});
    }
  }
  return std::move(b).build();
}

namespace {

bool is_strict_total_order(const Structure& x, std::size_t r) {
  const int n = x.size();
  for (int i = 0; i < n; ++i) {
    if (x.holds(r, {i, i})) return false;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (x.holds(r, {i, j}) == x.holds(r, {j, i})) return false;
      for (int k = 0; k < n; ++k)
        if (x.holds(r, {i, j}) && x.holds(r, {j, k}) && !x.holds(r, {i, k})) return false;
    }
  }
  return true;
}

// Rank of each point under order r (number of points below it).
std::vector<int> ranks(const Structure& x, std::size_t r) {
  std::vector<int> rank(x.size(), 0);
  for (std::size_t i = 0; i < x.tuple_count(r); ++i) ++rank[x.tuple(r, i)[1]];
  return rank;
}

}  // namespace

bool is_pair_of_total_orders(const Structure& x) {
  return same_signature(x.signature_ptr(), permutation_signature()) && is_strict_total_order(x, 0) &&
         is_strict_total_order(x, 1);
}

Permutation structure_to_perm(const Structure& x) {
  if (!is_pair_of_total_orders(x)) throw ValidationError("structure is not a pair of total orders");
  const int n = x.size();
  std::vector<int> pos = ranks(x, 0);
  std::vector<int> val = ranks(x, 1);
  std::vector<int> values(n);
  for (int p = 0; p < n; ++p) values[pos[p]] = val[p] + 1;
  return Permutation(std::move(values));
}

bool contains_pattern(const Permutation& sigma, const Permutation& tau) {
  const std::size_t n = sigma.size(), k = tau.size();
  if (k > n) return false;
  std::vector<int> chosen;
  chosen.reserve(k);
  // chosen[m] is the index into sigma used for pattern entry m.
  auto fits = [&](std::size_t m, int idx) {
    for (std::size_t p = 0; p < m; ++p)
      if ((sigma[chosen[p]] < sigma[idx]) != (tau[p] < tau[m])) return false;
    return true;
  };
  auto go = [&](auto& self, std::size_t m, std::size_t from) -> bool {
    if (m == k) return true;
    for (std::size_t i = from; i + (k - m) <= n; ++i) {
      if (!fits(m, static_cast<int>(i))) continue;
      chosen.push_back(static_cast<int>(i));
      if (self(self, m + 1, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return go(go, 0, 0);
}

Permutation inflation(const Permutation& sigma, std::span<const Permutation> blocks) {
  if (blocks.size() != sigma.size())
    throw ValidationError("inflation needs one block per entry of the outer permutation");
  const std::size_t n = sigma.size();
  std::vector<int> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sigma[j] < sigma[i]) offset[i] += static_cast<int>(blocks[j].size());
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    for (int v : blocks[i].values()) out.push_back(v + offset[i]);
  return Permutation(std::move(out));
}

Permutation sum(const Permutation& a, const Permutation& b) {
  std::vector<Permutation> blocks{a, b};
  return inflation(Permutation{1, 2}, blocks);
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<Permutation> blocks{a, b};
  return inflation(Permutation{2, 1}, blocks);
}

bool is_separable_by_avoidance(const Permutation& sigma) {
  return !contains_pattern(sigma, Permutation{2, 4, 1, 3}) && !contains_pattern(sigma, Permutation{3, 1, 4, 2});
}

namespace {

bool separable_rec(const std::vector<int>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return true;
  int lo = v[0], hi = v[0];
  for (std::size_t k = 1; k < n; ++k) {
    lo = std::min(lo, v[k - 1]);
    hi = std::max(hi, v[k - 1]);
    // prefix v[0..k) holds k values; it is an interval at the bottom or top
    const bool bottom = hi == static_cast<int>(k) && lo == 1;
    const bool top = lo == static_cast<int>(n - k) + 1 && hi == static_cast<int>(n);
    if (!bottom && !top) continue;
    auto left = standardize(std::span<const int>(v.data(), k)).values();
    auto right = standardize(std::span<const int>(v.data() + k, n - k)).values();
    if (separable_rec(left) && separable_rec(right)) return true;
  }
  return false;
}

}  // namespace

bool is_separable_by_decomposition(const Permutation& sigma) { return separable_rec(sigma.values()); }

bool is_separable(const Permutation& sigma) { return is_separable_by_decomposition(sigma); }

PermClass all_permutations_class() {
  return {"all_permutations", [](const Permutation&) { return true; }};
}

PermClass separable_class() { return {"separable_permutations", is_separable}; }

PermClass avoidance_class(std::vector<Permutation> patterns) {
  std::string name = "Av(";
  for (std::size_t i = 0; i < patterns.size(); ++i) name += (i ? "," : "") + patterns[i].to_string();
  name += ")";
  return {name, [patterns = std::move(patterns)](const Permutation& s) {
            return std::none_of(patterns.begin(), patterns.end(),
                                [&](const Permutation& p) { return contains_pattern(s, p); });
          }};
}

Verdict<InflationWitness> is_substitution_closed(const PermClass& cls, int n_max) {
  if (n_max > kSubstitutionCap)
    throw CapExceeded("substitution check limited to length " + std::to_string(kSubstitutionCap));
  std::vector<std::vector<Permutation>> members(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    for (auto& p : permutations_of_length(n))
      if (cls.contains(p)) members[n].push_back(std::move(p));

  std::optional<InflationWitness> witness;
  std::vector<Permutation> blocks;
  for (int m = 1; m <= n_max && !witness; ++m) {
    for (const auto& outer : members[m]) {
      auto go = [&](auto& self, int budget) -> void {
        if (witness) return;
        if (blocks.size() == outer.size()) {
          Permutation result = inflation(outer, blocks);
          if (!cls.contains(result)) witness = InflationWitness{outer, blocks, result};
          return;
        }
        const int remaining = static_cast<int>(outer.size() - blocks.size()) - 1;
        for (int len = 1; len <= budget - remaining; ++len) {
          for (const auto& b : members[len]) {
            blocks.push_back(b);
            self(self, budget - len);
            blocks.pop_back();
            if (witness) return;
          }
        }
      };
      go(go, n_max);
      if (witness) break;
    }
  }
  if (witness) return Verdict<InflationWitness>::fail(std::move(*witness));
  return Verdict<InflationWitness>::ok();
}

}  // namespace fraisse
