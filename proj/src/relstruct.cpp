#include "fraisse/relstruct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fraisse/error.hpp"

namespace fraisse {

namespace {

// Lexicographic compare of tuple i of `flat` (arity k) with t.
int compare_tuple(std::span<const int> flat, int k, std::size_t i, std::span<const int> t) {
  for (int p = 0; p < k; ++p) {
    int a = flat[i * k + p];
    if (a != t[p]) return a < t[p] ? -1 : 1;
  }
  return 0;
}

// Sorts and deduplicates a flat list of k-tuples.
void normalize(std::vector<int>& flat, int k) {
  std::size_t count = flat.size() / k;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * k, flat.begin() + (a + 1) * k,
                                        flat.begin() + b * k, flat.begin() + (b + 1) * k);
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<int> out;
  out.reserve(flat.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    std::size_t i = order[idx];
    if (idx > 0) {
      std::size_t j = order[idx - 1];
      if (std::equal(flat.begin() + i * k, flat.begin() + (i + 1) * k, flat.begin() + j * k))
        continue;
    }
    out.insert(out.end(), flat.begin() + i * k, flat.begin() + (i + 1) * k);
  }
  flat = std::move(out);
}

// Calls f(tuple) for every tuple in {0..n-1}^k that contains `must`.
template <class F>
void for_each_tuple_containing(int n, int k, int must, F&& f) {
  std::vector<int> t(k, 0);
  if (n == 0) return;
  while (true) {
    if (std::find(t.begin(), t.end(), must) != t.end()) f(std::span<const int>(t));
    int p = k - 1;
    while (p >= 0 && ++t[p] == n) t[p--] = 0;
    if (p < 0) return;
  }
}

template <class F>
void for_each_tuple(int n, int k, F&& f) {
  if (n == 0) return;
  std::vector<int> t(k, 0);
  while (true) {
    f(std::span<const int>(t));
    int p = k - 1;
    while (p >= 0 && ++t[p] == n) t[p--] = 0;
    if (p < 0) return;
  }
}

}  // namespace

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (r.arity < 1) throw ValidationError("relation '" + r.name + "' has non-positive arity");
    if (!seen.insert(r.name).second) throw ValidationError("duplicate relation name '" + r.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  return std::nullopt;
}

SignaturePtr make_signature(std::vector<RelationSymbol> relations) {
  return std::make_shared<const Signature>(std::move(relations));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || *a == *b;
}

Structure::Structure() : Structure(make_signature({}), 0) {}

Structure::Structure(SignaturePtr signature, int size) {
  if (size < 0) throw ValidationError("negative structure size");
  auto d = std::make_shared<Data>();
  d->relations.resize(signature->size());
  d->signature = std::move(signature);
  d->size = size;
  data_ = std::move(d);
}

std::size_t Structure::tuple_count(std::size_t r) const {
  return data_->relations.at(r).size() / signature().arity(r);
}

std::span<const int> Structure::tuple(std::size_t r, std::size_t i) const {
  int k = signature().arity(r);
  return std::span<const int>(data_->relations.at(r)).subspan(i * k, k);
}

std::vector<Tuple> Structure::tuples(std::size_t r) const {
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < tuple_count(r); ++i) {
    auto t = tuple(r, i);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

bool Structure::holds(std::size_t r, std::span<const int> t) const {
  const auto& flat = data_->relations[r];
  int k = signature().arity(r);
  std::size_t lo = 0, hi = flat.size() / k;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare_tuple(flat, k, mid, t);
    if (c == 0) return true;
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return false;
}

bool Structure::bare() const {
  return std::all_of(data_->relations.begin(), data_->relations.end(),
                     [](const auto& r) { return r.empty(); });
}

bool operator==(const Structure& a, const Structure& b) {
  if (a.data_ == b.data_) return true;
  return a.size() == b.size() && same_signature(a.signature_ptr(), b.signature_ptr()) &&
         a.data_->relations == b.data_->relations;
}

std::strong_ordering operator<=>(const Structure& a, const Structure& b) {
  if (a.data_ == b.data_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (!same_signature(a.signature_ptr(), b.signature_ptr())) {
    if (a.signature() < b.signature()) return std::strong_ordering::less;
    return std::strong_ordering::greater;
  }
  return a.data_->relations <=> b.data_->relations;
}

Structure::Builder::Builder(SignaturePtr signature, int size) {
  if (size < 0) throw ValidationError("negative structure size");
  data_ = std::make_shared<Data>();
  data_->relations.resize(signature->size());
  data_->signature = std::move(signature);
  data_->size = size;
}

Structure::Builder& Structure::Builder::add(std::size_t r, std::span<const int> t) {
  if (r >= data_->signature->size()) throw ValidationError("relation index out of range");
  if (static_cast<int>(t.size()) != data_->signature->arity(r))
    throw ValidationError("tuple arity mismatch for relation '" + data_->signature->name(r) + "'");
  for (int v : t)
    if (v < 0 || v >= data_->size) throw ValidationError("tuple index out of range");
  data_->relations[r].insert(data_->relations[r].end(), t.begin(), t.end());
  return *this;
}

Structure::Builder& Structure::Builder::add(std::string_view relation, std::initializer_list<int> t) {
  auto r = data_->signature->find(relation);
  if (!r) throw ValidationError("unknown relation '" + std::string(relation) + "'");
  return add(*r, t);
}

Structure Structure::Builder::build() && {
  for (std::size_t r = 0; r < data_->relations.size(); ++r)
    normalize(data_->relations[r], data_->signature->arity(r));
  return Structure(std::shared_ptr<const Data>(std::move(data_)));
}

Structure empty_structure(SignaturePtr signature) { return Structure(std::move(signature), 0); }

std::strong_ordering operator<=>(const Embedding& a, const Embedding& b) {
  if (auto c = a.map <=> b.map; c != 0) return c;
  if (auto c = a.source <=> b.source; c != 0) return c;
  return a.target <=> b.target;
}

bool is_embedding(std::span<const int> map, const Structure& x, const Structure& y) {
  if (static_cast<int>(map.size()) != x.size())
    throw ValidationError("embedding map length does not match source size");
  for (int v : map)
    if (v < 0 || v >= y.size()) throw ValidationError("embedding map index out of range");
  if (!same_signature(x.signature_ptr(), y.signature_ptr())) return false;
  std::vector<char> used(y.size(), 0);
  for (int v : map) {
    if (used[v]) return false;
    used[v] = 1;
  }
  const auto& sig = x.signature();
  std::vector<int> image;
  for (std::size_t r = 0; r < sig.size(); ++r) {
    int k = sig.arity(r);
    bool ok = true;
    image.assign(k, 0);
    for_each_tuple(x.size(), k, [&](std::span<const int> t) {
      if (!ok) return;
      for (int p = 0; p < k; ++p) image[p] = map[t[p]];
      if (x.holds(r, t) != y.holds(r, image)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

void for_each_embedding(const Structure& x, const Structure& y,
                        const std::function<bool(std::span<const int>)>& visit) {
  if (!same_signature(x.signature_ptr(), y.signature_ptr()))
    throw ValidationError("embedding between structures of different signatures");
  const int n = x.size();
  const int m = y.size();
  if (n > m) return;
  const auto& sig = x.signature();
  std::vector<int> map(n, -1);
  std::vector<char> used(m, 0);
  std::vector<int> image;
  bool stop = false;

  auto consistent = [&](int i) {
    for (std::size_t r = 0; r < sig.size(); ++r) {
      int k = sig.arity(r);
      image.assign(k, 0);
      bool ok = true;
      for_each_tuple_containing(i + 1, k, i, [&](std::span<const int> t) {
        if (!ok) return;
        for (int p = 0; p < k; ++p) image[p] = map[t[p]];
        if (x.holds(r, t) != y.holds(r, image)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  };

  std::function<void(int)> go = [&](int i) {
    if (stop) return;
    if (i == n) {
      if (!visit(map)) stop = true;
      return;
    }
    for (int v = 0; v < m && !stop; ++v) {
      if (used[v]) continue;
      map[i] = v;
      if (consistent(i)) {
        used[v] = 1;
        go(i + 1);
        used[v] = 0;
      }
    }
    map[i] = -1;
  };
  go(0);
}

std::vector<Embedding> embeddings(const Structure& x, const Structure& y) {
  std::vector<Embedding> out;
  for_each_embedding(x, y, [&](std::span<const int> map) {
    out.push_back(Embedding{x, y, std::vector<int>(map.begin(), map.end())});
    return true;
  });
  return out;
}

Embedding identity_embedding(const Structure& x) {
  std::vector<int> map(x.size());
  std::iota(map.begin(), map.end(), 0);
  return Embedding{x, x, std::move(map)};
}

Embedding compose(const Embedding& g, const Embedding& f) {
  if (!(f.target == g.source)) throw ValidationError("composing embeddings with mismatched types");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  return Embedding{f.source, g.target, std::move(map)};
}

Structure relabel(const Structure& x, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != x.size()) throw ValidationError("relabeling has wrong length");
  Structure::Builder b(x.signature_ptr(), x.size());
  const auto& sig = x.signature();
  std::vector<int> t;
  for (std::size_t r = 0; r < sig.size(); ++r) {
    for (std::size_t i = 0; i < x.tuple_count(r); ++i) {
      auto s = x.tuple(r, i);
      t.assign(s.size(), 0);
      for (std::size_t p = 0; p < s.size(); ++p) t[p] = perm[s[p]];
      b.add(r, t);
    }
  }
  return std::move(b).build();
}

bool are_isomorphic(const Structure& x, const Structure& y) {
  if (!same_signature(x.signature_ptr(), y.signature_ptr()))
    throw ValidationError("isomorphism test between structures of different signatures");
  if (x.size() != y.size()) return false;
  return canonical_form(x).structure == canonical_form(y).structure;
}

InducedSubstructure induced_substructure(const Structure& y, std::span<const int> subset) {
  std::vector<int> position(y.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int v = subset[i];
    if (v < 0 || v >= y.size()) throw ValidationError("subset index out of range");
    if (position[v] != -1) throw ValidationError("subset indices are not distinct");
    position[v] = static_cast<int>(i);
  }
  const int k = static_cast<int>(subset.size());
  Structure::Builder b(y.signature_ptr(), k);
  const auto& sig = y.signature();
  std::vector<int> t;
  for (std::size_t r = 0; r < sig.size(); ++r) {
    for (std::size_t i = 0; i < y.tuple_count(r); ++i) {
      auto s = y.tuple(r, i);
      t.assign(s.size(), 0);
      bool inside = true;
      for (std::size_t p = 0; p < s.size() && inside; ++p) {
        t[p] = position[s[p]];
        inside = t[p] >= 0;
      }
      if (inside) b.add(r, t);
    }
  }
  Structure sub = std::move(b).build();
  Embedding inc{sub, y, std::vector<int>(subset.begin(), subset.end())};
  return InducedSubstructure{std::move(sub), std::move(inc)};
}

Structure restrict_to(const Structure& y, std::span<const int> subset) {
  return induced_substructure(y, subset).structure;
}

}  // namespace fraisse
