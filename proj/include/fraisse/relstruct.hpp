#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fraisse {

struct RelationSymbol {
  std::string name;
  int arity = 1;

  friend auto operator<=>(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Ordered list of relation symbols. Names are unique and arities positive.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<RelationSymbol> relations);

  const std::vector<RelationSymbol>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  int arity(std::size_t r) const { return relations_.at(r).arity; }
  const std::string& name(std::size_t r) const { return relations_.at(r).name; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<RelationSymbol> relations_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<RelationSymbol> relations);

/// Signatures compare by content; shared pointers are a fast path only.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

using Tuple = std::vector<int>;

/// A finite relational structure on the ground set {0, ..., size-1}.
///
/// Immutable once built. Copies share the underlying data, so passing
/// structures by value is cheap. Tuples of each relation are stored flat,
/// deduplicated and in lexicographic order, which makes equality and the
/// total order below purely structural.
class Structure {
 public:
  class Builder;

  /// The empty structure over the empty signature.
  Structure();
  /// A structure of the given size with no tuples.
  Structure(SignaturePtr signature, int size);

  const Signature& signature() const noexcept { return *data_->signature; }
  const SignaturePtr& signature_ptr() const noexcept { return data_->signature; }
  int size() const noexcept { return data_->size; }

  std::size_t tuple_count(std::size_t r) const;
  std::span<const int> tuple(std::size_t r, std::size_t i) const;
  std::span<const int> flat(std::size_t r) const { return data_->relations.at(r); }
  std::vector<Tuple> tuples(std::size_t r) const;
  bool holds(std::size_t r, std::span<const int> t) const;
  bool holds(std::size_t r, std::initializer_list<int> t) const {
    return holds(r, std::span<const int>(t.begin(), t.size()));
  }
  /// True when no relation has any tuple.
  bool bare() const;

  friend bool operator==(const Structure& a, const Structure& b);
  friend std::strong_ordering operator<=>(const Structure& a, const Structure& b);

 private:
  struct Data {
    SignaturePtr signature;
    int size = 0;
    std::vector<std::vector<int>> relations;
  };
  explicit Structure(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

class Structure::Builder {
 public:
  Builder(SignaturePtr signature, int size);

  /// Adds a tuple; throws ValidationError on a bad index or arity.
  Builder& add(std::size_t r, std::span<const int> t);
  Builder& add(std::size_t r, std::initializer_list<int> t) {
    return add(r, std::span<const int>(t.begin(), t.size()));
  }
  Builder& add(std::string_view relation, std::initializer_list<int> t);

  Structure build() &&;

 private:
  std::shared_ptr<Data> data_;
};

Structure empty_structure(SignaturePtr signature);

/// An injective map that preserves and reflects every relation.
struct Embedding {
  Structure source;
  Structure target;
  std::vector<int> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend std::strong_ordering operator<=>(const Embedding& a, const Embedding& b);
};

/// Checks the embedding conditions. Throws ValidationError when the map has
/// the wrong length or an index out of range.
bool is_embedding(std::span<const int> map, const Structure& x, const Structure& y);

/// Visits every embedding x -> y in lexicographic map order. The visitor
/// returns false to stop early.
void for_each_embedding(const Structure& x, const Structure& y,
                        const std::function<bool(std::span<const int>)>& visit);

/// All embeddings x -> y, lexicographic in the map.
std::vector<Embedding> embeddings(const Structure& x, const Structure& y);

Embedding identity_embedding(const Structure& x);

/// g o f. Throws ValidationError if f.target != g.source.
Embedding compose(const Embedding& g, const Embedding& f);

/// Relabels point i of x as perm[i].
Structure relabel(const Structure& x, std::span<const int> perm);

struct CanonicalForm {
  Structure structure;
  /// relabeling[i] is the label of point i of the input in `structure`.
  std::vector<int> relabeling;
};

/// Canonical representative of the isomorphism class of x.
///
/// Points are first partitioned by an iterated invariant refinement; the
/// result is the lexicographically least encoding over all relabelings
/// that respect the (canonically ordered) cells.
CanonicalForm canonical_form(const Structure& x);

/// Throws ValidationError on a signature mismatch.
bool are_isomorphic(const Structure& x, const Structure& y);

struct InducedSubstructure {
  Structure structure;
  Embedding inclusion;
};

/// The substructure induced on `subset`, relabeled 0..k-1 in subset order.
InducedSubstructure induced_substructure(const Structure& y, std::span<const int> subset);

/// Shorthand for induced_substructure(...).structure without the embedding.
Structure restrict_to(const Structure& y, std::span<const int> subset);

}  // namespace fraisse
