#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fraisse/relstruct.hpp"
#include "fraisse/verdict.hpp"

namespace fraisse {

/// A permutation of {1..n} in one-line notation (1-indexed values).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless the values are exactly 1..n in some order.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  /// Digit strings ("41352") or comma-separated lists ("1,10,2,...").
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }

  /// Digits when n <= 9, comma-separated beyond.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// The pattern (order type) of a sequence of distinct integers.
Permutation standardize(std::span<const int> values);

std::vector<Permutation> permutations_of_length(int n);

/// Signature with two binary strict orders: "pos" (positions) and "val" (values).
SignaturePtr permutation_signature();

/// Point i is position i; "pos" orders positions and "val" orders values.
Structure perm_to_structure(const Permutation& sigma);

/// Inverse of perm_to_structure; throws ValidationError unless both
/// relations are strict total orders.
Permutation structure_to_perm(const Structure& x);

/// True when both relations of x are strict total orders.
bool is_pair_of_total_orders(const Structure& x);

bool contains_pattern(const Permutation& sigma, const Permutation& tau);

/// sigma[blocks...]; throws ValidationError on a block count mismatch.
Permutation inflation(const Permutation& sigma, std::span<const Permutation> blocks);

Permutation sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Avoids both 2413 and 3142.
bool is_separable_by_avoidance(const Permutation& sigma);
/// Splits recursively into sums and skew sums down to single points.
bool is_separable_by_decomposition(const Permutation& sigma);
bool is_separable(const Permutation& sigma);

struct PermClass {
  std::string name;
  std::function<bool(const Permutation&)> contains;
};

PermClass all_permutations_class();
PermClass separable_class();
PermClass avoidance_class(std::vector<Permutation> patterns);

struct InflationWitness {
  Permutation outer;
  std::vector<Permutation> blocks;
  Permutation result;
};

inline constexpr int kSubstitutionCap = 8;

/// Passes iff every inflation of members by nonempty members, of total
/// length <= n_max, is a member. Throws CapExceeded past kSubstitutionCap.
Verdict<InflationWitness> is_substitution_closed(const PermClass& cls, int n_max);

}  // namespace fraisse
