#pragma once

#include <functional>
#include <vector>

#include "fraisse/relstruct.hpp"

namespace fraisse::detail {

// A structure on {0..size-1} whose tuples are known except the "mixed" ones:
// tuples containing at least one left-only and one right-only point.
struct CompletionProblem {
  SignaturePtr signature;
  int size = 0;
  std::vector<int> left_only;
  std::vector<int> right_only;
  // Per relation, the decided tuples that hold.
  std::vector<std::vector<Tuple>> forced;
};

// Enumerates every assignment of the mixed tuples whose result satisfies
// `accept`, calling `visit` on each (return false to stop). Mixed tuples are
// decided in stages (right point j, left point k); with `prune` set, the
// structure induced on the points settled so far must already be accepted,
// which is sound exactly when `accept` is hereditary.
// Returns false if the visitor stopped the enumeration.
bool complete(const CompletionProblem& problem,
              const std::function<bool(const Structure&)>& accept, bool prune,
              const std::function<bool(const Structure&)>& visit);

}  // namespace fraisse::detail
