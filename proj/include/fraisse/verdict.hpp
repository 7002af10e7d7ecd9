#pragma once

#include <optional>
#include <utility>

namespace fraisse {

/// Outcome of a bounded check: pass, or a counterexample witness.
template <class Witness>
struct Verdict {
  std::optional<Witness> counterexample;

  bool pass() const noexcept { return !counterexample.has_value(); }
  explicit operator bool() const noexcept { return pass(); }

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(Witness w) { return Verdict{std::move(w)}; }
};

}  // namespace fraisse
