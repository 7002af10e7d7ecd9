#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fraisse/bcat_checks.hpp"
#include "fraisse/json_io.hpp"

namespace fraisse::cli::detail {

struct Options {
  std::string format = "json";
  bool no_timings = false;
  int max_size = 4;
  int max_atoms = 2;
  int probe_size = 3;
  int probe_atoms = 2;
  bool probe_size_given = false;
};

struct Report {
  Json bounds;  // null when the command takes no bounds
  std::vector<AxiomResult> verdicts;
  Json result;
  std::string text;  // replaces the verdict listing in text format
  std::vector<std::pair<std::string, double>> timings;

  bool pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
  void add(AxiomResult r) { verdicts.push_back(std::move(r)); }
  void add(const AxiomReport& r) {
    for (const auto& v : r.results) verdicts.push_back(v);
  }

  // Runs f and records its wall time in milliseconds.
  template <class F>
  auto timed(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      timings.emplace_back(name, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto r = f();
      finish();
      return r;
    }
  }
};

using Action = std::function<Report()>;

inline Json size_bounds(const Options& o) { return Json{{"max_size", o.max_size}}; }
inline Json atom_bounds(const Options& o) { return Json{{"max_size", o.max_size}, {"max_atoms", o.max_atoms}}; }
inline Json suite_bounds(const Options& o) {
  return Json{{"max_size", o.max_size},
              {"max_atoms", o.max_atoms},
              {"probe_size", o.probe_size},
              {"probe_atoms", o.probe_atoms}};
}
inline SuiteBounds suite(const Options& o) { return {o.max_size, o.max_atoms, o.probe_size, o.probe_atoms}; }

inline AxiomResult verdict(std::string name, bool pass, Json witness = nullptr) {
  return {std::move(name), pass, pass ? Json(nullptr) : std::move(witness)};
}

// Each registers its subcommands; the callback stores the action to run.
void add_structure_commands(CLI::App& app, Options& opts, Action& action);
void add_bcat_commands(CLI::App& app, Options& opts, Action& action);
void add_gset_commands(CLI::App& app, Options& opts, Action& action);
void add_witness_command(CLI::App& app, Options& opts, Action& action);

}  // namespace fraisse::cli::detail
