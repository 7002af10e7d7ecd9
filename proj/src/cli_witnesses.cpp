#include <algorithm>
#include <sstream>

#include "fraisse/bcat.hpp"
#include "fraisse/bcat_checks.hpp"
#include "fraisse/classkit.hpp"
#include "fraisse/cli.hpp"
#include "fraisse/detail/cli_report.hpp"
#include "fraisse/permlab.hpp"
#include "fraisse/structure_category.hpp"

namespace fraisse::cli::detail {

namespace {

using StructB = BCategory<StructureCategory>;

Embedding perm_embedding(const char* small, const char* big, std::vector<int> positions) {
  return {perm_to_structure(Permutation::parse(small)), perm_to_structure(Permutation::parse(big)),
          std::move(positions)};
}

std::string perm_of(const Structure& x) { return structure_to_perm(x).to_string(); }

Report worked_examples(const Options& opts) {
  Report r;
  const int n = opts.max_size;
  r.bounds = size_bounds(opts);
  StructureCategory all(builtin_class("all_permutations"));
  StructureCategory sep(builtin_class("separable_permutations"));
  StructureCategory sets(builtin_class("sets"));
  StructureCategory matchings(builtin_class("matchings"));
  // 123 into the first and into the last three positions.
  const auto b = perm_embedding("123", "1342", {0, 1, 2});
  const auto c = perm_embedding("123", "3124", {1, 2, 3});

  r.timed("permutations", [&] {
    const auto inflated = inflation(Permutation::parse("231"), std::vector{Permutation::parse("12"),
                                                                           Permutation::parse("321"),
                                                                           Permutation::parse("3412")});
    r.add(verdict("inflation_231[12,321,3412]", inflated.to_string() == "569873412", inflated.to_string()));

    std::ostringstream out, err;
    const int code = run({"perm", "inflate", "231", "12", "321", "3412", "--format", "text"}, out, err);
    r.add(verdict("cli_perm_inflate", code == 0 && out.str() == "569873412\n", out.str()));

    const auto p = perm_to_structure(Permutation::parse("41352"));
    const std::vector<int> keep{0, 1, 3, 4};  // drop the position holding 3
    const auto deleted = perm_of(restrict_to(p, keep));
    r.add(verdict("41352_minus_3_is_3142", deleted == "3142", deleted));
    r.add(verdict("41352_contains_3142", contains_pattern(Permutation::parse("41352"), Permutation::parse("3142"))));
    r.add(verdict("41352_not_separable", !is_separable(Permutation::parse("41352"))));
    r.add(verdict("2413_not_separable", !is_separable(Permutation::parse("2413"))));
  });

  r.timed("separable_hereditary", [&] {
    auto v = check_hereditary(sep.structure_class(), 5);
    r.add(verdict("separable_hereditary_5", v.pass(), v.pass() ? Json() : Json(v.counterexample->member)));
  });

  r.timed("unique_amalgam", [&] {
    auto am = amalgamation_set(all, b, c);
    Json got = Json::array();
    for (const auto& a : am) got.push_back(perm_of(a.apex));
    r.add(verdict("all_permutations_amalgam_is_41352", am.size() == 1 && perm_of(am[0].apex) == "41352", got));
    r.add(verdict("separable_span_has_no_amalgam", amalgamation_set(sep, b, c).empty()));
  });

  r.timed("matchings", [&] {
    const auto vertex = enumerate_class(matchings.structure_class(), 1).front();
    const auto pairs = enumerate_class(matchings.structure_class(), 2);
    const auto edge = *std::find_if(pairs.begin(), pairs.end(), [](const Structure& x) { return !x.bare(); });
    const auto homs = matchings.homs(vertex, edge);
    const bool ok = !homs.empty() && self_amalgamations(matchings, homs.front()).size() == 1 &&
                    is_epimorphism_in_A(matchings, homs.front());
    r.add(verdict("matchings_vertex_in_edge_is_epi", ok, edge));
    auto v = is_A_category(matchings, 3);
    const bool witness_ok = !v.pass() && v.counterexample->f.source.size() == 1 && v.counterexample->f.target.size() == 2;
    r.add(verdict("matchings_not_A_category", witness_ok));
  });

  r.timed("a_category", [&] {
    r.add(verdict("sets_A_category", is_A_category(sets, n).pass()));
    r.add(verdict("separable_A_category", is_A_category(sep, n).pass()));
  });

  r.timed("separable_ap_jep", [&] {
    auto ap = has_amalgamation_property(sep, n);
    Json w;
    if (!ap.pass())
      w = {perm_of(ap.counterexample->b.source), perm_of(ap.counterexample->b.target),
           perm_of(ap.counterexample->c.target)};
    r.add(verdict("separable_fails_AP", !ap.pass(), w));
    r.add(verdict("separable_JEP", has_joint_embedding(sep, n).pass()));
  });

  r.timed("separable_bcat", [&] {
    StructB bs{sep};
    auto f = bs.make(bs.atom(b.target), bs.atom(b.source), {0}, {b});
    auto g = bs.make(bs.atom(c.target), bs.atom(c.source), {0}, {c});
    auto fp = bs.fiber_product(f, g);
    r.add(verdict("separable_fiber_product_is_empty", fp.object.empty(), fp.object));
    r.add(verdict("separable_degenerate", !is_nondegenerate(bs, n).pass()));
  });

  r.timed("epi_orbit_surjective", [&] {
    StructB bs{sets};
    bool ok = true;
    for (const auto& x : bs.objects(2, 2))
      for (const auto& y : bs.objects(2, 2))
        for (const auto& f : bs.homs(x, y)) {
          std::vector<char> hit(y.size(), 0);
          for (int i : bs.orbit_map(f)) hit[i] = 1;
          ok = ok && (bs.is_epi(f) == std::all_of(hit.begin(), hit.end(), [](char h) { return h; }));
        }
    r.add(verdict("sets_epi_iff_orbit_map_surjective", ok));
  });
  return r;
}

}  // namespace

void add_witness_command(CLI::App& app, Options& opts, Action& action) {
  auto* cmd = app.add_subcommand("paper-witnesses", "Reproduce the worked examples");
  cmd->callback([&opts, &action] { action = [&opts] { return worked_examples(opts); }; });
}

}  // namespace fraisse::cli::detail
