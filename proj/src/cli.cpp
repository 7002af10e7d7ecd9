#include "fraisse/cli.hpp"

#include <algorithm>
#include <sstream>

#include "fraisse/classkit.hpp"
#include "fraisse/detail/cli_report.hpp"
#include "fraisse/error.hpp"
#include "fraisse/permlab.hpp"
#include "fraisse/structure_category.hpp"

namespace fraisse::cli {

namespace detail {

namespace {

bool is_perm_structure(const Structure& x) {
  return same_signature(x.signature_ptr(), permutation_signature()) && is_pair_of_total_orders(x);
}

// Permutation structures print as {"perm": "..."}, which is also accepted on input.
Json view(const Structure& x) {
  if (is_perm_structure(x)) return Json{{"perm", structure_to_perm(x).to_string()}};
  return x;
}

Json view(const Embedding& e) { return Json{{"source", view(e.source)}, {"target", view(e.target)}, {"map", e.map}}; }

Json view(const Amalgam<StructureCategory>& a) {
  return Json{{"apex", view(a.apex)}, {"left", a.left.map}, {"right", a.right.map}};
}

std::vector<Permutation> parse_perms(const std::vector<std::string>& words) {
  std::vector<Permutation> out;
  for (const auto& w : words) out.push_back(Permutation::parse(w));
  return out;
}

void add_perm(CLI::App& app, Action& action) {
  auto* perm = app.add_subcommand("perm", "Permutation utilities")->require_subcommand(1);
  auto words = std::make_shared<std::vector<std::string>>();

  auto* inflate = perm->add_subcommand("inflate", "Inflate OUTER by BLOCKS");
  inflate->add_option("perms", *words, "outer permutation followed by one block per entry")->required();
  inflate->callback([words, &action] {
    action = [words] {
      auto ps = parse_perms(*words);
      std::vector<Permutation> blocks(ps.begin() + 1, ps.end());
      Report r;
      const auto s = inflation(ps.front(), blocks).to_string();
      r.result = s;
      r.text = s;
      return r;
    };
  });

  auto* sep = perm->add_subcommand("separable", "Is the permutation separable");
  sep->add_option("perm", *words)->required()->expected(1);
  sep->callback([words, &action] {
    action = [words] {
      Report r;
      const bool s = is_separable(Permutation::parse(words->front()));
      r.result = s;
      r.text = s ? "true" : "false";
      return r;
    };
  });

  auto* contains = perm->add_subcommand("contains", "Does SIGMA contain the pattern TAU");
  contains->add_option("perms", *words, "sigma tau")->required()->expected(2);
  contains->callback([words, &action] {
    action = [words] {
      auto ps = parse_perms(*words);
      Report r;
      const bool c = contains_pattern(ps[0], ps[1]);
      r.result = c;
      r.text = c ? "true" : "false";
      return r;
    };
  });
}

void add_class(CLI::App& app, Options& opts, Action& action) {
  auto* cmd = app.add_subcommand("class", "Enumerate and check structure classes")->require_subcommand(1);
  auto desc = std::make_shared<std::string>();

  auto* en = cmd->add_subcommand("enumerate", "Members up to isomorphism, by size");
  en->add_option("--class", *desc, "builtin name or JSON descriptor")->required();
  en->callback([desc, &opts, &action] {
    action = [desc, &opts] {
      auto cls = class_from_string(*desc);
      Report r;
      r.bounds = size_bounds(opts);
      auto levels = r.timed("enumerate", [&] { return enumerate_upto(*cls, opts.max_size); });
      r.result = Json::array();
      for (const auto& level : levels)
        for (const auto& x : level) r.result.push_back(view(x));
      return r;
    };
  });

  auto* pr = cmd->add_subcommand("profile", "Number of members of each size");
  pr->add_option("--class", *desc)->required();
  pr->callback([desc, &opts, &action] {
    action = [desc, &opts] {
      auto cls = class_from_string(*desc);
      Report r;
      r.bounds = size_bounds(opts);
      r.result = r.timed("profile", [&] { return profile(*cls, opts.max_size).counts; });
      return r;
    };
  });

  auto* he = cmd->add_subcommand("hereditary", "Closure under substructures");
  he->add_option("--class", *desc)->required();
  he->callback([desc, &opts, &action] {
    action = [desc, &opts] {
      auto cls = class_from_string(*desc);
      Report r;
      r.bounds = size_bounds(opts);
      auto v = r.timed("hereditary", [&] { return check_hereditary(*cls, opts.max_size); });
      Json w;
      if (!v.pass()) w = {{"member", view(v.counterexample->member)}, {"subset", v.counterexample->subset}};
      r.add(verdict("hereditary", v.pass(), w));
      return r;
    };
  });
}

void add_amalgamation(CLI::App& app, Options& opts, Action& action) {
  auto desc = std::make_shared<std::string>();
  auto b_text = std::make_shared<std::string>();
  auto c_text = std::make_shared<std::string>();

  auto* am = app.add_subcommand("amalgamate", "Minimal amalgams of a span of embeddings");
  am->add_option("--class", *desc)->required();
  am->add_option("--b", *b_text, "embedding A -> B as JSON")->required();
  am->add_option("--c", *c_text, "embedding A -> C as JSON")->required();
  am->callback([=, &action] {
    action = [=] {
      auto cls = class_from_string(*desc);
      StructureCategory cat(cls);
      auto b = embedding_from_json(parse_json(*b_text), cls->signature());
      auto c = embedding_from_json(parse_json(*c_text), cls->signature());
      Report r;
      auto amalgams = r.timed("amalgamate", [&] { return amalgamation_set(cat, b, c); });
      r.result = Json::array();
      for (const auto& a : amalgams) r.result.push_back(view(a));
      return r;
    };
  });

  auto* ap = app.add_subcommand("check-ap", "Amalgamation property up to a size bound");
  ap->add_option("--class", *desc)->required();
  ap->callback([=, &opts, &action] {
    action = [=, &opts] {
      StructureCategory cat(class_from_string(*desc));
      Report r;
      r.bounds = size_bounds(opts);
      auto v = r.timed("amalgamation_property", [&] { return has_amalgamation_property(cat, opts.max_size); });
      Json w;
      if (!v.pass()) {
        const auto& [b, c] = *v.counterexample;
        w = {{"b", view(b)}, {"c", view(c)}};
        if (is_perm_structure(b.source) && is_perm_structure(b.target) && is_perm_structure(c.target))
          w["span"] = {structure_to_perm(b.source).to_string(), structure_to_perm(b.target).to_string(),
                       structure_to_perm(c.target).to_string()};
      }
      r.add(verdict("amalgamation_property", v.pass(), w));
      return r;
    };
  });

  auto* jep = app.add_subcommand("check-jep", "Joint embedding property up to a size bound");
  jep->add_option("--class", *desc)->required();
  jep->callback([=, &opts, &action] {
    action = [=, &opts] {
      StructureCategory cat(class_from_string(*desc));
      Report r;
      r.bounds = size_bounds(opts);
      auto v = r.timed("joint_embedding", [&] { return has_joint_embedding(cat, opts.max_size); });
      Json w;
      if (!v.pass()) w = {{"x", view(v.counterexample->x)}, {"y", view(v.counterexample->y)}};
      r.add(verdict("joint_embedding", v.pass(), w));
      return r;
    };
  });

  auto* acat = app.add_subcommand("check-acat", "Every non-isomorphism has a nontrivial self-amalgamation");
  acat->add_option("--class", *desc)->required();
  acat->callback([=, &opts, &action] {
    action = [=, &opts] {
      StructureCategory cat(class_from_string(*desc));
      Report r;
      r.bounds = size_bounds(opts);
      auto v = r.timed("a_category", [&] { return is_A_category(cat, opts.max_size); });
      Json w;
      if (!v.pass()) w = {{"f", view(v.counterexample->f)}};
      r.add(verdict("a_category", v.pass(), w));
      return r;
    };
  });
}

}  // namespace

void add_structure_commands(CLI::App& app, Options& opts, Action& action) {
  add_perm(app, action);
  add_class(app, opts, action);
  add_amalgamation(app, opts, action);
}

}  // namespace detail

namespace {

void print(const detail::Report& r, const detail::Options& opts, const std::vector<std::string>& args,
           std::ostream& out) {
  if (opts.format == "text") {
    if (!r.text.empty()) {
      out << r.text << '\n';
    } else {
      if (!r.bounds.is_null())
        for (const auto& [k, v] : r.bounds.items()) out << k << " = " << v.dump() << '\n';
      for (const auto& v : r.verdicts) {
        out << v.name << ": " << (v.pass ? "pass" : "fail");
        if (!v.pass && !v.witness.is_null()) out << "  " << v.witness.dump();
        out << '\n';
      }
      if (!r.result.is_null()) out << "result: " << r.result.dump() << '\n';
    }
    if (!opts.no_timings)
      for (const auto& [name, ms] : r.timings) out << "time " << name << ": " << ms << " ms\n";
    return;
  }
  Json j{{"command", args}, {"pass", r.pass()}};
  if (!r.bounds.is_null()) j["bounds"] = r.bounds;
  j["verdicts"] = Json::array();
  for (const auto& v : r.verdicts) {
    Json e{{"check", v.name}, {"pass", v.pass}};
    if (!v.pass) e["witness"] = v.witness;
    j["verdicts"].push_back(std::move(e));
  }
  if (!r.result.is_null()) j["result"] = r.result;
  if (!opts.no_timings) {
    j["timings_ms"] = Json::object();
    for (const auto& [name, ms] : r.timings) j["timings_ms"][name] = ms;
  }
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fraisse limits, B-categories and G-sets"};
  app.name("fraisse");
  app.require_subcommand(1);
  app.fallthrough();

  detail::Options opts;
  app.add_option("--format", opts.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timings", opts.no_timings, "omit timings from the report");
  app.add_option("--max-size", opts.max_size, "largest object size considered")->check(CLI::NonNegativeNumber);
  app.add_option("--max-atoms", opts.max_atoms, "most atoms per object")->check(CLI::NonNegativeNumber);
  auto* probe_size = app.add_option("--probe-size", opts.probe_size,
                                    "atom size bound for cancellation probes (default max-size + 1)")
                          ->check(CLI::NonNegativeNumber);
  auto* probe_atoms = app.add_option("--probe-atoms", opts.probe_atoms,
                                     "atom count bound for cancellation probes (default max-atoms)")
                          ->check(CLI::NonNegativeNumber);

  detail::Action action;
  detail::add_structure_commands(app, opts, action);
  detail::add_bcat_commands(app, opts, action);
  detail::add_gset_commands(app, opts, action);
  detail::add_witness_command(app, opts, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  // Non-injectivity of a map out of a k-point atom shows up on (k+1)-point probes.
  opts.probe_size_given = probe_size->count() > 0;
  if (!opts.probe_size_given) opts.probe_size = opts.max_size + 1;
  if (probe_atoms->count() == 0) opts.probe_atoms = opts.max_atoms;
  if (!action) {
    err << "error: no command given\n" << app.help();
    return kExitUsage;
  }

  try {
    auto report = action();
    print(report, opts, args, out);
    return report.pass() ? kExitPass : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace fraisse::cli
