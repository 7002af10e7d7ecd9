#include <algorithm>

#include "fraisse/bcat.hpp"
#include "fraisse/bcat_checks.hpp"
#include "fraisse/bcat_quotients.hpp"
#include "fraisse/classkit.hpp"
#include "fraisse/detail/cli_report.hpp"
#include "fraisse/error.hpp"
#include "fraisse/gset_oracle.hpp"
#include "fraisse/structure_category.hpp"

namespace fraisse::cli::detail {

namespace {

using StructB = BCategory<StructureCategory>;

StructB::Object bobject_from_json(const StructureClass& cls, const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw ValidationError("object must be {\"atoms\": [structure, ...]}");
  StructB::Object x;
  for (const auto& a : j["atoms"]) {
    auto s = structure_from_json(a, cls.signature());
    if (!cls.contains(s)) throw ValidationError("atom is not a member of " + cls.name());
    x.atoms.push_back(std::move(s));
  }
  return x;
}

// Components may omit their endpoints: component i goes from target atom a[i]
// to source atom i.
StructB::Morphism bmorphism_from_json(const StructB& b, const Json& j) {
  const auto& cls = b.base().structure_class();
  for (const char* key : {"source", "target", "a", "components"})
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("morphism is missing \"") + key + "\"");
  auto source = bobject_from_json(cls, j["source"]);
  auto target = bobject_from_json(cls, j["target"]);
  auto index = j["a"].get<std::vector<int>>();
  if (index.size() != source.size() || j["components"].size() != source.size())
    throw ValidationError("morphism needs one index and one component per source atom");
  std::vector<Embedding> comps;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0 || index[i] >= static_cast<int>(target.size())) throw ValidationError("atom index out of range");
    const auto& c = j["components"][i];
    Json map = c.is_array() ? Json{{"map", c}} : Json{{"map", c.at("map")}};
    comps.push_back(embedding_from_json(map, cls.signature(), &target.atoms[index[i]], &source.atoms[i]));
  }
  return b.make(std::move(source), std::move(target), std::move(index), std::move(comps));
}

Json fiber_json(const StructB::FiberProduct& p) {
  return Json{{"object", p.object}, {"left", p.left}, {"right", p.right}};
}

void add_bcat(CLI::App& app, Options& opts, Action& action) {
  auto* cmd = app.add_subcommand("bcat", "Finite coproduct completion of a class")->require_subcommand(1);
  auto desc = std::make_shared<std::string>();
  auto f_text = std::make_shared<std::string>();
  auto g_text = std::make_shared<std::string>();
  auto x_text = std::make_shared<std::string>();

  auto* verify = cmd->add_subcommand("verify", "Run the axiom suite at bound");
  verify->add_option("--class", *desc)->required();
  verify->callback([=, &opts, &action] {
    action = [=, &opts] {
      StructB b{StructureCategory(class_from_string(*desc))};
      Report r;
      r.bounds = suite_bounds(opts);
      r.add(r.timed("axioms", [&] { return verify_axioms(b, suite(opts)); }));
      return r;
    };
  });

  auto* fiber = cmd->add_subcommand("fiber", "Fiber product of f: X -> Z and g: Y -> Z");
  fiber->add_option("--class", *desc)->required();
  fiber->add_option("--f", *f_text)->required();
  fiber->add_option("--g", *g_text)->required();
  fiber->callback([=, &action] {
    action = [=] {
      StructB b{StructureCategory(class_from_string(*desc))};
      auto f = bmorphism_from_json(b, parse_json(*f_text));
      auto g = bmorphism_from_json(b, parse_json(*g_text));
      if (!(f.target == g.target)) throw ValidationError("f and g have different targets");
      Report r;
      r.result = fiber_json(r.timed("fiber_product", [&] { return b.fiber_product(f, g); }));
      return r;
    };
  });

  auto* coeq = cmd->add_subcommand("coeq", "Coequalizer of parallel f, g: X -> Y");
  coeq->add_option("--class", *desc)->required();
  coeq->add_option("--f", *f_text)->required();
  coeq->add_option("--g", *g_text)->required();
  coeq->callback([=, &action] {
    action = [=] {
      StructB b{StructureCategory(class_from_string(*desc))};
      auto f = bmorphism_from_json(b, parse_json(*f_text));
      auto g = bmorphism_from_json(b, parse_json(*g_text));
      if (!(f.source == g.source) || !(f.target == g.target)) throw ValidationError("f and g are not parallel");
      Report r;
      r.result = r.timed("coequalizer", [&] { return Json(coequalizer(b, f, g)); });
      return r;
    };
  });

  auto* eff = cmd->add_subcommand("effective", "Effectivity of every equivalence relation on X");
  eff->add_option("--class", *desc)->required();
  eff->add_option("--object", *x_text, "object as {\"atoms\": [...]}")->required();
  eff->callback([=, &action] {
    action = [=] {
      StructB b{StructureCategory(class_from_string(*desc))};
      auto x = bobject_from_json(b.base().structure_class(), parse_json(*x_text));
      Report r;
      r.result = Json::array();
      Json ineffective = Json::array();
      r.timed("effectivity", [&] {
        for (const auto& rel : equivalence_relations(b, x)) {
          const bool e = is_effective(b, rel);
          r.result.push_back({{"relation", rel.subset}, {"effective", e}});
          if (!e) ineffective.push_back(rel.subset);
        }
      });
      r.add(verdict("effective", ineffective.empty(), {{"carrier", x}, {"relations", ineffective}}));
      return r;
    };
  });
}

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ValidationError("group must be {\"degree\": n, \"generators\": [[...], ...]}");
  return std::make_shared<const FiniteGroup>(j["degree"].get<int>(),
                                             j["generators"].get<std::vector<std::vector<int>>>());
}

StabilizerClass stab_class_from_json(const GroupPtr& g, const Json& j) {
  if (!j.is_array()) throw ValidationError("stabilizer class must be a list of subgroups");
  std::vector<Subgroup> members;
  for (const auto& s : j) {
    auto u = s.get<Subgroup>();
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (int e : u)
      if (e < 0 || e >= static_cast<int>(g->order())) throw ValidationError("element index out of range");
    if (!is_subgroup(*g, u)) throw ValidationError("member is not a subgroup");
    members.push_back(std::move(u));
  }
  return StabilizerClass(g, std::move(members));
}

void add_gset(CLI::App& app, Options& opts, Action& action) {
  auto* cmd = app.add_subcommand("gset", "Transitive G-sets with stabilizers in a class")->require_subcommand(1);
  auto group_text = std::make_shared<std::string>();
  auto stab_text = std::make_shared<std::string>();

  auto* verify = cmd->add_subcommand("verify", "Axioms, set-level oracle and effectivity");
  verify->add_option("--group", *group_text, "{\"degree\": n, \"generators\": [[...], ...]}")->required();
  verify->add_option("--stab-class", *stab_text, "subgroups as lists of element indices; all subgroups if omitted");
  verify->callback([=, &opts, &action] {
    action = [=, &opts] {
      auto g = group_from_json(parse_json(*group_text));
      auto e = stab_text->empty() ? StabilizerClass::full(g) : stab_class_from_json(g, parse_json(*stab_text));
      TransitiveB b{TransitiveCategory(e)};
      Report r;
      // Sizes are indices; unless told otherwise, probe with every transitive G-set.
      auto o = opts;
      if (!o.probe_size_given) o.probe_size = static_cast<int>(g->order());
      r.bounds = suite_bounds(o);
      const auto bounds = suite(o);
      r.add(r.timed("axioms", [&] { return verify_axioms(b, bounds); }));
      r.add(r.timed("fiber_functor", [&] { return fiber_functor_check(b, bounds); }));
      r.add(r.timed("double_coset_identity", [&] { return double_coset_identity(g); }));
      auto eff = r.timed("effectivity", [&] { return effectivity_report(b, bounds); });
      r.add(verdict("effective", eff.all_effective(), eff.witnesses));
      std::vector<std::vector<int>> elements;
      for (std::size_t i = 0; i < g->order(); ++i) elements.push_back(g->element(static_cast<int>(i)));
      r.result = {{"order", g->order()},
                  {"elements", elements},
                  {"stabilizer_class", e.members()},
                  {"effectivity", eff}};
      return r;
    };
  });
}

}  // namespace

void add_bcat_commands(CLI::App& app, Options& opts, Action& action) { add_bcat(app, opts, action); }

void add_gset_commands(CLI::App& app, Options& opts, Action& action) { add_gset(app, opts, action); }

}  // namespace fraisse::cli::detail
