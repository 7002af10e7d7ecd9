#include "fraisse/classkit.hpp"

#include <algorithm>
#include <set>

#include "fraisse/detail/completion.hpp"
#include "fraisse/error.hpp"

namespace fraisse {

StructureClass::StructureClass(std::string name, SignaturePtr signature, Predicate member, bool hereditary,
                               int cap, ClassPtr ambient)
    : name_(std::move(name)),
      signature_(std::move(signature)),
      member_(std::move(member)),
      hereditary_(hereditary),
      cap_(cap),
      ambient_(std::move(ambient)) {
  if (!hereditary_ && !ambient_)
    throw ValidationError("non-hereditary class '" + name_ + "' needs a hereditary ambient class");
}

bool StructureClass::contains(const Structure& x) const {
  return same_signature(x.signature_ptr(), signature_) && member_(x);
}

namespace {

bool symmetric_irreflexive(const Structure& x, std::size_t r) {
  for (std::size_t i = 0; i < x.tuple_count(r); ++i) {
    auto t = x.tuple(r, i);
    if (t[0] == t[1] || !x.holds(r, {t[1], t[0]})) return false;
  }
  return true;
}

int max_degree(const Structure& x, std::size_t r) {
  std::vector<int> deg(x.size(), 0);
  for (std::size_t i = 0; i < x.tuple_count(r); ++i) ++deg[x.tuple(r, i)[0]];
  return x.size() == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool strict_total_order(const Structure& x, std::size_t r) {
  const int n = x.size();
  for (int i = 0; i < n; ++i) {
    if (x.holds(r, {i, i})) return false;
    for (int j = i + 1; j < n; ++j)
      if (x.holds(r, {i, j}) == x.holds(r, {j, i})) return false;
  }
  for (std::size_t a = 0; a < x.tuple_count(r); ++a) {
    auto s = x.tuple(r, a);
    for (int k = 0; k < n; ++k)
      if (x.holds(r, {s[1], k}) && !x.holds(r, {s[0], k})) return false;
  }
  return true;
}

ClassPtr make_matchings() {
  static const SignaturePtr sig = make_signature({{"edge", 2}});
  return std::make_shared<StructureClass>(
      "matchings", sig,
      [](const Structure& x) { return symmetric_irreflexive(x, 0) && max_degree(x, 0) <= 1; }, true,
      kDefaultClassCap);
}

// Members of size n extended from the members of size n-1.
std::vector<Structure> extend_level(const StructureClass& cls, const std::vector<Structure>& previous,
                                    const std::vector<Structure>& singletons, int n, bool prune) {
  std::set<Structure> found;
  auto accept = [&](const Structure& s) { return cls.contains(s); };
  for (const auto& x : previous) {
    for (const auto& p : singletons) {
      detail::CompletionProblem pr;
      pr.signature = cls.signature();
      pr.size = n;
      pr.forced.resize(pr.signature->size());
      for (std::size_t r = 0; r < pr.signature->size(); ++r) {
        for (auto& t : x.tuples(r)) pr.forced[r].push_back(t);
        for (auto& t : p.tuples(r)) {
          for (auto& v : t) v = n - 1;
          pr.forced[r].push_back(t);
        }
      }
      for (int v = 0; v < n - 1; ++v) pr.left_only.push_back(v);
      pr.right_only.push_back(n - 1);
      detail::complete(pr, accept, prune, [&](const Structure& d) {
        found.insert(canonical_form(d).structure);
        return true;
      });
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Structure>> enumerate_levels(const StructureClass& cls, int n_max, bool prune) {
  if (n_max > cls.cap())
    throw CapExceeded("class '" + cls.name() + "' is capped at size " + std::to_string(cls.cap()));
  if (n_max < 0) return {};
  if (!cls.hereditary()) {
    auto levels = enumerate_levels(*cls.ambient(), n_max, true);
    for (auto& level : levels)
      std::erase_if(level, [&](const Structure& s) { return !cls.contains(s); });
    return levels;
  }
  const auto& sig = cls.signature();
  std::vector<std::vector<Structure>> levels(n_max + 1);
  Structure empty = empty_structure(sig);
  if (!cls.contains(empty)) return levels;
  levels[0].push_back(empty);
  if (n_max == 0) return levels;

  // All one-point structures: each relation either holds on (0,...,0) or not.
  std::vector<Structure> singletons;
  const std::size_t rels = sig->size();
  for (unsigned long mask = 0; mask < (1ul << rels); ++mask) {
    Structure::Builder b(sig, 1);
    for (std::size_t r = 0; r < rels; ++r)
      if (mask >> r & 1ul) b.add(r, std::vector<int>(sig->arity(r), 0));
    Structure s = std::move(b).build();
    if (cls.contains(s)) singletons.push_back(canonical_form(s).structure);
  }
  std::sort(singletons.begin(), singletons.end());
  levels[1] = singletons;
  for (int n = 2; n <= n_max; ++n) levels[n] = extend_level(cls, levels[n - 1], singletons, n, prune);
  return levels;
}

}  // namespace

ClassPtr builtin_class(std::string_view name) {
  static const SignaturePtr empty_sig = make_signature({});
  static const SignaturePtr order_sig = make_signature({{"lt", 2}});
  static const SignaturePtr graph_sig = make_signature({{"edge", 2}});

  if (name == "sets")
    return std::make_shared<StructureClass>("sets", empty_sig, [](const Structure&) { return true; }, true,
                                            kOrderClassCap);
  if (name == "empty")
    return std::make_shared<StructureClass>(
        "empty", empty_sig, [](const Structure& x) { return x.size() == 0; }, true, kOrderClassCap);
  if (name == "total_orders")
    return std::make_shared<StructureClass>(
        "total_orders", order_sig, [](const Structure& x) { return strict_total_order(x, 0); }, true,
        kOrderClassCap);
  if (name == "graphs")
    return std::make_shared<StructureClass>(
        "graphs", graph_sig, [](const Structure& x) { return symmetric_irreflexive(x, 0); }, true,
        kDefaultClassCap);
  if (name == "matchings") return make_matchings();
  if (name == "perfect_matchings") {
    return std::make_shared<StructureClass>(
        "perfect_matchings", graph_sig,
        [](const Structure& x) {
          if (!symmetric_irreflexive(x, 0)) return false;
          std::vector<int> deg(x.size(), 0);
          for (std::size_t i = 0; i < x.tuple_count(0); ++i) ++deg[x.tuple(0, i)[0]];
          return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
        },
        false, kDefaultClassCap, make_matchings());
  }
  if (name == "all_permutations") return permutation_class(all_permutations_class());
  if (name == "separable_permutations" || name == "separable") return permutation_class(separable_class());
  throw ValidationError("unknown class '" + std::string(name) + "'");
}

std::vector<std::string> builtin_class_names() {
  return {"sets",      "total_orders",     "graphs",           "matchings",
          "all_permutations", "separable_permutations", "perfect_matchings", "empty"};
}

ClassPtr permutation_class(const PermClass& cls) {
  auto contains = cls.contains;
  return std::make_shared<StructureClass>(
      cls.name, permutation_signature(),
      [contains](const Structure& x) { return is_pair_of_total_orders(x) && contains(structure_to_perm(x)); },
      true, kOrderClassCap);
}

std::vector<Structure> enumerate_class(const StructureClass& cls, int n) {
  return enumerate_levels(cls, n, cls.hereditary()).at(n);
}

std::vector<std::vector<Structure>> enumerate_upto(const StructureClass& cls, int n_max) {
  return enumerate_levels(cls, n_max, cls.hereditary());
}

ClassProfile profile(const StructureClass& cls, int n_max) {
  ClassProfile p;
  for (const auto& level : enumerate_upto(cls, n_max)) p.counts.push_back(level.size());
  return p;
}

Verdict<HereditaryWitness> check_hereditary(const StructureClass& cls, int n_max) {
  // Extension without pruning, so the enumeration itself does not presume heredity.
  auto levels = enumerate_levels(cls, n_max, false);
  for (const auto& level : levels) {
    for (const auto& y : level) {
      const int n = y.size();
      for (int k = 0; k < n; ++k) {
        std::vector<int> subset(k);
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
          subset.clear();
          for (int v = 0; v < n; ++v)
            if (pick[v]) subset.push_back(v);
          if (!cls.contains(restrict_to(y, subset)))
            return Verdict<HereditaryWitness>::fail({y, subset});
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
    }
  }
  return Verdict<HereditaryWitness>::ok();
}

namespace {

// Component `which` (0 or 1) of a pair structure, over the component signature.
Structure component_of(const Structure& x, const SignaturePtr& comp_sig, std::size_t rel_offset, bool first) {
  std::vector<int> pts;
  for (int v = 0; v < x.size(); ++v)
    if (x.holds(0, {v}) == first) pts.push_back(v);
  std::vector<int> pos(x.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  Structure::Builder b(comp_sig, static_cast<int>(pts.size()));
  std::vector<int> t;
  for (std::size_t r = 0; r < comp_sig->size(); ++r) {
    for (std::size_t i = 0; i < x.tuple_count(rel_offset + r); ++i) {
      auto s = x.tuple(rel_offset + r, i);
      t.assign(s.size(), 0);
      for (std::size_t p = 0; p < s.size(); ++p) t[p] = pos[s[p]];
      b.add(r, t);
    }
  }
  return std::move(b).build();
}

bool sorts_respected(const Structure& x, std::size_t n1, std::size_t n2) {
  for (std::size_t r = 1; r < 1 + n1 + n2; ++r) {
    const bool first = r < 1 + n1;
    for (std::size_t i = 0; i < x.tuple_count(r); ++i)
      for (int v : x.tuple(r, i))
        if (x.holds(0, {v}) != first) return false;
  }
  return true;
}

}  // namespace

ClassPtr product_class(ClassPtr c1, ClassPtr c2) {
  const auto& s1 = *c1->signature();
  const auto& s2 = *c2->signature();
  std::vector<RelationSymbol> rels{{"first", 1}};
  for (const auto& r : s1.relations()) rels.push_back({"1." + r.name, r.arity});
  for (const auto& r : s2.relations()) rels.push_back({"2." + r.name, r.arity});
  auto sig = make_signature(std::move(rels));
  const std::size_t n1 = s1.size(), n2 = s2.size();

  ClassPtr ambient;
  if (!c1->hereditary() || !c2->hereditary())
    ambient = product_class(c1->hereditary() ? c1 : c1->ambient(), c2->hereditary() ? c2 : c2->ambient());

  auto member = [c1, c2, n1, n2](const Structure& x) {
    if (!sorts_respected(x, n1, n2)) return false;
    return c1->contains(component_of(x, c1->signature(), 1, true)) &&
           c2->contains(component_of(x, c2->signature(), 1 + n1, false));
  };
  auto cls = std::make_shared<StructureClass>("product(" + c1->name() + "," + c2->name() + ")", sig, member,
                                              c1->hereditary() && c2->hereditary(),
                                              std::min(c1->cap(), c2->cap()), ambient);
  cls->components_ = {c1, c2};
  return cls;
}

Structure pair_structure(const StructureClass& product, const Structure& x1, const Structure& x2) {
  const auto& [c1, c2] = product.components();
  if (!c1 || !c2) throw ValidationError("class '" + product.name() + "' is not a product class");
  const int n1 = x1.size();
  Structure::Builder b(product.signature(), n1 + x2.size());
  for (int v = 0; v < n1; ++v) b.add(0, {v});
  std::vector<int> t;
  const std::size_t r1 = c1->signature()->size();
  for (std::size_t r = 0; r < r1; ++r)
    for (auto& s : x1.tuples(r)) b.add(1 + r, s);
  for (std::size_t r = 0; r < c2->signature()->size(); ++r) {
    for (auto s : x2.tuples(r)) {
      for (auto& v : s) v += n1;
      b.add(1 + r1 + r, s);
    }
  }
  return std::move(b).build();
}

std::pair<Structure, Structure> split_pair(const StructureClass& product, const Structure& x) {
  const auto& [c1, c2] = product.components();
  if (!c1 || !c2) throw ValidationError("class '" + product.name() + "' is not a product class");
  return {component_of(x, c1->signature(), 1, true),
          component_of(x, c2->signature(), 1 + c1->signature()->size(), false)};
}

}  // namespace fraisse
