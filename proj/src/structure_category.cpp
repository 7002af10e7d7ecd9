#include "fraisse/structure_category.hpp"

#include <algorithm>
#include <set>

#include "fraisse/detail/completion.hpp"
#include "fraisse/error.hpp"

namespace fraisse {

StructureCategory::StructureCategory(ClassPtr cls) : cls_(std::move(cls)) {
  if (!cls_) throw ValidationError("null class");
}

std::vector<Structure> StructureCategory::objects(int n) const {
  std::vector<Structure> out;
  for (auto& level : enumerate_upto(*cls_, std::min(n, cls_->cap())))
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Embedding> StructureCategory::homs(const Structure& x, const Structure& y) const {
  return embeddings(x, y);
}

Embedding StructureCategory::compose(const Embedding& g, const Embedding& f) const { return fraisse::compose(g, f); }

Embedding StructureCategory::identity(const Structure& x) const { return identity_embedding(x); }

bool StructureCategory::isomorphic(const Structure& x, const Structure& y) const { return are_isomorphic(x, y); }

std::vector<Structure> StructureCategory::initial_set() const {
  Structure e = empty_structure(cls_->signature());
  if (cls_->contains(e)) return {e};
  return {};
}

std::vector<AmalgamOf<Structure, Embedding>> StructureCategory::amalgamate(const Embedding& b,
                                                                           const Embedding& c) const {
  auto raw = run(b, c, 0);
  std::set<AmalgamOf<Structure, Embedding>> out;
  for (auto& a : raw) {
    auto cf = canonical_form(a.apex);
    Embedding rel{a.apex, cf.structure, cf.relabeling};
    out.insert({cf.structure, fraisse::compose(rel, a.left), fraisse::compose(rel, a.right)});
  }
  return {out.begin(), out.end()};
}

std::vector<AmalgamOf<Structure, Embedding>> StructureCategory::amalgamate_some(const Embedding& b,
                                                                                const Embedding& c,
                                                                                std::size_t limit) const {
  return run(b, c, limit);
}

namespace {

void check_member(const StructureClass& cls, const Structure& x) {
  if (!cls.contains(x)) throw ValidationError("structure is not a member of class '" + cls.name() + "'");
  if (x.size() > cls.cap())
    throw CapExceeded("class '" + cls.name() + "' is capped at size " + std::to_string(cls.cap()));
}

}  // namespace

// D is built on B's points 0..|B|-1 followed by one new point for each point of
// C outside im(c) that is not glued to a point of B outside im(b). The left leg
// is the identity on B; the right leg is fixed by the gluing, so distinct
// choices give cocones that are not isomorphic under the legs.
std::vector<AmalgamOf<Structure, Embedding>> StructureCategory::run(const Embedding& b, const Embedding& c,
                                                                     std::size_t limit) const {
  if (b.source != c.source) throw ValidationError("pre-amalgamation maps have different sources");
  check_member(*cls_, b.source);
  check_member(*cls_, b.target);
  check_member(*cls_, c.target);
  if (!is_embedding(b.map, b.source, b.target) || !is_embedding(c.map, c.source, c.target))
    throw ValidationError("pre-amalgamation map is not an embedding");

  const Structure& bs = b.target;
  const Structure& cs = c.target;
  const int nb = bs.size(), nc = cs.size();
  const auto& sig = cls_->signature();

  std::vector<int> forced_image(nc, -1);  // c' on im(c)
  for (std::size_t i = 0; i < c.map.size(); ++i) forced_image[c.map[i]] = b.map[i];
  std::vector<char> b_used(nb, 0);
  for (int v : b.map) b_used[v] = 1;
  std::vector<int> b_free, c_free;
  for (int v = 0; v < nb; ++v)
    if (!b_used[v]) b_free.push_back(v);
  for (int v = 0; v < nc; ++v)
    if (forced_image[v] < 0) c_free.push_back(v);

  std::vector<AmalgamOf<Structure, Embedding>> found;
  const bool hereditary = cls_->hereditary();
  auto accept = [&](const Structure& s) { return cls_->contains(s); };

  std::vector<int> cmap = forced_image;
  std::vector<char> glued(nb, 0);
  bool stop = false;

  auto finish = [&]() {
    int n = nb;
    std::vector<int> right = cmap;
    for (int v : c_free)
      if (right[v] < 0) right[v] = n++;
    // Points of D lying in both images must carry the same tuples from B and C.
    std::vector<int> back(n, -1);
    for (int v = 0; v < nc; ++v) back[right[v]] = v;
    std::vector<int> shared;
    for (int v = 0; v < nb; ++v)
      if (back[v] >= 0) shared.push_back(v);
    std::vector<int> shared_c;
    for (int v : shared) shared_c.push_back(back[v]);
    if (restrict_to(bs, shared) != restrict_to(cs, shared_c)) return;

    detail::CompletionProblem pr;
    pr.signature = sig;
    pr.size = n;
    pr.forced.resize(sig->size());
    for (std::size_t r = 0; r < sig->size(); ++r) {
      for (auto& t : bs.tuples(r)) pr.forced[r].push_back(t);
      for (auto t : cs.tuples(r)) {
        for (auto& v : t) v = right[v];
        pr.forced[r].push_back(t);
      }
    }
    for (int v = 0; v < nb; ++v)
      if (back[v] < 0) pr.left_only.push_back(v);
    for (int v = nb; v < n; ++v) pr.right_only.push_back(v);

    std::vector<int> left(nb);
    for (int v = 0; v < nb; ++v) left[v] = v;
    detail::complete(pr, accept, hereditary, [&](const Structure& d) {
      found.push_back({d, Embedding{bs, d, left}, Embedding{cs, d, right}});
      if (limit != 0 && found.size() >= limit) {
        stop = true;
        return false;
      }
      return true;
    });
  };

  // Partial matchings between c_free and b_free, gluing in increasing order.
  auto go = [&](auto& self, std::size_t i) -> void {
    if (stop) return;
    if (i == c_free.size()) {
      finish();
      return;
    }
    const int v = c_free[i];
    cmap[v] = -1;
    self(self, i + 1);
    for (int w : b_free) {
      if (stop) return;
      if (glued[w]) continue;
      glued[w] = 1;
      cmap[v] = w;
      self(self, i + 1);
      cmap[v] = -1;
      glued[w] = 0;
    }
  };
  go(go, 0);
  return found;
}

}  // namespace fraisse
