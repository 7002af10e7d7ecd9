#include <doctest.h>

#include <random>

#include "fraisse/error.hpp"
#include "fraisse/relstruct.hpp"
#include "oracles.hpp"

using namespace fraisse;

namespace {

SignaturePtr graph_sig() { return make_signature({{"edge", 2}}); }

Structure path3() {
  Structure::Builder b(graph_sig(), 3);
  b.add(0, {0, 1}).add(0, {1, 0}).add(0, {1, 2}).add(0, {2, 1});
  return std::move(b).build();
}

Structure random_structure(const SignaturePtr& sig, int n, std::mt19937& rng) {
  Structure::Builder b(sig, n);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t r = 0; r < sig->size(); ++r)
    for (const auto& t : oracle::all_tuples(n, sig->arity(r)))
      if (coin(rng)) b.add(r, t);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(make_signature({{"r", 0}}), ValidationError);
  CHECK_THROWS_AS(make_signature({{"r", 1}, {"r", 2}}), ValidationError);
  auto sig = make_signature({{"a", 1}, {"b", 2}});
  CHECK(sig->find("b") == 1u);
  CHECK_FALSE(sig->find("c").has_value());
}

TEST_CASE("builder rejects bad tuples and normalizes duplicates") {
  Structure::Builder b(graph_sig(), 2);
  CHECK_THROWS_AS(b.add(0, {0, 2}), ValidationError);
  CHECK_THROWS_AS(b.add(0, {0}), ValidationError);
  b.add(0, {1, 0}).add(0, {0, 1}).add(0, {1, 0});
  Structure s = std::move(b).build();
  CHECK(s.tuple_count(0) == 2);
  CHECK(s.holds(0, {0, 1}));
  CHECK_FALSE(s.holds(0, {0, 0}));
}

TEST_CASE("embeddings agree with brute force") {
  std::mt19937 rng(7);
  auto sig = make_signature({{"u", 1}, {"r", 2}});
  for (int trial = 0; trial < 40; ++trial) {
    Structure x = random_structure(sig, 2, rng);
    Structure y = random_structure(sig, 4, rng);
    std::vector<std::vector<int>> mine;
    for (const auto& e : embeddings(x, y)) mine.push_back(e.map);
    CHECK(mine == oracle::embeddings(x, y));
  }
}

TEST_CASE("embedding checks reflect relations") {
  Structure p = path3();
  Structure edge = restrict_to(p, std::vector<int>{0, 1});
  Structure non_edge = restrict_to(p, std::vector<int>{0, 2});
  CHECK(embeddings(edge, p).size() == 4);
  CHECK(embeddings(non_edge, p).size() == 2);
  CHECK_THROWS_AS(is_embedding(std::vector<int>{0}, edge, p), ValidationError);
  CHECK_THROWS_AS(is_embedding(std::vector<int>{0, 5}, edge, p), ValidationError);
}

TEST_CASE("composition and identity") {
  Structure p = path3();
  Structure edge = restrict_to(p, std::vector<int>{0, 1});
  auto f = embeddings(edge, p).front();
  auto id = identity_embedding(p);
  CHECK(compose(id, f) == f);
  CHECK(compose(f, identity_embedding(edge)) == f);
  CHECK_THROWS_AS(compose(f, f), ValidationError);
}

TEST_CASE("canonical form is an isomorphism invariant") {
  std::mt19937 rng(11);
  auto sig = make_signature({{"u", 1}, {"r", 2}});
  for (int trial = 0; trial < 60; ++trial) {
    Structure x = random_structure(sig, 4, rng);
    std::vector<int> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    Structure y = relabel(x, perm);
    auto cx = canonical_form(x);
    CHECK(cx.structure == canonical_form(y).structure);
    CHECK(relabel(x, cx.relabeling) == cx.structure);
    Structure z = random_structure(sig, 4, rng);
    CHECK((cx.structure == canonical_form(z).structure) == oracle::isomorphic(x, z));
  }
}

TEST_CASE("induced substructure") {
  Structure p = path3();
  auto sub = induced_substructure(p, std::vector<int>{2, 1});
  CHECK(sub.structure.size() == 2);
  CHECK(sub.structure.holds(0, {0, 1}));
  CHECK(sub.inclusion.map == std::vector<int>{2, 1});
  CHECK_THROWS_AS(induced_substructure(p, std::vector<int>{1, 1}), ValidationError);
  CHECK_THROWS_AS(induced_substructure(p, std::vector<int>{3}), ValidationError);
}

TEST_CASE("isomorphism across signatures throws") {
  CHECK_THROWS_AS(are_isomorphic(path3(), Structure(make_signature({{"lt", 2}}), 3)), ValidationError);
}
