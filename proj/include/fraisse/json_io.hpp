#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "fraisse/bcat.hpp"
#include "fraisse/classkit.hpp"
#include "fraisse/permlab.hpp"
#include "fraisse/relstruct.hpp"

namespace fraisse {

using Json = nlohmann::json;

// Structures: {"signature":[{"name":..,"arity":..}], "size":n, "relations":{name:[[..],..]}}.
// Structures over the permutation signature also read {"perm":"1342"}.
void to_json(Json& j, const Signature& sig);
void to_json(Json& j, const Structure& x);
void to_json(Json& j, const Embedding& e);
void to_json(Json& j, const Permutation& p);

SignaturePtr signature_from_json(const Json& j);

/// `expected` fills in a missing "signature" and must match a present one.
/// Throws ValidationError on malformed input.
Structure structure_from_json(const Json& j, const SignaturePtr& expected = nullptr);

/// {"source":.., "target":.., "map":[..]}; the endpoints may be omitted when
/// `source` / `target` are given. Throws ValidationError unless the map is an
/// embedding.
Embedding embedding_from_json(const Json& j, const SignaturePtr& expected = nullptr,
                              const Structure* source = nullptr, const Structure* target = nullptr);

/// Class descriptors: a builtin name ("graphs"), {"builtin":"graphs"}, or
/// {"product":[d1, d2]}. Throws ValidationError on anything else.
ClassPtr class_from_json(const Json& j);
ClassPtr class_from_string(std::string_view text);

/// Parses text as JSON; throws ValidationError with the parser message.
Json parse_json(std::string_view text);

template <ACategory C>
void to_json(Json& j, const BObject<C>& x) {
  j = Json{{"atoms", Json::array()}};
  for (const auto& a : x.atoms) j["atoms"].push_back(a);
}

template <ACategory C>
void to_json(Json& j, const BMorphism<C>& f) {
  j = Json{{"source", f.source}, {"target", f.target}, {"a", f.index}, {"components", Json::array()}};
  for (const auto& c : f.components) j["components"].push_back(c);
}

}  // namespace fraisse
