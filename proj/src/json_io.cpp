#include "fraisse/json_io.hpp"

#include "fraisse/error.hpp"

namespace fraisse {

void to_json(Json& j, const Signature& sig) {
  j = Json::array();
  for (const auto& r : sig.relations()) j.push_back({{"name", r.name}, {"arity", r.arity}});
}

void to_json(Json& j, const Structure& x) {
  Json rels = Json::object();
  const auto& sig = x.signature();
  for (std::size_t r = 0; r < sig.size(); ++r) rels[sig.name(r)] = x.tuples(r);
  j = Json{{"signature", sig}, {"size", x.size()}, {"relations", rels}};
  if (same_signature(x.signature_ptr(), permutation_signature()) && is_pair_of_total_orders(x))
    j["perm"] = structure_to_perm(x).to_string();
}

void to_json(Json& j, const Embedding& e) {
  j = Json{{"source", e.source}, {"target", e.target}, {"map", e.map}};
}

void to_json(Json& j, const Permutation& p) { j = p.to_string(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

SignaturePtr signature_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("signature must be an array");
  std::vector<RelationSymbol> rels;
  for (const auto& r : j) rels.push_back({get_field<std::string>(r, "name"), get_field<int>(r, "arity")});
  return make_signature(std::move(rels));
}

Structure structure_from_json(const Json& j, const SignaturePtr& expected) {
  if (j.is_string()) return perm_to_structure(Permutation::parse(j.get<std::string>()));
  if (!j.is_object()) throw ValidationError("structure must be an object");
  if (j.contains("perm") && !j.contains("relations")) {
    Structure x = perm_to_structure(Permutation::parse(get_field<std::string>(j, "perm")));
    if (expected && !same_signature(expected, x.signature_ptr()))
      throw ValidationError("permutation given for a class over another signature");
    return x;
  }
  SignaturePtr sig = expected;
  if (j.contains("signature")) {
    sig = signature_from_json(j.at("signature"));
    if (expected && !same_signature(expected, sig)) throw ValidationError("structure has the wrong signature");
    if (expected) sig = expected;
  }
  if (!sig) throw ValidationError("structure needs a signature");
  const int size = get_field<int>(j, "size");
  if (size < 0) throw ValidationError("negative structure size");
  Structure::Builder b(sig, size);
  if (j.contains("relations")) {
    const auto& rels = j.at("relations");
    if (!rels.is_object()) throw ValidationError("relations must be an object");
    for (const auto& [name, tuples] : rels.items()) {
      auto r = sig->find(name);
      if (!r) throw ValidationError("unknown relation '" + name + "'");
      if (!tuples.is_array()) throw ValidationError("tuples of '" + name + "' must be an array");
      for (const auto& t : tuples) {
        std::vector<int> tuple;
        try {
          tuple = t.get<std::vector<int>>();
        } catch (const Json::exception&) {
          throw ValidationError("bad tuple in relation '" + name + "'");
        }
        b.add(*r, tuple);
      }
    }
  }
  return std::move(b).build();
}

Embedding embedding_from_json(const Json& j, const SignaturePtr& expected, const Structure* source,
                              const Structure* target) {
  if (!j.is_object()) throw ValidationError("embedding must be an object");
  Structure s = j.contains("source") ? structure_from_json(j.at("source"), expected)
                : source             ? *source
                                     : throw ValidationError("embedding needs a source");
  Structure t = j.contains("target") ? structure_from_json(j.at("target"), expected)
                : target             ? *target
                                     : throw ValidationError("embedding needs a target");
  auto map = get_field<std::vector<int>>(j, "map");
  if (!is_embedding(map, s, t)) throw ValidationError("map is not an embedding");
  return Embedding{s, t, std::move(map)};
}

ClassPtr class_from_json(const Json& j) {
  if (j.is_string()) return builtin_class(j.get<std::string>());
  if (j.is_object() && j.contains("builtin")) return builtin_class(get_field<std::string>(j, "builtin"));
  if (j.is_object() && j.contains("product")) {
    const auto& p = j.at("product");
    if (!p.is_array() || p.size() != 2) throw ValidationError("product needs exactly two classes");
    return product_class(class_from_json(p[0]), class_from_json(p[1]));
  }
  throw ValidationError("unrecognized class descriptor");
}

ClassPtr class_from_string(std::string_view text) {
  auto trimmed = text.substr(text.find_first_not_of(" \t\n") == std::string_view::npos
                                 ? text.size()
                                 : text.find_first_not_of(" \t\n"));
  if (!trimmed.empty() && (trimmed.front() == '{' || trimmed.front() == '"')) return class_from_json(parse_json(text));
  return builtin_class(trimmed);
}

}  // namespace fraisse
