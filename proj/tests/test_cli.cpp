#include <doctest.h>

#include <sstream>

#include "fraisse/cli.hpp"
#include "fraisse/json_io.hpp"
#include "fraisse/permlab.hpp"
#include "fraisse/structure_category.hpp"

using namespace fraisse;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kS3 = R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})";
const std::string kPoint = R"({"size":1,"relations":{}})";
const std::string kPair = R"({"size":2,"relations":{}})";

}  // namespace

TEST_CASE("perm subcommands") {
  auto r = invoke({"perm", "inflate", "231", "12", "321", "3412", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "569873412\n");

  r = invoke({"perm", "inflate", "231", "12", "321", "3412"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"] == "569873412");

  r = invoke({"perm", "separable", "41352", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  CHECK(invoke({"perm", "separable", "2413", "--format", "text"}).out == "false\n");
  CHECK(invoke({"perm", "separable", "3142", "--format", "text"}).out == "false\n");
  CHECK(invoke({"perm", "separable", "21", "--format", "text"}).out == "true\n");
  CHECK(invoke({"perm", "contains", "41352", "3142", "--format", "text"}).out == "true\n");
  CHECK(invoke({"perm", "contains", "12345", "21", "--format", "text"}).out == "false\n");

  // Beyond nine, comma-separated in and out.
  r = invoke({"perm", "inflate", "12", "1,2,3,4,5,6,7,8,9", "1", "--format", "text"});
  CHECK(r.out == "1,2,3,4,5,6,7,8,9,10\n");
  CHECK(invoke({"perm", "contains", "10,1,2,3,4,5,6,7,8,9", "21", "--format", "text"}).out == "true\n");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"perm", "separable", "4135"}).code == 2);
  CHECK(invoke({"perm", "separable", "41x52"}).code == 2);
  CHECK(invoke({"check-ap", "--class", "no_such_class"}).code == 2);
  auto r = invoke({"check-ap", "--class", R"({"builtin":)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("JSON") != std::string::npos);
  CHECK(invoke({"check-ap", "--class", "sets", "--format", "yaml"}).code == 2);
  CHECK(invoke({"check-ap", "--class", "sets", "--max-size", "-1"}).code == 2);
  CHECK(invoke({"amalgamate", "--class", "sets", "--b", "[1", "--c", "{}"}).code == 2);
  CHECK(invoke({"gset", "verify", "--group", kS3, "--stab-class", "[[0],[0,1]]"}).code == 2);
  CHECK(invoke({"gset", "verify", "--group", kS3, "--stab-class", "[[0,1,2]]"}).code == 2);
  CHECK(invoke({"gset", "verify", "--group", R"({"degree":3,"generators":[[0,0,1]]})"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("reports echo bounds and are deterministic without timings") {
  auto a = invoke({"check-jep", "--class", "graphs", "--max-size", "3", "--no-timings"});
  auto b = invoke({"check-jep", "--class", "graphs", "--max-size", "3", "--no-timings"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = a.json();
  CHECK(j["bounds"]["max_size"] == 3);
  CHECK(j["pass"] == true);
  CHECK(!j.contains("timings_ms"));
  CHECK(j["command"][0] == "check-jep");

  j = invoke({"check-acat", "--class", "sets"}).json();
  CHECK(j["bounds"]["max_size"] == 4);
  CHECK(j.contains("timings_ms"));

  j = invoke({"bcat", "verify", "--class", "sets", "--max-size", "1"}).json();
  CHECK(j["bounds"] == Json{{"max_size", 1}, {"max_atoms", 2}, {"probe_size", 2}, {"probe_atoms", 2}});
}

TEST_CASE("class subcommands") {
  auto r = invoke({"class", "profile", "--class", "graphs"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"] == Json{1, 1, 2, 4, 11});
  r = invoke({"class", "enumerate", "--class", "separable", "--max-size", "3"});
  CHECK(r.json()["result"].size() == 1 + 1 + 2 + 6);
  CHECK(r.json()["result"][2] == Json{{"perm", "12"}});
  CHECK(invoke({"class", "hereditary", "--class", "separable", "--max-size", "5"}).code == 0);
  CHECK(invoke({"class", "hereditary", "--class", "perfect_matchings"}).code == 1);
}

TEST_CASE("amalgamation checks report witnesses with exit 1") {
  auto r = invoke({"check-ap", "--class", "separable", "--max-size", "4", "--no-timings"});
  CHECK(r.code == 1);
  auto v = r.json()["verdicts"][0];
  CHECK(v["check"] == "amalgamation_property");
  CHECK(v["pass"] == false);
  CHECK(v["witness"]["span"][0] == "123");
  // The reported span really has no amalgam in the class.
  auto cls = builtin_class("separable");
  auto b = embedding_from_json(v["witness"]["b"], cls->signature());
  auto c = embedding_from_json(v["witness"]["c"], cls->signature());
  CHECK(amalgamation_set(StructureCategory(cls), b, c).empty());
  CHECK(!amalgamation_set(StructureCategory(builtin_class("all_permutations")), b, c).empty());

  CHECK(invoke({"check-ap", "--class", "sets"}).code == 0);
  CHECK(invoke({"check-ap", "--class", R"({"product":["sets","total_orders"]})", "--max-size", "3"}).code == 0);

  r = invoke({"check-acat", "--class", "matchings", "--max-size", "3"});
  CHECK(r.code == 1);
  auto f = r.json()["verdicts"][0]["witness"]["f"];
  CHECK(f["source"]["size"] == 1);
  CHECK(f["target"]["size"] == 2);
  CHECK(invoke({"check-acat", "--class", "total_orders"}).code == 0);
}

TEST_CASE("amalgamate a point into two 2-sets") {
  const std::string e = R"({"source":)" + kPoint + R"(,"target":)" + kPair + R"(,"map":[0]})";
  auto r = invoke({"amalgamate", "--class", "sets", "--b", e, "--c", e});
  CHECK(r.code == 0);
  auto res = r.json()["result"];
  REQUIRE(res.size() == 2);
  // Glue the free points or keep them apart.
  std::multiset<int> sizes{res[0]["apex"]["size"].get<int>(), res[1]["apex"]["size"].get<int>()};
  CHECK(sizes == std::multiset<int>{2, 3});

  r = invoke({"amalgamate", "--class", "separable", "--b", R"({"source":{"perm":"123"},"target":{"perm":"1342"},"map":[0,1,2]})",
           "--c", R"({"source":{"perm":"123"},"target":{"perm":"3124"},"map":[1,2,3]})"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"].empty());
  r = invoke({"amalgamate", "--class", "all_permutations", "--b",
           R"({"source":{"perm":"123"},"target":{"perm":"1342"},"map":[0,1,2]})", "--c",
           R"({"source":{"perm":"123"},"target":{"perm":"3124"},"map":[1,2,3]})"});
  REQUIRE(r.json()["result"].size() == 1);
  CHECK(r.json()["result"][0]["apex"]["perm"] == "41352");
}

TEST_CASE("bcat subcommands") {
  const std::string f = R"({"source":{"atoms":[)" + kPair + R"(]},"target":{"atoms":[)" + kPoint +
                        R"(]},"a":[0],"components":[[0]]})";
  auto r = invoke({"bcat", "fiber", "--class", "sets", "--f", f, "--g", f});
  CHECK(r.code == 0);
  auto atoms = r.json()["result"]["object"]["atoms"];
  REQUIRE(atoms.size() == 2);
  std::multiset<int> sizes{atoms[0]["size"].get<int>(), atoms[1]["size"].get<int>()};
  CHECK(sizes == std::multiset<int>{2, 3});

  // Components given with explicit map objects are accepted too.
  const std::string g = R"({"source":{"atoms":[)" + kPair + R"(]},"target":{"atoms":[)" + kPoint +
                        R"(]},"a":[0],"components":[{"map":[1]}]})";
  r = invoke({"bcat", "coeq", "--class", "sets", "--f", f, "--g", g});
  CHECK(r.code == 0);
  // (a, b) -> a and (a, b) -> b identify every point: the quotient is 1.
  CHECK(r.json()["result"]["source"]["atoms"][0]["size"] == 1);
  CHECK(r.json()["result"]["target"]["atoms"].size() == 1);
  CHECK(r.json()["result"]["target"]["atoms"][0]["size"] == 0);

  CHECK(invoke({"bcat", "coeq", "--class", "sets", "--f", f, "--g", R"({"source":{"atoms":[]}})"}).code == 2);
  const std::string bad = R"({"source":{"atoms":[)" + kPair + R"(]},"target":{"atoms":[)" + kPoint +
                          R"(]},"a":[0],"components":[[5]]})";
  CHECK(invoke({"bcat", "fiber", "--class", "sets", "--f", bad, "--g", f}).code == 2);

  // The swap relation on ordered pairs has unordered pairs as quotient, which
  // is not an object here.
  r = invoke({"bcat", "effective", "--class", "sets", "--object", R"({"atoms":[)" + kPair + "]}"});
  CHECK(r.code == 1);
  CHECK(r.json()["verdicts"][0]["witness"]["relations"].size() == 1);
  CHECK(invoke({"bcat", "effective", "--class", "sets", "--object", R"({"atoms":[)" + kPoint + "]}"}).code == 0);

  r = invoke({"bcat", "verify", "--class", "total_orders", "--max-size", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdicts"].size() == 19);
}

TEST_CASE("gset verify") {
  auto r = invoke({"gset", "verify", "--group", kS3});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["bounds"]["probe_size"] == 6);
  CHECK(j["result"]["order"] == 6);
  CHECK(j["result"]["stabilizer_class"].size() == 6);

  // E = {1, G}: the C2-coset relation on G/1 is not effective.
  r = invoke({"gset", "verify", "--group", kS3, "--stab-class", "[[0],[0,1,2,3,4,5]]", "--max-size", "6"});
  CHECK(r.code == 1);
  j = r.json();
  bool effective_failed = false;
  for (const auto& v : j["verdicts"])
    if (v["check"] == "effective") effective_failed = !v["pass"].get<bool>();
  CHECK(effective_failed);
  CHECK(j["result"]["effectivity"]["ineffective"].get<int>() >= 1);
}
