#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "permutokit/cli.hpp"
#include "permutokit/json_io.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = permutokit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kPermutohedron =
    R"({"ground":[1,2,3],"values":{"{}":0,"{1}":3,"{2}":3,"{3}":3,"{1,2}":5,"{1,3}":5,"{2,3}":5,"{1,2,3}":6}})";

}  // namespace

TEST_CASE("section count") {
  const auto r = run({"sections", "count"}, kPermutohedron);
  REQUIRE(r.code == 0);
  CHECK(r.doc()["count"] == 7);
  CHECK(r.doc()["schema"] == "permutokit/1");
  const auto t = run({"sections", "count", "--format", "table"}, kPermutohedron);
  CHECK(t.out == "7\n");
  const auto wrapped = run({"sections", "count"}, std::string(R"({"z":)") + kPermutohedron + "}");
  CHECK(wrapped.doc()["count"] == 7);
}

TEST_CASE("cone points at bound zero") {
  const auto r = run({"cone", "points", "--bound", "0"}, R"({"ground":[1,2,3],"rel":[[1,2]]})");
  REQUIRE(r.code == 0);
  CHECK(r.doc()["count"] == 1);
  CHECK(r.doc()["points"][0] == json::parse(R"({"coords":{"1":0,"2":0,"3":0}})"));
}

TEST_CASE("law checks") {
  const auto ok = run({"check", "o-bullet", "--size", "3"});
  CHECK(ok.code == 0);
  for (const auto& rep : ok.doc()["reports"]) CHECK(rep["passed"] == true);
  const auto bad = run({"check", "sigma", "--size", "3", "--mutate"});
  CHECK(bad.code == 1);
  const auto idx = run({"opens", "check-indexing", "--size", "3", "--mutate"});
  CHECK(idx.code == 1);
  CHECK(idx.doc()["passed"] == false);
}

TEST_CASE("seed determinism") {
  const auto a = run({"check", "points", "--size", "3", "--seed", "9", "--budget", "200"});
  const auto b = run({"check", "points", "--size", "3", "--seed", "9", "--budget", "200"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("composition operations") {
  CHECK(run({"comp", "tits"}, R"({"F":[[1,2],[3]],"G":[[1,3],[2]]})").doc()["composition"] ==
        json::parse("[[1],[2],[3]]"));
  CHECK(run({"comp", "refines"}, R"({"G":[[1,3],[2]],"F":[[1],[2],[3]]})").doc()["refines"] == false);
  CHECK(run({"comp", "restrict"}, R"({"H":[[1,2],[3],[4,5]],"S":[2,3,5]})").doc()["composition"] ==
        json::parse("[[2],[3],[5]]"));
  CHECK(run({"comp", "relabel"}, R"({"sigma":{"a":1,"b":2,"c":3},"F":[[1,2],[3]]})").doc()["composition"] ==
        json::parse(R"([["a","b"],["c"]])"));
  CHECK(run({"comp", "all", "--size", "3"}).doc()["count"] == 13);
}

TEST_CASE("preposet operations") {
  CHECK(run({"preposet", "enumerate", "--size", "3"}).doc()["count"] == 29);
  const auto c = run({"preposet", "comul"}, R"({"p":{"ground":[1,2],"rel":[[2,1]]},"S":[1],"T":[2]})").doc();
  CHECK(c["left"]["bottom"] == true);
  CHECK(run({"preposet", "total"}, "[[1],[2]]").doc()["preposet"]["rel"] == json::parse("[[1,2]]"));
}

TEST_CASE("other groups") {
  const auto eq = run({"bf", "equiv"},
                      R"({"z1":{"ground":[1,2],"values":{"0":0,"1":0,"2":0,"3":0}},
                          "z2":{"ground":[1,2],"values":{"0":0,"1":1,"2":1,"3":2}}})");
  CHECK(eq.doc()["h"] == json::parse(R"({"1":1,"2":1})"));
  const auto face = run({"plate", "face"}, R"({"H":[[1],[2]],"F":[[2],[1]],"z":{"ground":[1,2],"values":{"0":0,"1":0,"2":0,"3":0}},"h":{"1":0,"2":0}})");
  CHECK(face.doc()["contains"] == false);
  CHECK(face.doc().contains("escape"));
  const auto ev = run({"point", "eval"}, R"({"x":{"orbit":[[1,2]],"coords":{"1":"1","2":"2/5"}},"h":{"coords":{"1":1,"2":-1}}})");
  CHECK(ev.doc()["value"] == "5/2");
  const auto op = run({"opens", "of-preposet"}, R"({"ground":[1,2],"rel":[[1,2],[2,1]]})");
  CHECK(op.doc()["open"]["orbits"].size() == 1);
}

TEST_CASE("emitted JSON re-parses to the same value") {
  const auto basis = run({"sections", "basis"}, kPermutohedron).doc()["basis"];
  const auto back = permutokit::json_io::sections_from_json(basis);
  CHECK(permutokit::json_io::to_json(back) == basis);
}

TEST_CASE("errors") {
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"comp"}).code == 2);
  CHECK(run({"comp", "tits"}, "{not json").code == 2);
  const auto r = run({"preposet", "mul"}, R"({"p":{"ground":[1,2,3],"rel":[[1,2],[2,3]]},"q":{"ground":[4]}})");
  CHECK(r.code == 2);
  CHECK(r.err.find("transitive") != std::string::npos);
  CHECK(run({"sections", "count"}, R"({"schema":"permutokit/9","z":{}})").code == 2);
  CHECK(run({"check", "sigma", "--size", "13"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
