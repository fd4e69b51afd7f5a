#include <doctest.h>

#include <sstream>

#include "seifcalc/json_io.hpp"
#include "seifcalc_cli/cli.hpp"

using namespace seifcalc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = cli::dispatch(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string kTwoBindingSpec =
    R"({"genus":0,"interior":[[13,7]],"bindings":[{"pair":[1,0],"c":51,"b":1},{"pair":[2,-1],"c":25,"b":1}],"n":52})";

}  // namespace

TEST_CASE("seifert subcommands") {
  auto r = run({"seifert", "euler", "--input", "-"}, R"({"genus":0,"fibers":[[2,1],[2,-1],[2,-1]]})");
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");
  CHECK(run({"seifert", "euler", "2,1;2,-1;2,-1"}).out == "1/2\n");
  CHECK(run({"seifert", "e0", "2,1;2,-1;2,-1"}).out == "-1\n");
  CHECK(run({"--format", "json", "seifert", "h1", "2,1;2,-1;2,-1"}).out ==
        "{\"rank\":0,\"text\":\"Z/2 + Z/2\",\"torsion\":[2,2]}\n");
  CHECK(run({"seifert", "equal", "2,1;2,-1;2,-1", "-2,1;2,1;2,-1"}).out == "true\n");
  CHECK(run({"seifert", "lens", "13,6;2,1", "--format", "json"}).out == "{\"a\":25,\"b\":19}\n");
  auto v = run({"seifert", "verdict", "2,1;3,1;7,1", "--format", "json"});
  CHECK(Json::parse(v.out)["verdict"] == "Overtwisted");
  CHECK(run({"seifert", "normalize", "-3,4;3,1;2,1", "--format", "json"}).code == 0);
}

TEST_CASE("exit codes") {
  auto bad = run({"seifert", "euler", "2,2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("coprime") != std::string::npos);
  CHECK(run({"seifert", "euler"}).code == 1);
  CHECK(run({"seifert", "euler", "2,1", "--input", "-"}, "3,1").code == 1);
  CHECK(run({"seifert", "euler", "--input", "-"}, "{not json").code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--format", "xml", "cusp", "bound", "2", "3"}).code == 1);
  CHECK(run({"cusp", "bound", "4", "6"}).code == 1);
  CHECK(run({"cobordism", "framing", "13", "6", "8", "61", "5"}).code == 2);
  CHECK(run({"openbook", "solve-dagger", "2", "2", "2"}).code == 2);
  CHECK(run({"openbook", "single", "1,0;2,1;6,1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cusp subcommands") {
  CHECK(run({"cusp", "bound", "2", "3"}).out == "9\n");
  auto inv = Json::parse(run({"--format", "json", "cusp", "invariants", "3", "5"}).out);
  CHECK(inv["compare"] == "EQ");
  CHECK(inv["dual"] == Json::parse("[2,2]"));
  auto cls = Json::parse(run({"--format", "json", "cusp", "classify", "2", "3", "9"}).out);
  CHECK(cls["case"] == "Above");
  CHECK(run({"cusp", "fillable", "2", "3", "10"}).out == "BeyondBound\n");
  auto cat = run({"cusp", "catalog", "--max-d", "16"});
  CHECK(cat.code == 0);
  std::istringstream rows(cat.out);
  std::string line;
  int n = 0;
  while (std::getline(rows, line)) {
    Json row = Json::parse(line);
    CHECK(row["matches"] == true);
    CHECK(row["within_bound"] == true);
    ++n;
  }
  CHECK(n > 10);
}

TEST_CASE("openbook and cobordism subcommands") {
  CHECK(run({"openbook", "solve-dagger", "2", "3", "6", "--format", "json"}).out == "[1,1,1]\n");
  auto single = Json::parse(run({"--format", "json", "openbook", "single", "-3,4;3,1;2,1"}).out);
  CHECK(single["bindings"][0]["p"] == 9);
  CHECK(single["bindings"][0]["orientation"] == "-");
  auto built = Json::parse(run({"--format", "json", "openbook", "build", kTwoBindingSpec}).out);
  CHECK(built["chi"] == -48);
  auto att = Json::parse(run({"--format", "json", "cobordism", "attach", kTwoBindingSpec, "--targets", "2,3"}).out);
  CHECK(att["canonical_pairing"] == "-28");
  CHECK(att["f"] == Json::parse(R"(["24","5"])"));
  auto piped = run({"--format", "json", "cobordism", "pairing", "--input", "-", "--targets", "2,3"}, kTwoBindingSpec);
  CHECK(Json::parse(piped.out)["pairing"] == "-28");
  CHECK(run({"cobordism", "self-int", kTwoBindingSpec, "--targets", "2,3"}).out == "96\n");
  CHECK(run({"cobordism", "attach", kTwoBindingSpec, "--targets", "2"}).code == 1);
  auto fr = Json::parse(run({"--format", "json", "cobordism", "framing", "13", "6", "8", "61", "-2"}).out);
  CHECK(fr["F"] == "10/61");
  auto ratio = run({"--format", "json", "cobordism", "area-ratio", "1", "2", "2", "3", "1/26", "--actual", "50/23"});
  CHECK(ratio.code == 0);
  CHECK(Json::parse(ratio.out)["lower"] == "24/13");
  CHECK(run({"cobordism", "area-ratio", "1", "2", "2", "3", "1/26", "--actual", "3"}).code == 2);
}

TEST_CASE("plumbing subcommands") {
  auto boundary = run({"plumbing", "limak", "--graph", "figure1", "--a", "24,13,0,0,0,0,0,0,0,0"});
  CHECK(boundary.code == 2);
  auto ok = run({"--format", "json", "plumbing", "limak", "--graph", "figure1", "--a", "50,23,0,0,0,0,0,0,0,0"});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["solution"] == Json::parse(R"(["1","2","27","52","24","20","16","12","8","4"])"));
  CHECK(run({"plumbing", "limak", "--graph", "figure1", "--a", "1,2"}).code == 1);
  auto form = Json::parse(run({"--format", "json", "plumbing", "form", "--graph", "figure1"}).out);
  CHECK(form["determinant"] == -49);
  CHECK(form["definiteness"] == "NotNegativeDefinite");
  auto mat = Json::parse(run({"--format", "json", "plumbing", "matrix", "--graph", "figure1-single-cusp"}).out);
  CHECK(mat.size() == 9);
  auto star = Json::parse(run({"--format", "json", "plumbing", "star", "--graph", "figure1"}).out);
  CHECK(star["center"] == 3);
  auto chain = run({"--format", "json", "plumbing", "star", "--graph", "-", "--center", "0"},
                   R"({"vertices":[-2,-2,-2,-7],"edges":[[0,1],[1,2],[2,3]]})");
  CHECK(chain.code == 0);
  auto res = Json::parse(run({"--format", "json", "plumbing", "resolve", "2", "13", "24"}).out);
  CHECK(res["determinant"] == 24);
}

TEST_CASE("verify subcommand") {
  auto all = run({"verify", "--all"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  auto par = run({"--format", "json", "verify", "--all", "--parallel"});
  auto ser = run({"--format", "json", "verify", "--all"});
  CHECK(par.out == ser.out);
  CHECK(Json::parse(ser.out)["failed"] == 0);
  CHECK(run({"verify", "--case", "lemma-7.4"}).out == "PASS lemma-7.4\n");
  CHECK(run({"verify", "--case", "no-such-case"}).code == 1);
  CHECK(run({"verify"}).code == 1);
  CHECK(run({"verify", "--case", "lemma-7.4", "--all"}).code == 1);
  CHECK(run({"verify", "--all", "--data", "/nonexistent/cases.json"}).code == 1);
}

TEST_CASE("outputs are deterministic") {
  for (int i = 0; i < 2; ++i) {
    auto a = run({"--format", "json", "cobordism", "attach", kTwoBindingSpec, "--targets", "2,3"});
    auto b = run({"--format", "json", "cobordism", "attach", kTwoBindingSpec, "--targets", "2,3"});
    CHECK(a.out == b.out);
  }
}
