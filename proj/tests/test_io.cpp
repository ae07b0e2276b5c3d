#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "gridrig/cli.hpp"
#include "gridrig/errors.hpp"
#include "gridrig/io.hpp"
#include "gridrig/isomorphism.hpp"

using namespace gridrig;
using namespace fixtures;
using io::Json;

namespace {

std::string schema_pointer(const Json& j) {
  try {
    io::framework_from_json(j);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<none>";
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "gridrig_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rationals serialize as strings") {
    CHECK(io::to_json(q("3/6")) == Json("1/2"));
    CHECK(io::to_json(q("-4")) == Json("-4"));
    CHECK(io::rational_from_json(Json("-6/4"), "") == q("-3/2"));
    CHECK(io::rational_from_json(Json(3), "") == 3);
    CHECK_THROWS_AS(io::rational_from_json(Json("1/0"), "/x"), SchemaError);
    CHECK_THROWS_AS(io::rational_from_json(Json(0.5), "/x"), SchemaError);
  }

  TEST_CASE("quotient, framework and sequence round-trip") {
    const auto g = gain_graph_example();
    CHECK(io::quotient_from_json(io::to_json(g)) == g);
    const auto f = sym_example();
    const auto back = io::framework_from_json(io::to_json(f));
    CHECK(back.placement() == f.placement());
    CHECK(back.norm() == f.norm());
    const auto s = extract_sequence(g, Mode::kSym);
    const auto s2 = io::sequence_from_json(io::to_json(s));
    CHECK(s2.moves == s.moves);
    CHECK(s2.base_graph == s.base_graph);
    CHECK(switching_isomorphic(replay(s2), g));
  }

  TEST_CASE("schema errors carry JSON pointers") {
    Json good = io::to_json(sym_example());
    CHECK(schema_pointer(good) == "<none>");
    Json j = good;
    j["quotient"]["edges"][2]["gain"] = 3;
    CHECK(schema_pointer(j) == "/quotient/edges/2/gain");
    j = good;
    j["reps"]["b"][1] = "x/y";
    CHECK(schema_pointer(j) == "/reps/b/1");
    j = good;
    j["reps"].erase("c");
    CHECK(schema_pointer(j) == "/reps/c");
    j = good;
    j["quotient"]["edges"][0]["u"] = "nope";
    CHECK(schema_pointer(j) == "/quotient/edges/0/u");
    j = good;
    j["norm"] = "l7";
    CHECK(schema_pointer(j) == "/norm");
    j = good;
    j["quotient"].erase("orbits");
    CHECK(schema_pointer(j) == "/quotient/orbits");
  }

  TEST_CASE("dump is stable with sorted keys") {
    const Json j = io::to_json(gain_graph_example());
    const auto text = io::dump(j);
    CHECK(text == io::dump(io::parse(text)));
    CHECK(text.find("\"edges\"") < text.find("\"orbits\""));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("sparsity of the single loop") {
    const auto path = temp_file("loop.json", io::dump(io::to_json(single_loop())));
    const auto r = run_cli({"sparsity", "-i", path, "--variant", "221"});
    CHECK(r.code == 0);
    CHECK(io::parse(r.out) == Json{{"sparse", true}, {"tight", true}});
  }

  TEST_CASE("analyze reports the symmetric example") {
    const auto path = temp_file("sym.json", io::dump(io::to_json(sym_example())));
    const auto r = run_cli({"analyze", "-i", path, "--flexes"});
    REQUIRE(r.code == 0);
    const auto j = io::parse(r.out);
    CHECK(j["report"]["sym_isostatic"] == true);
    CHECK(j["report"]["inf_rigid"] == false);
    CHECK(j["agree"] == true);
    CHECK(j["flexes"]["lifted_symmetric"].size() == 1);
  }

  TEST_CASE("exit codes") {
    const auto bad = temp_file("bad.json", R"({"orbits":["a"],"edges":[{"id":"l","u":"a","v":"a","gain":"x"}]})");
    const auto r = run_cli({"sparsity", "-i", bad});
    CHECK(r.code == 2);
    CHECK(io::parse(r.err)["pointer"] == "/edges/0/gain");
    const auto domain = temp_file("domain.json", R"({"orbits":["a"],"edges":[{"id":"l","u":"a","v":"a","gain":1}]})");
    CHECK(run_cli({"sparsity", "-i", domain}).code == 1);
    const auto loose = temp_file("loose.json", R"({"orbits":["a","b"],"edges":[{"id":"e","u":"a","v":"b","gain":1}]})");
    CHECK(run_cli({"construct", "-i", loose, "--mode", "sym"}).code == 1);
    CHECK(run_cli({"sparsity", "-i", temp_file("syntax.json", "{")}).code == 2);
    CHECK(run_cli({"sparsity"}).code == 2);
  }

  TEST_CASE("construct then realize round-trips through files") {
    const auto q = temp_file("g.json", io::dump(io::to_json(gain_graph_example())));
    const auto seq = (std::filesystem::temp_directory_path() / "gridrig_tests" / "seq.json").string();
    CHECK(run_cli({"construct", "-i", q, "--mode", "sym", "-o", seq}).code == 0);
    const auto a = run_cli({"realize", "-i", seq, "--mode", "sym", "--norm", "l1", "--seed", "4"});
    const auto b = run_cli({"realize", "-i", q, "--mode", "sym", "--norm", "l1", "--seed", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto fw = temp_file("fw.json", a.out);
    const auto rep = run_cli({"analyze", "-i", fw});
    CHECK(io::parse(rep.out)["report"]["sym_isostatic"] == true);
  }

  TEST_CASE("crosscheck and fuzz are deterministic") {
    const auto a = run_cli({"crosscheck", "--random", "50", "--max-orbits", "4", "--seed", "42"});
    const auto b = run_cli({"crosscheck", "--random", "50", "--max-orbits", "4", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(io::parse(a.out)["failures"] == 0);
    const auto f = run_cli({"fuzz", "--cases", "30", "--seed", "2"});
    CHECK(f.code == 0);
    CHECK(io::parse(f.out)["crosscheck_failures"] == 0);
  }
}
