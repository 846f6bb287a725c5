#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + POLYCENTER_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("centers --all on the square") {
  const Run r = run("centers --in " + data("square.json") + " --all");
  CHECK(r.code == 0);
  const auto j = parsed(r);
  REQUIRE(j["centers"].size() == 4);
  for (const auto& c : j["centers"]) {
    CHECK(c["point"][0] == 0.5);
    CHECK(c["point"][1] == 0.5);
  }
}

TEST_CASE("line on the kite") {
  const Run r = run("line --in " + data("kite.json") + " --g1 centroid --g2 simple");
  CHECK(r.code == 0);
  CHECK(r.out.rfind(R"({"kind":"Line","point":[2.25,0],"direction":[1,0])", 0) == 0);
}

TEST_CASE("verify am-collinearity sweep") {
  const Run r = run("verify am-collinearity --seed 7 --count 200 --n 3..8");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"pass\":200,\"fail\":0}\n");
}

TEST_CASE("other verify suites") {
  for (const char* suite : {"fixed-set-containment", "trigon-classification", "parallelogram",
                            "rectangle-counterexample"}) {
    const Run r = run(std::string("verify ") + suite + " --seed 3 --count 40");
    CHECK_MESSAGE(r.code == 0, suite);
    CHECK_MESSAGE(parsed(r)["fail"] == 0, suite);
  }
  const Run single = run("verify parallelogram --in " + data("qstar.json"));
  CHECK(single.code == 0);
  CHECK(parsed(single)["fail"] == 1);
  CHECK(parsed(single)["report"]["error"] == "NotParallelogram");
}

TEST_CASE("output is deterministic") {
  const std::string args = "verify fixed-set-containment --seed 11 --count 30 --n 3..6";
  CHECK(run(args).out == run(args).out);
  const std::string sym = "symmetry --in " + data("qstar.json");
  CHECK(run(sym).out == run(sym).out);
}

TEST_CASE("membership, symmetry, tangential and dsl") {
  const Run m = run("membership --in " + data("square.json") + " --line " + data("centroid_simple_line.json") +
                    " --weights 0.25,0.25,0.25,0.25");
  CHECK(m.code == 0);
  CHECK(parsed(m)["member"] == true);

  const Run s = run("symmetry --in " + data("square.json"));
  CHECK(s.code == 0);
  CHECK(parsed(s)["group_order"] == 8);
  CHECK(parsed(s)["fixed_set"]["kind"] == "Point");

  const Run t = run("tangential --in " + data("triangle345.json"));
  CHECK(t.code == 0);
  CHECK(parsed(t)["incircle"]["radius"] == 1.0);
  CHECK(parsed(t)["am_collinearity"]["pass"] == true);

  const Run g = run("tangential --seed 5 --n 6");
  CHECK(g.code == 0);
  CHECK(parsed(g)["polygon"]["n"] == 6);

  const Run d = run("dsl --n 4 --expr 'd(1,3)'");
  CHECK(d.code == 0);
  CHECK(parsed(d)["degree"] == 1);

  const Run v = run("dsl --n 4 --expr 'd(1,2)'");
  CHECK(v.code == 1);
  CHECK(parsed(v)["error"] == "SymmetryViolation");
  CHECK(parsed(v)["witness"]["n"] == 4);
}

TEST_CASE("error paths") {
  const Run missing = run("centers --in /nonexistent.json");
  CHECK(missing.code == 1);
  CHECK(parsed(missing)["error"] == "InvalidInput");

  {
    std::ofstream f("bad_polygon.json");
    f << R"({"n": 5, "vertices": [[0,0],[1,0]]})";
  }
  const Run malformed = run("centers --in bad_polygon.json");
  CHECK(malformed.code == 1);
  CHECK(parsed(malformed)["error"] == "InvalidInput");
  {
    std::ofstream f("garbage.json");
    f << "{not json";
  }
  CHECK(parsed(run("symmetry --in garbage.json"))["error"] == "InvalidInput");

  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("line --in " + data("kite.json") + " --g1 centroid").code == 2);
  CHECK(run("verify am-collinearity --n 2..5").code == 2);
  CHECK(run("centers --in " + data("square.json"), "POLYCENTER_TOL=abc").code == 2);

  const Run unknown = run("line --in " + data("kite.json") + " --g1 centroid --g2 nonsense");
  CHECK(unknown.code == 1);
  CHECK(parsed(unknown)["error"] == "UnknownName");

  const Run coincident = run("line --in " + data("kite.json") + " --g1 centroid --g2 centroid");
  CHECK(parsed(coincident)["error"] == "CoincidentCenters");
}

TEST_CASE("tolerance override") {
  const Run r = run("centers --in " + data("square.json") + " --all", "POLYCENTER_TOL=1e-6");
  CHECK(r.code == 0);
}

TEST_CASE("svg output file") {
  const Run r = run("line --in " + data("kite.json") + " --g1 centroid --g2 simple --svg kite.svg");
  CHECK(r.code == 0);
  std::ifstream f("kite.svg");
  REQUIRE(f);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.find("<svg") == 0);
  CHECK(text.find("<path") != std::string::npos);
}
