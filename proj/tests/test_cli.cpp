#include <doctest.h>

#include <fstream>
#include <sstream>

#include "effdim/commands.hpp"
#include "effdim/json_io.hpp"

using namespace effdim;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = run_command(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& command, const std::string& quiver) {
  RunConfig c;
  c.command = command;
  if (!quiver.empty()) c.quiver_path = std::string(EFFDIM_QUIVER_DIR) + "/" + quiver;
  return c;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  auto c = config("analyze", "loop.quiver");
  c.truncate = 5;
  auto r = run(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "eff.dim(P_5) = 5"));

  c = config("analyze", "a3.quiver");
  c.truncate = 2;
  r = run(c);
  CHECK(contains(r.out, "eff.dim(P_2) = 4"));
  CHECK(contains(r.out, "[0,1]"));

  r = run(config("analyze", "twoloops.quiver"));
  CHECK(contains(r.out, "eff.dim(P) = 2"));
  CHECK(contains(r.out, "inf"));

  c = config("analyze", "loop.quiver");
  c.format = OutputFormat::json;
  r = run(c);
  const auto j = json::parse(r.out);
  CHECK(j["vertices"][0]["l_minus"] == "inf");
}

TEST_CASE("construct") {
  auto c = config("construct", "a2.quiver");
  c.truncate = 2;
  auto r = run(c);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["arrows"][0]["matrix"] == json::parse("[[2]]"));
  CHECK(run(c).out == r.out);

  c.truncate = 1;
  j = json::parse(run(c).out);
  CHECK(j["vertex_dims"][0]["dim"] == 1);
  CHECK(j["vertex_dims"][1]["dim"] == 1);
  CHECK(j["arrows"][0]["matrix"] == json::parse("[[0]]"));

  j = json::parse(run(config("construct", "twoloops.quiver")).out);
  REQUIRE(j["arrows"].size() == 2);
  for (const auto& a : j["arrows"]) CHECK(a["shape"] == json::parse("[2,2]"));
}

TEST_CASE("verify") {
  auto c = config("verify", "loop.quiver");
  c.truncate = 3;
  auto r = run(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "status: effective"));

  c = config("verify", "kronecker.quiver");
  c.max_len = 4;
  CHECK(run(c).code == 0);

  // Sabotage: both arrows of the Kronecker quiver get the same matrix.
  c = config("construct", "kronecker.quiver");
  c.truncate = 2;
  auto doc = json::parse(run(c).out);
  doc["arrows"][1]["matrix"] = doc["arrows"][0]["matrix"];
  const std::string path = std::string(EFFDIM_SCRATCH_DIR) + "/sabotaged_rep.json";
  std::ofstream(path) << doc.dump();

  c = config("verify", "kronecker.quiver");
  c.truncate = 2;
  c.rep_path = path;
  c.format = OutputFormat::json;
  r = run(c);
  CHECK(r.code == 1);
  const auto report = json::parse(r.out);
  CHECK(report["status"] == "collision");
  CHECK(report["witness"] == json::parse(R"(["a","b"])"));
}

TEST_CASE("stabilize") {
  auto r = run(config("stabilize", "loop.quiver"));
  CHECK(contains(r.out, "a = 1, b = 0"));

  auto c = config("stabilize", "a3.quiver");
  c.format = OutputFormat::json;
  const auto j = json::parse(run(c).out);
  CHECK(j["a"] == 0);
  CHECK(j["b"] == 3);
  std::vector<std::size_t> table;
  for (const auto& row : j["table"]) table.push_back(row["effdim"]);
  CHECK(table == std::vector<std::size_t>{3, 4, 3, 3});

  r = run(config("stabilize", "isolated.quiver"));
  CHECK(contains(r.out, "a = 0, b = 1"));
}

TEST_CASE("formula") {
  auto c = config("formula", "");
  c.truncate = 3;
  c.segments = {5};
  auto r = run(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "eff.dim(P_3) = 9"));

  c = config("formula", "a3.quiver");
  c.truncate = 2;
  r = run(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sum of d_x = 4"));

  c = config("formula", "twoloops.quiver");
  c.truncate = 2;
  CHECK(run(c).code == 2);
}

TEST_CASE("input errors exit with 2") {
  auto r = run(config("analyze", "missing.quiver"));
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));

  auto c = config("analyze", "loop.quiver");
  c.truncate = 0;
  CHECK(run(c).code == 2);

  const std::string bad = std::string(EFFDIM_SCRATCH_DIR) + "/bad.quiver";
  std::ofstream(bad) << "vertex x\narrow a: x -> y\n";
  c = config("analyze", "");
  c.quiver_path = bad;
  r = run(c);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 2"));
}

TEST_CASE("--out writes the report to a file") {
  auto c = config("analyze", "loop.quiver");
  c.out_path = std::string(EFFDIM_SCRATCH_DIR) + "/analyze.txt";
  const auto r = run(c);
  CHECK(r.out.empty());
  std::ifstream in(*c.out_path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(contains(s.str(), "eff.dim(P) = 1"));
}
