#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "burgers/commands.hpp"
#include "burgers/io.hpp"

using namespace burgers;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir;
  std::ostringstream out, err;
  explicit Workspace(const std::string& name) : dir(fs::temp_directory_path() / "burgers_cmd_tests" / name) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  CommandContext ctx() {
    CommandContext c;
    c.out_dir = dir;
    c.config_dir = dir;
    c.out = &out;
    c.err = &err;
    return c;
  }
  fs::path write_config(const std::string& name, const json& j) {
    const fs::path p = dir / name;
    write_atomic(p, j.dump());
    return p;
  }
  int run(const std::string& cmd, const json& j) {
    return run_command(cmd, write_config(cmd + ".json", j), ctx());
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json eval_config(const json& solution, bool with_w = false) {
  return {{"schema_version", 1},
          {"solution", solution},
          {"grid", {{"half_width", 5.0}, {"num_points", 11}}},
          {"include_w", with_w}};
}

json evolve_config(const json& initial) {
  return {{"schema_version", 1},
          {"equation", {{"type", "similarity"}, {"alpha", 1.0}}},
          {"grid", {{"half_width", 10.0}, {"num_points", 401}}},
          {"initial", initial},
          {"end_time", 1.0},
          {"snapshot_times", {0.5}}};
}

}  // namespace

TEST_CASE("eval: steady profile is even") {
  Workspace ws("eval_steady");
  REQUIRE(ws.run("eval", eval_config({{"type", "steady"}, {"alpha", 1.0}})) == kExitOk);
  const auto rows = read_csv_rows(ws.dir / "eval.csv");
  REQUIRE(rows.size() == 11);
  for (std::size_t i = 0; i < 11; ++i) CHECK(rows[i][1] == rows[10 - i][1]);
  CHECK(slurp(ws.dir / "eval.csv").rfind("# ", 0) == 0);
}

TEST_CASE("eval: odd mode is antisymmetric") {
  Workspace ws("eval_mode");
  REQUIRE(ws.run("eval", eval_config({{"type", "eigenmode"}, {"n", 1}, {"alpha", 1.0}})) == kExitOk);
  const auto rows = read_csv_rows(ws.dir / "eval.csv");
  for (std::size_t i = 0; i < 11; ++i) CHECK(rows[i][1] == -rows[10 - i][1]);
}

TEST_CASE("eval: W column is odd with W(0) = 0") {
  Workspace ws("eval_w");
  REQUIRE(ws.run("eval", eval_config({{"type", "steady"}, {"alpha", 1.0}}, true)) == kExitOk);
  const auto rows = read_csv_rows(ws.dir / "eval.csv");
  REQUIRE(rows[0].size() == 3);
  CHECK(rows[5][2] == 0.0);
  for (std::size_t i = 0; i < 11; ++i) CHECK(rows[i][2] == doctest::Approx(-rows[10 - i][2]).epsilon(1e-14));
  CHECK(rows[10][2] == doctest::Approx(std::sqrt(M_PI / 2)).epsilon(1e-5));
}

TEST_CASE("evolve: zero data gives zero snapshots") {
  Workspace ws("evolve_zero");
  REQUIRE(ws.run("evolve", evolve_config({{"type", "zero"}})) == kExitOk);
  for (const auto& row : read_csv_rows(ws.dir / "evolve_snapshot_000.csv")) CHECK(row[1] == 0.0);
  for (const auto& row : read_csv_rows(ws.dir / "evolve_final.csv")) CHECK(row[1] == 0.0);
}

TEST_CASE("evolve: h1 decays like e^{-tau}, runs repeat byte for byte, and snapshots re-ingest") {
  Workspace ws("evolve_h1");
  const json cfg = evolve_config(
      {{"type", "solution"}, {"solution", {{"type", "eigenmode"}, {"n", 1}, {"alpha", 1.0}}}});
  REQUIRE(ws.run("evolve", cfg) == kExitOk);
  const auto norms = read_csv_rows(ws.dir / "evolve_norms.csv");
  CHECK(norms.back()[0] == 1.0);
  CHECK(norms.back()[1] == doctest::Approx(std::exp(-1.0) * norms.front()[1]).epsilon(1e-3));

  const std::string first = slurp(ws.dir / "evolve_final.csv");
  const std::string snap = slurp(ws.dir / "evolve_snapshot_000.csv");
  REQUIRE(ws.run("evolve", cfg) == kExitOk);
  CHECK(slurp(ws.dir / "evolve_final.csv") == first);
  CHECK(slurp(ws.dir / "evolve_snapshot_000.csv") == snap);

  json again = evolve_config({{"type", "csv"}, {"path", "evolve_snapshot_000.csv"}});
  again.erase("grid");
  again["end_time"] = 0.0;
  again["snapshot_times"] = json::array();
  again["output_prefix"] = "reingest";
  REQUIRE(ws.run("evolve", again) == kExitOk);
  CHECK(read_field_csv(ws.dir / "reingest_final.csv").values() ==
        read_field_csv(ws.dir / "evolve_snapshot_000.csv").values());
}

TEST_CASE("spectrum") {
  Workspace ws("spectrum");
  CHECK(ws.run("spectrum", {{"schema_version", 1}, {"alpha", 1.0}, {"k", 4}}) == kExitOk);
  auto report = json::parse(slurp(ws.dir / "spectrum.json"));
  CHECK(report["computed"].size() == 4);
  CHECK(report["growing_modes"].empty());

  CHECK(ws.run("spectrum", {{"schema_version", 1}, {"alpha", 0.5}, {"k", 1}}) == kExitOk);
  report = json::parse(slurp(ws.dir / "spectrum.json"));
  CHECK(report["computed"][0][1].get<double>() == doctest::Approx(-0.5).epsilon(1e-3));
  CHECK(report["growing_modes"] == json::array({0}));
  CHECK(ws.out.str().find("growing mode") != std::string::npos);

  CHECK(ws.run("spectrum", {{"schema_version", 1}, {"alpha", 1.0}, {"k", 0}}) == kExitOk);
  CHECK(json::parse(slurp(ws.dir / "spectrum.json"))["computed"].empty());

  CommandContext strict = ws.ctx();
  strict.tolerance = 1e-300;
  CHECK(run_command("spectrum", ws.dir / "spectrum.json.in", strict) == kExitValidation);  // missing file
  ws.write_config("s.json", {{"schema_version", 1}, {"alpha", 0.5}, {"k", 3}});
  CHECK(run_command("spectrum", ws.dir / "s.json", strict) == kExitNumeric);
}

TEST_CASE("crosscheck") {
  Workspace ws("crosscheck");
  const json constant = {{"schema_version", 1},
                         {"strain", {{"kind", "constant"}, {"gamma0", 1.0}}},
                         {"nu", 1.0},
                         {"modes", {0}},
                         {"grid_points", {1001}}};
  CHECK(ws.run("crosscheck", constant) == kExitOk);
  auto j = json::parse(slurp(ws.dir / "crosscheck.json"));
  CHECK(j["note"].get<std::string>().find("degenerate at c1 = 0") != std::string::npos);
  CHECK(j["runs"][0]["candidates"][0]["passes"] == true);
  CHECK(j["runs"][0]["candidates"][1]["passes"] == true);

  json rational = constant;
  rational["strain"] = {{"kind", "rational"}, {"c1", -0.5}, {"c2", -1.0}};
  CHECK(ws.run("crosscheck", rational) == kExitOk);
  j = json::parse(slurp(ws.dir / "crosscheck.json"));
  CHECK(j["winning_alpha"] == 1.5);
  CHECK(json::parse(slurp(ws.dir / "discrepancy.json"))["entries"].size() == 4);

  json beyond = rational;
  beyond["strain"]["c1"] = 0.5;
  beyond["t_end"] = 1.0;
  CHECK(ws.run("crosscheck", beyond) == kExitValidation);
  CHECK(ws.err.str().find("t*") != std::string::npos);
}

TEST_CASE("convergence") {
  Workspace ws("convergence");
  const json cfg = {{"schema_version", 1}, {"num_points", {101, 201, 401}}, {"time_num_points", 41},
                    {"dts", {0.02, 0.01}}};
  REQUIRE(ws.run("convergence", cfg) == kExitOk);
  const auto space = read_csv_rows(ws.dir / "convergence_space.csv");
  REQUIRE(space.size() == 3);
  CHECK(std::isnan(space[0][3]));
  CHECK(space[2][3] > 1.9);
  const auto time = read_csv_rows(ws.dir / "convergence_time.csv");
  REQUIRE(time.size() == 2);
  CHECK(time[1][2] > 3.8);
}

TEST_CASE("validation exit codes") {
  Workspace ws("validation");
  CHECK(ws.run("eval", {{"schema_version", 1}, {"solution", {{"type", "steady"}, {"alpha", "one"}}}}) ==
        kExitValidation);
  CHECK(ws.err.str().find("$.solution.alpha: expected a number, got string") != std::string::npos);
  CHECK(ws.run("eval", {{"schema_version", 1}, {"bogus", 1}}) == kExitValidation);
  CHECK(run_command("eval", std::nullopt, ws.ctx()) == kExitValidation);
}

TEST_CASE("command-line binary") {
  Workspace ws("binary");
  const auto cfg = ws.write_config("eval.json", eval_config({{"type", "steady"}, {"alpha", 2.0}}));
  const std::string cli = BURGERS_CLI;
  const auto run = [&](const std::string& args) {
    const int status = std::system((cli + " " + args + " > " + (ws.dir / "log.txt").string() + " 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(run("eval --config " + cfg.string() + " --out " + ws.dir.string()) == 0);
  CHECK(fs::exists(ws.dir / "eval.csv"));
  CHECK(run("eval --config " + (ws.dir / "missing.json").string()) == 2);
  CHECK(run("frobnicate") == 2);
  const auto bad = ws.write_config("bad.json", {{"schema_version", 1}, {"alpha", -1.0}});
  CHECK(run("spectrum --config " + bad.string() + " --out " + ws.dir.string()) == 2);
}
