#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mwvc/graph_io.hpp"

#include "cli.hpp"
#include "report.hpp"

namespace mwvc::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mwvc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static json load_json(const std::string& p) { return json::parse(slurp(p)); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesHeaderAndIsDeterministic) {
  const auto a = path("a.txt"), b = path("b.txt");
  const std::vector<std::string> flags{"--model", "gnp", "--n", "1000", "--avg-deg", "32",
                                       "--weights", "uniform:1:2", "--seed", "7"};
  auto args = flags;
  args.insert(args.begin(), "gen");
  args.insert(args.end(), {"-o", a});
  ASSERT_EQ(invoke(args).code, exit_code::kOk);
  args.back() = b;
  ASSERT_EQ(invoke(args).code, exit_code::kOk);
  const auto text = slurp(a);
  EXPECT_EQ(text.rfind("p 1000 ", 0), 0u);
  EXPECT_EQ(text, slurp(b));
}

TEST_F(CliTest, GenStar) {
  const auto r = invoke({"gen", "--model", "star", "--n", "5"});
  ASSERT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out.rfind("p 5 4\n", 0), 0u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"gen", "--model", "lattice", "--n", "5"}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"gen", "--n", "10", "--avg-deg", "20"}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"run", "--n", "10", "--epsilon", "0.7"}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"run"}).code, exit_code::kUsage);
  EXPECT_EQ(invoke({"run", "--n", "10", "--algo", "magic"}).code, exit_code::kUsage);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(invoke({"run", "--input", path("missing.txt")}).code, exit_code::kIo);
  const auto bad = write("bad.txt", "p 2 1\nv 0 1\nv 1 1\ne 1 1\n");
  const auto r = invoke({"run", "--input", bad});
  EXPECT_EQ(r.code, exit_code::kIo);
  EXPECT_NE(r.err.find("self-loop at line 4"), std::string::npos);
}

TEST_F(CliTest, RunCentralSingleEdge) {
  const auto g = write("edge.txt", "p 2 1\nv 0 1.0\nv 1 1.0\ne 0 1\n");
  const auto rep = path("r.json");
  ASSERT_EQ(invoke({"run", "--algo", "central", "--input", g, "--epsilon", "0.1",
                    "--oracle", "require", "-o", rep})
                .code,
            exit_code::kOk);
  const auto j = load_json(rep);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_DOUBLE_EQ(j["cover_weight"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["matching_value"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["ratios"]["bound"].get<double>(), 3.0);
  EXPECT_DOUBLE_EQ(j["opt_weight"].get<double>(), 1.0);
  EXPECT_TRUE(all_checks_passed(j));
  EXPECT_EQ(j["repro_hash"], repro_hash(j));
}

TEST_F(CliTest, RunMpcBelowStopMatchesCentral) {
  const auto g = path("g.txt");
  ASSERT_EQ(invoke({"gen", "--n", "300", "--avg-deg", "8", "--seed", "2", "-o", g}).code, 0);
  const auto rm = path("m.json"), rc = path("c.json");
  ASSERT_EQ(invoke({"run", "--algo", "mpc", "--input", g, "-o", rm}).code, 0);
  ASSERT_EQ(invoke({"run", "--algo", "central", "--input", g, "-o", rc}).code, 0);
  const auto m = load_json(rm), c = load_json(rc);
  EXPECT_EQ(m["phases"], 0);
  EXPECT_EQ(m["cover"], c["cover"]);
  EXPECT_EQ(m["cover_weight"], c["cover_weight"]);
  EXPECT_EQ(m["matching_value"], c["matching_value"]);
}

TEST_F(CliTest, RunExactTriangle) {
  const auto g = write("tri.txt", "p 3 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 0 2\n");
  const auto r = invoke({"run", "--algo", "exact", "--input", g});
  ASSERT_EQ(r.code, exit_code::kOk);
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["opt_weight"].get<double>(), 2.0);
  EXPECT_TRUE(j["matching_value"].is_null());
}

TEST_F(CliTest, OracleCap) {
  const std::vector<std::string> base{"run", "--n", "300", "--avg-deg", "10",
                                      "--node-cap", "20", "--algo", "central"};
  auto req = base;
  req.insert(req.end(), {"--oracle", "require"});
  EXPECT_EQ(invoke(req).code, exit_code::kOracleCap);
  auto tr = base;
  tr.insert(tr.end(), {"--oracle", "try"});
  const auto r = invoke(tr);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_TRUE(json::parse(r.out)["opt_weight"].is_null());
  auto ex = base;
  ex.back() = "exact";
  EXPECT_EQ(invoke(ex).code, exit_code::kOracleCap);
}

TEST_F(CliTest, InvariantFailureExitCode) {
  const auto r = invoke({"run", "--n", "2000", "--avg-deg", "100", "--algo", "mpc",
                         "--mem-cap", "10", "--enforce-mem"});
  EXPECT_EQ(r.code, exit_code::kInvariant);
}

TEST_F(CliTest, VerifyRoundTrip) {
  const auto g = path("g.txt");
  ASSERT_EQ(invoke({"gen", "--n", "2000", "--avg-deg", "64", "--weights", "uniform:1:2",
                    "--seed", "4", "-o", g})
                .code,
            0);
  for (const std::string algo : {"central", "mpc"}) {
    const auto rep = path(algo + ".json");
    ASSERT_EQ(invoke({"run", "--algo", algo, "--input", g, "--emit-matching", "-o", rep}).code, 0);
    const auto ok = invoke({"verify", "--graph", g, "--report", rep});
    EXPECT_EQ(ok.code, exit_code::kOk) << ok.out << ok.err;

    // Drop a cover vertex that has a neighbor outside the cover when one
    // exists, so an edge becomes uncovered.
    auto j = load_json(rep);
    const auto lg = load_graph_file(g);
    std::set<std::uint64_t> in_cover;
    for (const auto& v : j["cover"]) in_cover.insert(v.get<std::uint64_t>());
    std::size_t drop = 0;
    for (std::size_t i = 0; i < j["cover"].size(); ++i) {
      const auto v = j["cover"][i].get<VertexId>();
      bool exposed = false;
      for (const auto& inc : lg.graph.neighbors(v)) exposed = exposed || !in_cover.count(inc.neighbor);
      if (exposed) {
        drop = i;
        break;
      }
    }
    const auto removed = j["cover"][drop];
    j["cover"].erase(drop);
    const auto broken = write(algo + "_broken.json", j.dump());
    const auto bad = invoke({"verify", "--graph", g, "--report", broken});
    EXPECT_EQ(bad.code, exit_code::kInvariant);
    if (algo == "central") {
      EXPECT_NE(bad.out.find("witness=("), std::string::npos);
      EXPECT_NE(bad.out.find(removed.dump()), std::string::npos);
    }
  }
}

TEST_F(CliTest, VerifyMpcSlackFactor) {
  const auto g = path("g.txt");
  ASSERT_EQ(invoke({"gen", "--n", "3000", "--avg-deg", "150", "--seed", "6", "-o", g}).code, 0);
  const auto rep = path("m.json");
  ASSERT_EQ(invoke({"run", "--algo", "mpc", "--input", g, "--emit-matching", "--bias-base",
                    "0", "--stop-degree", "4", "-o", rep})
                .code,
            0);
  EXPECT_EQ(invoke({"verify", "-g", g, "-r", rep, "--slack-factor", "1.6"}).code, 0);
  const auto strict = invoke({"verify", "-g", g, "-r", rep, "--slack-factor", "1"});
  EXPECT_TRUE(strict.code == exit_code::kOk || strict.code == exit_code::kInvariant);
}

TEST_F(CliTest, VerifySchemaMismatch) {
  const auto g = write("edge.txt", "p 2 1\nv 0 1\nv 1 1\ne 0 1\n");
  const auto r1 = write("r1.json", R"({"schema": "other/9"})");
  EXPECT_EQ(invoke({"verify", "-g", g, "-r", r1}).code, exit_code::kUsage);
  const auto r2 = write("r2.json", "not json");
  EXPECT_EQ(invoke({"verify", "-g", g, "-r", r2}).code, exit_code::kUsage);
  const auto r3 = write("r3.json", R"({"schema": "mwvc-report/1", "cover": [0]})");
  EXPECT_EQ(invoke({"verify", "-g", g, "-r", r3}).code, exit_code::kUsage);
}

TEST_F(CliTest, ReproHashStable) {
  const std::vector<std::string> args{"run", "--n", "1500", "--avg-deg", "64", "--algo",
                                      "mpc", "--seed", "9", "--workers", "3"};
  const auto a = json::parse(invoke(args).out);
  const auto b = json::parse(invoke(args).out);
  EXPECT_EQ(a["repro_hash"], b["repro_hash"]);
  auto other = args;
  other[8] = "10";
  EXPECT_NE(json::parse(invoke(other).out)["repro_hash"], a["repro_hash"]);
}

TEST_F(CliTest, SweepRows) {
  const auto csv = path("s.csv");
  const auto r = invoke({"sweep", "--n", "800", "--avg-deg", "16,64", "--seeds", "3",
                         "--jobs", "2", "-o", csv});
  ASSERT_EQ(r.code, exit_code::kOk) << r.err;
  std::istringstream in(slurp(csv));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "true");
  }
  EXPECT_EQ(rows, 6u);
}

TEST_F(CliTest, SweepBadModelIsUsage) {
  EXPECT_EQ(invoke({"sweep", "--n", "100", "--model", "lattice"}).code, exit_code::kUsage);
}

}  // namespace
}  // namespace mwvc::cli
