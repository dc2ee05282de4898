#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "exactcol/coloring.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/io.hpp"
#include "json.hpp"

namespace exactcol {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(EXACTCOL_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("exactcol_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string graph(const std::string& name, const Graph& g) {
    return file(name, write_graph(g, GraphFormat::kEdgeList));
  }

  fs::path dir_;
};

TEST_F(Cli, SolveCycleChi) {
  const CliRun r = run("solve --d 1 --chi " + graph("c8.txt", cycle_graph(8)));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["chi"], 2);
  EXPECT_EQ(j["witness"].size(), 8u);
  EXPECT_TRUE(j.contains("algorithm"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_TRUE(j.contains("reason"));
}

TEST_F(Cli, SolveBowtieDecision) {
  const CliRun r = run("solve --d 2 --k 2 " + graph("bowtie.txt", bowtie_graph()));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "no");
}

TEST_F(Cli, SolveInfinite) {
  const CliRun r = run("solve --d 3 --chi " + graph("p3.txt", path_graph(3)));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "infinite");
  EXPECT_EQ(j["reason"], "d exceeds min degree");
  EXPECT_TRUE(j["chi"].is_null());
}

TEST_F(Cli, SolveAlgorithmsAgree) {
  const std::string pet = graph("pet.txt", petersen_graph());
  const std::string bt = graph("tri.txt", random_cactus(9, 4, 0.0));
  for (const std::string& algo : {"auto", "brute"}) {
    const auto j = nlohmann::json::parse(run("solve --d 1 --chi --algorithm " + algo + " " + pet).out);
    EXPECT_EQ(j["chi"], 5);
  }
  const auto a = nlohmann::json::parse(run("solve --d 2 --chi --algorithm cactus " + bt).out);
  const auto b = nlohmann::json::parse(run("solve --d 2 --chi --algorithm brute " + bt).out);
  EXPECT_EQ(a["verdict"], b["verdict"]);
  EXPECT_EQ(a["chi"], b["chi"]);
}

TEST_F(Cli, AutoMatchesBruteOnCorpus) {
  std::vector<Graph> corpus{cycle_graph(6),      cycle_graph(7),     path_graph(5),
                            complete_graph(6),   wheel_graph(6),     petersen_graph(),
                            bowtie_graph(),      octahedron_graph(), cartesian_k2_complete(3), fan_graph(4)};
  for (int s = 0; s < 6; ++s) {
    corpus.push_back(random_cactus(6 + s, 70 + s, 0.2));
    corpus.push_back(planted_cactus(6, 80 + s, 2, 0.3, 4));
    corpus.push_back(random_block_graph(6 + s, 90 + s));
  }
  int i = 0;
  for (const Graph& g : corpus) {
    const std::string path = graph("g" + std::to_string(i++) + ".txt", g);
    for (int d = 1; d <= 2; ++d) {
      const std::string base = "solve --chi --d " + std::to_string(d) + " --algorithm ";
      const CliRun a = run(base + "auto " + path);
      const CliRun b = run(base + "brute " + path);
      ASSERT_EQ(a.code, 0) << path;
      ASSERT_EQ(b.code, 0) << path;
      const auto ja = nlohmann::json::parse(a.out);
      const auto jb = nlohmann::json::parse(b.out);
      EXPECT_EQ(ja["verdict"], jb["verdict"]) << path << " d=" << d;
      EXPECT_EQ(ja["chi"], jb["chi"]) << path << " d=" << d;
      if (!ja["witness"].is_null()) {
        const std::string rep = file("r" + std::to_string(i) + std::to_string(d) + ".json", a.out);
        EXPECT_EQ(run("verify --d " + std::to_string(d) + " " + path + " " + rep).code, 0);
      }
    }
  }
}

TEST_F(Cli, SolveBudgetIsUnknown) {
  const CliRun r = run("solve --d 1 --k 4 --algorithm brute --budget 10 " +
                    graph("pet.txt", petersen_graph()));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "unknown");
}

TEST_F(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("solve --chi " + graph("c.txt", cycle_graph(4))).code, 1);
  EXPECT_EQ(run("solve --d 1 " + graph("c.txt", cycle_graph(4))).code, 1);
  EXPECT_EQ(run("solve --d 1 --chi " + file("bad.txt", "3 1\n0 x\n")).code, 1);
  EXPECT_EQ(run("solve --d 1 --chi /nonexistent/file").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("solve --d 1 --chi --algorithm cactus " + graph("k4.txt", complete_graph(4))).code, 1);
}

TEST_F(Cli, VerifyRoundTrip) {
  const std::string g = graph("c8.txt", cycle_graph(8));
  const std::string report = file("r.json", run("solve --d 1 --chi " + g).out);
  EXPECT_EQ(run("verify " + g + " " + report + " --d 1").code, 0);
}

TEST_F(Cli, VerifyMonochromaticC5) {
  const std::string g = graph("c5.txt", cycle_graph(5));
  const std::string c = file("mono.txt", write_coloring(Coloring{1, std::vector<int>(5, 0)}));
  EXPECT_EQ(run("verify " + g + " " + c + " --d 2").code, 0);
  const CliRun bad = run("verify " + g + " " + c + " --d 1");
  EXPECT_EQ(bad.code, 3);
  for (int v = 0; v < 5; ++v) {
    EXPECT_NE(bad.out.find("vertex " + std::to_string(v) + ":"), std::string::npos);
  }
  EXPECT_EQ(run("verify " + g + " " + file("bad.txt", "x\n") + " --d 2").code, 1);
}

TEST_F(Cli, Generate) {
  const CliRun pet = run("generate petersen");
  ASSERT_EQ(pet.code, 0);
  const Graph p = read_graph(pet.out, GraphFormat::kEdgeList);
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15u);

  const CliRun a = run("generate random-cactus --n 12 --seed 7");
  const CliRun b = run("generate random-cactus --n 12 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  const Graph prod = read_graph(run("generate cartesian-k2-complete --m 4").out, GraphFormat::kEdgeList);
  EXPECT_EQ(prod.order(), 8);
  EXPECT_EQ(prod.min_degree(), 4);
  EXPECT_EQ(prod.max_degree(), 4);

  EXPECT_EQ(run("generate cycle --n 2").code, 1);
  EXPECT_EQ(run("generate nothing").code, 1);
}

TEST_F(Cli, Reduce) {
  const std::string fig = file("fig1.nae", "p nae 4 2\n1 2 3 0\n1 3 4 0\n");
  const CliRun nae = run("reduce nae3sat " + fig);
  ASSERT_EQ(nae.code, 0);
  EXPECT_EQ(read_graph(nae.out, GraphFormat::kEdgeList).order(), 28);

  const std::string out = (dir_ / "k3red.txt").string();
  EXPECT_EQ(run("reduce coloring --k 3 --d 1 " + graph("k3.txt", complete_graph(3)) +
                " --check -o " + out).code,
            0);
  EXPECT_TRUE(fs::exists(out + ".map.json"));
  std::ifstream in(out + ".map.json");
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["vertices"].size(), 6u);

  EXPECT_EQ(run("reduce increment --d 1 " + graph("c5.txt", cycle_graph(5)) + " --check").code, 0);
  EXPECT_EQ(run("reduce planar --d 1 " + graph("c5.txt", cycle_graph(5))).code, 1);
}

TEST_F(Cli, Bench) {
  const CliRun r = run("bench cactus --sizes 50,100 --count 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"n\":50"), std::string::npos);
}

}  // namespace
}  // namespace exactcol
