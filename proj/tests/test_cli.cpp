#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "algstat/persist.hpp"
#include "cli.hpp"

using namespace algstat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("algstat_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, JukesCantorFourierIdeal) {
  auto r = run({"ideal", "vanishing", "--model", "jc-star3", "--space", "fourier"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "q[2,2,1]*q[2,1,2]*q[1,2,2] - q[2,3,4]^2*q[1,1,1]\n");
}

TEST(Cli, GlobalMarkovOfFourCycle) {
  auto r = run({"ci", "markov", "--graph", "cycle4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[1 _||_ 3 | {2, 4}]\n[2 _||_ 4 | {1, 3}]\n");
}

TEST(Cli, BadGraphFileIsDomainError) {
  fs::path bad = scratch("nonsense.json");
  std::ofstream(bad) << "this is not json";
  auto r = run({"model", "build", "--graph", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("nonsense.json"), std::string::npos) << r.err;
  auto missing = run({"model", "build", "--graph", "/no/such/file.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("IoError"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"model"}).code, 2);
  EXPECT_EQ(run({"ideal", "vanishing"}).code, 2);
  EXPECT_EQ(run({"ideal", "vanishing", "--model", "cycle4", "--algorithm", "magic"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "ci", "markov", "--graph", "cycle4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, UnsupportedAlgorithmIsDomainError) {
  auto r = run({"ideal", "vanishing", "--model", "cycle4", "--algorithm", "saturate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("UnsupportedAlgorithm"), std::string::npos);
}

TEST(Cli, JsonOutputIsALoadableEnvelope) {
  fs::path out = scratch("ideal.json");
  auto r = run({"--format", "json", "-o", out.string(), "ideal", "vanishing", "--model", "jc-star3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  Ideal I = persist::load_as<Ideal>(out);
  EXPECT_EQ(I.gens().size(), 1U);

  auto m = run({"--format", "json", "model", "build", "--model", "k3-sunlet4"});
  ASSERT_EQ(m.code, 0);
  auto model = std::get<PhyloModel>(persist::deserialize(m.out));
  EXPECT_EQ(model.kind(), PhyloKind::Kimura3);
  EXPECT_EQ(persist::serialize(model), m.out);
}

TEST(Cli, ModelFromGraphFileAndKind) {
  fs::path g = scratch("star.json");
  std::ofstream(g) << R"({"kind": "directed", "edges": [[4, 1], [4, 2], [4, 3]]})";
  auto r = run({"model", "build", "--graph", g.string(), "--kind", "K2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[x, y, y, z]"), std::string::npos) << r.out;
  auto p = run({"model", "param", "--model", "jc-sunlet3"});
  ASSERT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("q[1,1,1] -> l[1,1]*x[1]*x[2]*x[3]*x[4]*x[5] + l[1,2]*x[1]*x[2]*x[3]*x[5]*x[6]"),
            std::string::npos)
      << p.out;
}

TEST(Cli, FourierChange) {
  auto r = run({"fourier", "change", "--model", "jc-star3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("q[2,3,4] -> 1//3*p[1,2,3] - 1//3*p[1,2,2] - 1//3*p[1,2,1] - 1//3*p[1,1,2] + p[1,1,1]"),
            std::string::npos)
      << r.out;
  EXPECT_EQ(run({"fourier", "change", "--model", "cycle4"}).code, 1);
}

TEST(Cli, CollectionAddAndFind) {
  fs::path dir = scratch("db");
  fs::remove_all(dir);
  ASSERT_EQ(run({"db", "add", "--dir", dir.string(), "--id", "a", "--model", "jc-star3"}).code, 0);
  ASSERT_EQ(run({"db", "add", "--dir", dir.string(), "--id", "b", "--model", "jc-sunlet3"}).code, 0);
  ASSERT_EQ(run({"db", "add", "--dir", dir.string(), "--id", "c", "--model", "cycle4"}).code, 0);
  auto r = run({"db", "find", "--dir", dir.string(), "--query", "data.model_type=JC"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2 matching documents\na\tPhyloModel\nb\tPhyloModel\n");
  auto n = run({"db", "find", "--dir", dir.string(), "--query", "data.n_leaves=3", "--query", "data.graph.n_vertices=4"});
  EXPECT_EQ(n.out, "1 matching document\na\tPhyloModel\n");
  EXPECT_EQ(run({"db", "find", "--dir", dir.string(), "--query", "oops"}).code, 2);
}

TEST(Cli, DegreeCapFromEnvironment) {
  ::setenv("ALGSTAT_DEGREE_CAP", "2", 1);
  auto r = run({"ideal", "vanishing", "--model", "cycle4"});
  ::unsetenv("ALGSTAT_DEGREE_CAP");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("DegreeBudgetExceeded"), std::string::npos) << r.err;
  EXPECT_EQ(run({"--degree-cap", "2", "ideal", "vanishing", "--model", "cycle4"}).code, 1);
}

TEST(Cli, BenchIsDeterministicApartFromTimings) {
  std::vector<std::string> args{"--format", "json", "bench", "--task", "fourier-check", "--model", "jc-star3",
                                "--repeat", "2", "--draws", "5", "--seed", "9"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = persist::json::parse(a.out), jb = persist::json::parse(b.out);
  EXPECT_EQ(ja.at("result"), "5/5 draws consistent");
  for (auto* j : {&ja, &jb}) {
    j->erase("min_seconds");
    j->erase("mean_seconds");
  }
  EXPECT_EQ(ja, jb);
  auto t = run({"bench", "--model", "jc-star3", "--repeat", "3"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("runs 3"), std::string::npos);
}
