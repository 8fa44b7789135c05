#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "algstat/error.hpp"
#include "algstat/persist.hpp"

using namespace algstat;
namespace fs = std::filesystem;

namespace {

PhyloNetwork star3() { return phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {4, 2}, {4, 3}})); }
PhyloNetwork sunlet3() {
  return phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {5, 2}, {6, 3}, {5, 4}, {6, 4}, {5, 6}}));
}
Graph cycle4() { return graph_from_edges(GraphKind::Undirected, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Labeling cycle4_colors() {
  return {"color",
          {{1, "Red"}, {2, "Red"}, {3, "Yellow"}, {4, "Yellow"}},
          {{{1, 4}, "Green"}, {{2, 3}, "Green"}, {{3, 4}, "Blue"}, {{1, 2}, "Blue"}}};
}

std::vector<std::pair<std::string, persist::Object>> golden_objects() {
  PhyloModel jc(star3(), PhyloKind::JukesCantor);
  GaussianModel c4(cycle4());
  std::vector<std::pair<std::string, persist::Object>> out;
  out.emplace_back("graph_cycle4", cycle4());
  out.emplace_back("network_sunlet3", sunlet3());
  out.emplace_back("gaussian_cycle4", c4);
  out.emplace_back("gaussian_colored_cycle4", GaussianModel(cycle4(), cycle4_colors()));
  out.emplace_back("gaussian_dag", GaussianModel(graph_from_edges(GraphKind::Directed, {{1, 2}, {1, 3}, {2, 3}})));
  out.emplace_back("phylo_jc_star3", jc);
  out.emplace_back("phylo_gm_star3", PhyloModel(star3(), PhyloKind::GeneralMarkov));
  out.emplace_back("phylo_k2_sunlet3", PhyloModel(sunlet3(), PhyloKind::Kimura2));
  out.emplace_back("ideal_jc_star3", vanishing_ideal(jc, CoordSpace::Fourier).ideal);
  out.emplace_back("ringmap_cycle4", c4.parametrization());
  out.emplace_back("ringmap_coordinate_change", coordinate_change(jc));
  out.emplace_back("kernel_jc_star3", components_of_kernel(3, jc.fourier_parametrization()));
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("algstat_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

bool same_object(const persist::Object& a, const persist::Object& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

}  // namespace

// Set ALGSTAT_UPDATE_GOLDEN=1 to rewrite tests/golden after an intended schema change.
TEST(Persist, GoldenFilesAreByteStable) {
  const bool update = std::getenv("ALGSTAT_UPDATE_GOLDEN") != nullptr;
  for (const auto& [name, obj] : golden_objects()) {
    fs::path file = fs::path(ALGSTAT_GOLDEN_DIR) / (name + ".json");
    std::string text = persist::serialize(obj);
    if (update) {
      std::ofstream(file, std::ios::binary) << text;
      continue;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    const std::string golden = read_file(file);
    EXPECT_EQ(text, golden) << name;
    persist::Object back = persist::deserialize(golden);
    EXPECT_TRUE(same_object(back, obj)) << name;
    EXPECT_EQ(persist::serialize(back), golden) << name;
  }
}

TEST(Persist, RoundTripPreservesBehaviour) {
  PhyloModel jc(sunlet3(), PhyloKind::JukesCantor);
  auto back = std::get<PhyloModel>(persist::deserialize(persist::serialize(jc)));
  EXPECT_EQ(back.fourier_parametrization(), jc.fourier_parametrization());
  GaussianModel cg(cycle4(), cycle4_colors());
  auto gback = std::get<GaussianModel>(persist::deserialize(persist::serialize(cg)));
  EXPECT_TRUE(gback.colored());
  EXPECT_EQ(gback.parametrization(), cg.parametrization());
}

TEST(Persist, EnvelopeShape) {
  auto doc = persist::to_envelope(PhyloModel(star3(), PhyloKind::JukesCantor));
  EXPECT_EQ(doc.at("_type"), "PhyloModel");
  EXPECT_EQ(doc.at("_ns").at("algstat").at(1), std::string(persist::kVersion));
  EXPECT_EQ(doc.at("data").at("model_type"), "JC");
}

TEST(Persist, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code([] { persist::deserialize("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { persist::deserialize(R"({"_ns": {"algstat": ["algstat", "0.1.0"]}, "_type": "Matroid", "data": {}})"); }),
            ErrorCode::UnknownType);
  EXPECT_EQ(code([] { persist::deserialize(R"({"_ns": {}, "_type": "Graph", "data": {}})"); }), ErrorCode::SchemaMismatch);
  EXPECT_EQ(code([] { persist::deserialize(R"({"_ns": {"algstat": ["algstat", "0.1.0"]}, "_type": "Graph", "data": {}})"); }),
            ErrorCode::SchemaMismatch);
  auto bad_edge = persist::to_envelope(cycle4());
  bad_edge["data"]["edges"].push_back({1, 1});
  EXPECT_EQ(code([&] { persist::from_envelope(bad_edge); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code([] { persist::load("/nonexistent/dir/x.json"); }), ErrorCode::IoError);
  TempDir tmp;
  fs::create_directories(tmp.path);
  persist::save(tmp.path / "g.json", cycle4());
  EXPECT_EQ(code([&] { persist::load_as<Ideal>(tmp.path / "g.json"); }), ErrorCode::SchemaMismatch);
  EXPECT_EQ(persist::load_as<Graph>(tmp.path / "g.json"), cycle4());
}

TEST(Collection, QueryByModelType) {
  TempDir tmp;
  persist::Collection db(tmp.path);
  EXPECT_TRUE(db.ids().empty());
  std::vector<Graph> trees{
      star3().graph,
      graph_from_edges(GraphKind::Directed, {{5, 1}, {5, 2}, {5, 3}, {5, 4}}),
      graph_from_edges(GraphKind::Directed, {{5, 1}, {5, 2}, {6, 3}, {6, 4}, {7, 5}, {7, 6}}),
  };
  for (std::size_t i = 0; i < trees.size(); ++i) {
    db.add("jc-" + std::to_string(i), PhyloModel(phylo_validate(trees[i]), PhyloKind::JukesCantor));
    db.add("k2-" + std::to_string(i), PhyloModel(phylo_validate(trees[i]), PhyloKind::Kimura2));
  }
  db.add("graph", cycle4());
  auto jc = db.find({{"data.model_type", "JC"}});
  ASSERT_EQ(jc.size(), 3U);
  EXPECT_EQ(jc[0].id, "jc-0");
  EXPECT_EQ(db.find({{"data.model_type", "K2"}, {"data.n_leaves", 4}}).size(), 2U);
  EXPECT_EQ(db.find({{"_type", "Graph"}}).size(), 1U);
  EXPECT_EQ(db.find({}).size(), 7U);

  // Reopening sees the same manifest; a corrupt document is skipped with a warning.
  persist::Collection again(tmp.path);
  EXPECT_EQ(again.ids().size(), 7U);
  std::ofstream(tmp.path / "jc-1.json", std::ios::trunc) << "{ broken";
  std::vector<std::string> warnings;
  EXPECT_EQ(again.find({{"data.model_type", "JC"}}, &warnings).size(), 2U);
  EXPECT_EQ(warnings.size(), 1U);
  EXPECT_THROW(again.add("../escape", cycle4()), Error);
}
