#include "builtins.hpp"

namespace algstat::builtins {

Graph cycle4() { return graph_from_edges(GraphKind::Undirected, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}); }

Labeling cycle4_colors() {
  Labeling l;
  l.name = "color";
  l.edge_labels = {{{1, 4}, "Green"}, {{2, 3}, "Green"}, {{3, 4}, "Blue"}, {{1, 2}, "Blue"}};
  l.vertex_labels = {{1, "Red"}, {2, "Red"}, {3, "Yellow"}, {4, "Yellow"}};
  return l;
}

Graph dag6() {
  std::vector<std::pair<Vertex, Vertex>> e{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 5}};
  for (Vertex i = 1; i <= 5; ++i) e.emplace_back(i, 6);
  return graph_from_edges(GraphKind::Directed, e);
}

Graph star3() { return graph_from_edges(GraphKind::Directed, {{4, 1}, {4, 2}, {4, 3}}); }

Graph sunlet3() { return graph_from_edges(GraphKind::Directed, {{4, 1}, {5, 2}, {6, 3}, {5, 4}, {6, 4}, {5, 6}}); }

Graph sunlet4() {
  return graph_from_edges(GraphKind::Directed, {{5, 1}, {6, 5}, {7, 6}, {7, 8}, {8, 5}, {6, 2}, {7, 3}, {8, 4}});
}

std::vector<std::string> model_names() {
  return {"cycle4", "colored-cycle4", "dag6", "jc-star3", "jc-sunlet3", "k3-sunlet4"};
}

std::optional<Model> model(const std::string& name) {
  if (name == "cycle4") return GaussianModel(cycle4());
  if (name == "colored-cycle4") return GaussianModel(cycle4(), cycle4_colors());
  if (name == "dag6") return GaussianModel(dag6());
  if (name == "jc-star3") return PhyloModel(phylo_validate(star3()), PhyloKind::JukesCantor);
  if (name == "jc-sunlet3") return PhyloModel(phylo_validate(sunlet3()), PhyloKind::JukesCantor);
  if (name == "k3-sunlet4") return PhyloModel(phylo_validate(sunlet4()), PhyloKind::Kimura3);
  return std::nullopt;
}

std::optional<Graph> graph(const std::string& name) {
  if (name == "cycle4" || name == "colored-cycle4") return cycle4();
  if (name == "dag6") return dag6();
  if (name == "jc-star3" || name == "star3") return star3();
  if (name == "jc-sunlet3" || name == "sunlet3") return sunlet3();
  if (name == "k3-sunlet4" || name == "sunlet4") return sunlet4();
  return std::nullopt;
}

}  // namespace algstat::builtins
