#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algstat/gaussian.hpp"
#include "algstat/phylo.hpp"

namespace algstat::builtins {

/// Named examples: cycle4, colored-cycle4, dag6 (Gaussian) and jc-star3,
/// jc-sunlet3, k3-sunlet4 (phylogenetic).
using Model = std::variant<GaussianModel, PhyloModel>;

std::vector<std::string> model_names();
std::optional<Model> model(const std::string& name);
/// The underlying graph of a named model.
std::optional<Graph> graph(const std::string& name);

Graph cycle4();
Labeling cycle4_colors();
Graph dag6();
Graph star3();
Graph sunlet3();
Graph sunlet4();

}  // namespace algstat::builtins
