#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "algstat/ci.hpp"
#include "algstat/graph.hpp"
#include "algstat/groebner.hpp"

namespace algstat {

enum class GaussianKind { Undirected, Dag };

/// Parameter ring plus the variable standing for each vertex and edge.
/// Undirected: K-entries k[i,i], k[i,j]; colored: k[color]; DAG: Λ-entries
/// l[i,j] per edge and Ω-entries w[i] per vertex.
struct GaussianParameters {
  Ring ring;
  std::map<Vertex, std::size_t> vertex_var;
  std::map<Edge, std::size_t> edge_var;
};

class GaussianModel {
 public:
  /// A labeling named "color" selects the colored model; it must be total.
  explicit GaussianModel(Graph graph, std::optional<Labeling> labeling = std::nullopt);

  const Graph& graph() const noexcept { return state_->graph; }
  GaussianKind kind() const noexcept { return state_->kind; }
  const std::optional<Labeling>& labeling() const noexcept { return state_->labeling; }
  bool colored() const noexcept { return state_->labeling && state_->labeling->name == "color"; }

  const GaussianParameters& parameter_ring() const noexcept { return state_->params; }
  const GaussianRing& model_ring() const noexcept { return state_->model; }
  /// Undirected: s[i,j] ↦ adj(K)_{ij} / det K. DAG: s[i,j] ↦ ((I-Λ)^{-T} Ω (I-Λ)^{-1})_{ij}.
  const RingMap& parametrization() const noexcept { return state_->param_map; }

  friend bool operator==(const GaussianModel& a, const GaussianModel& b) {
    return a.graph() == b.graph() && a.labeling() == b.labeling();
  }

 private:
  struct State {
    Graph graph;
    GaussianKind kind;
    std::optional<Labeling> labeling;
    GaussianParameters params;
    GaussianRing model;
    RingMap param_map;
  };
  std::shared_ptr<const State> state_;
};

enum class GaussianAlgorithm { Default, Eliminate, Saturate };

struct GaussianVanishingOptions {
  GaussianAlgorithm algorithm = GaussianAlgorithm::Default;
  GroebnerOptions groebner;
  /// DAG saturation only: also run elimination and return its result if the
  /// two ideals differ.
  bool cross_validate = false;
};

/// Kernel of the parametrization. Default: saturation for DAGs, elimination otherwise.
Ideal vanishing_ideal(const GaussianModel& m, const GaussianVanishingOptions& options = {});

/// The ideal used by the saturation path before saturating, and the
/// principal minors det Σ_{pa(v),pa(v)} it is saturated at.
Ideal dag_ci_ideal(const GaussianModel& m);
std::vector<MultiPoly> dag_parent_minors(const GaussianModel& m);

std::string to_string(GaussianAlgorithm a);
GaussianAlgorithm gaussian_algorithm_from_string(const std::string& s);

}  // namespace algstat
