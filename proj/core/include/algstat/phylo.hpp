#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algstat/exactnum.hpp"
#include "algstat/graph.hpp"
#include "algstat/groebner.hpp"
#include "algstat/implicit.hpp"

namespace algstat {

enum class PhyloKind { JukesCantor, Kimura2, Kimura3, GeneralMarkov, Custom };
enum class CoordSpace { Probability, Fourier };

/// Z/2 × Z/2 with elements 1 ↔ (0,0), 2 ↔ (0,1), 3 ↔ (1,0), 4 ↔ (1,1).
struct GroupStructure {
  /// Eigenvalue symbol per character; entry 0 belongs to the trivial character.
  std::vector<std::string> fourier_template;
  /// χ_g(h) = (-1)^{g·h}, i.e. H ⊗ H with H = [[1,1],[1,-1]].
  IntMatrix characters;

  /// 0-based elements.
  static int add(int g, int h) { return g ^ h; }
  static int character(int g, int h) { return __builtin_popcount(static_cast<unsigned>(g & h)) % 2 ? -1 : 1; }
};

/// Leaf-state tuples are 1-based, like the variable names p[1,2,3].
using StateTuple = std::vector<int>;

struct CoordClass {
  StateTuple representative;  // lexicographically smallest member
  std::vector<StateTuple> members;  // sorted
  friend bool operator==(const CoordClass&, const CoordClass&) = default;
};

/// A model ring together with the variable of each class.
struct PhyloModelRing {
  Ring ring;
  std::vector<CoordClass> classes;  // class k ↔ ring variable k
  std::size_t class_of(const StateTuple& t) const;
  std::optional<std::size_t> find_class(const StateTuple& t) const;
  std::map<StateTuple, std::size_t> lookup;  // every member → class index
};

struct PhyloParameterRing {
  Ring ring;
  /// hybrid[i][j]: variable of l[i+1, j+1].
  std::vector<std::vector<std::size_t>> hybrid;
};

class PhyloModel {
 public:
  /// Named models; JC/K2/K3 use the uniform root distribution.
  PhyloModel(PhyloNetwork network, PhyloKind kind);
  /// Custom transition template (states × states symbols). A 4-state
  /// template of the form M(i,j) = f(i ⊕ j) is recognized as group-based.
  /// Without a root distribution the root is uniform.
  PhyloModel(PhyloNetwork network, std::vector<std::vector<std::string>> transition_template,
             std::optional<std::vector<BigRat>> root_distribution = std::nullopt);

  const PhyloNetwork& network() const noexcept { return s_->network; }
  PhyloKind kind() const noexcept { return s_->kind; }
  std::size_t states() const noexcept { return s_->tmpl.size(); }
  const std::vector<std::vector<std::string>>& transition_template() const noexcept { return s_->tmpl; }
  /// Empty for the symbolic root of the general Markov model.
  const std::vector<BigRat>& root_distribution() const noexcept { return s_->root; }
  bool symbolic_root() const noexcept { return s_->root.empty(); }
  const std::optional<GroupStructure>& group() const noexcept { return s_->group; }
  bool group_based() const noexcept { return s_->group.has_value(); }
  CoordSpace default_space() const noexcept { return group_based() ? CoordSpace::Fourier : CoordSpace::Probability; }

  const std::vector<CoordClass>& coordinate_classes(CoordSpace space) const;
  const PhyloModelRing& model_ring(CoordSpace space) const;
  /// Probability space: l[i,j], then each template symbol per edge, then
  /// pi[1..k] for a symbolic root. Fourier space: l[i,j], then each Fourier
  /// symbol per edge.
  const PhyloParameterRing& parameter_ring(CoordSpace space) const;

  /// Template symbol (i, j) on edge e (1-based states).
  MultiPoly entry_transition_matrix(int i, int j, const Edge& e) const;
  /// Fourier parameter of character i on edge e.
  MultiPoly entry_fourier_parameter(int i, const Edge& e) const;
  /// λ of a hybrid parent edge.
  MultiPoly entry_hybrid_parameter(const Edge& e) const;

  /// p_c ↦ the common value of p at each member of c.
  RingMap probability_parametrization() const;
  RingMap fourier_parametrization() const;
  RingMap parametrization(CoordSpace space) const {
    return space == CoordSpace::Probability ? probability_parametrization() : fourier_parametrization();
  }

  /// p at one leaf-state tuple (any tuple, no class lookup).
  MultiPoly probability_at(const StateTuple& t) const;

  friend bool operator==(const PhyloModel& a, const PhyloModel& b) {
    return a.network() == b.network() && a.kind() == b.kind() && a.transition_template() == b.transition_template() &&
           a.root_distribution() == b.root_distribution();
  }

 private:
  struct State;
  std::shared_ptr<const State> s_;

  struct State {
    PhyloNetwork network;
    PhyloKind kind;
    std::vector<std::vector<std::string>> tmpl;
    std::vector<BigRat> root;
    std::optional<GroupStructure> group;
    std::vector<std::string> symbols;  // distinct template symbols, first-appearance order
    std::vector<DisplayedTree> trees;
    PhyloParameterRing prob_params;
    std::optional<PhyloParameterRing> fourier_params;
    PhyloModelRing prob_ring;
    std::optional<PhyloModelRing> fourier_ring;
  };

  void init(PhyloNetwork network, PhyloKind kind, std::vector<std::vector<std::string>> tmpl,
            std::vector<BigRat> root);
};

std::string to_string(PhyloKind k);
PhyloKind phylo_kind_from_string(const std::string& s);
std::string to_string(CoordSpace s);
CoordSpace coord_space_from_string(const std::string& s);

/// Linear change q → p with class-averaged character sums; see README.
RingMap coordinate_change(const PhyloModel& m);
/// Linear change p → q; inverse of coordinate_change on class variables.
RingMap inverse_coordinate_change(const PhyloModel& m);

enum class PhyloAlgorithm { Default, Eliminate, Toric, Multigraded };

struct PhyloVanishingOptions {
  PhyloAlgorithm algorithm = PhyloAlgorithm::Default;
  /// Total degree bound for the multigraded algorithm.
  unsigned max_degree = 3;
  unsigned workers = 1;
  GroebnerOptions groebner;
};

struct PhyloVanishingResult {
  Ideal ideal;
  PhyloAlgorithm algorithm;
  /// True for degree-bounded (multigraded) results, which may be incomplete.
  bool degree_bounded = false;
  unsigned max_degree = 0;
};

/// Default: toric for group-based trees in Fourier space, multigraded for
/// networks, elimination otherwise.
PhyloVanishingResult vanishing_ideal(const PhyloModel& m, CoordSpace space, const PhyloVanishingOptions& options = {});

/// Toric ideal of a monomial map: lattice kernel, then saturation at all variables.
Ideal toric_ideal(const RingMap& monomial_map, const GroebnerOptions& options = {});

std::string to_string(PhyloAlgorithm a);
PhyloAlgorithm phylo_algorithm_from_string(const std::string& s);

}  // namespace algstat
