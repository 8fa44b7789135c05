#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "algstat/exactnum.hpp"
#include "algstat/polyring.hpp"

namespace algstat {

/// Z^m modulo a relation lattice L, with elements in Smith coordinates:
/// torsion residues (one per invariant factor d > 1) followed by free
/// coordinates. Two vectors are equal in the group iff their difference is in L.
class GradingGroup {
 public:
  using Element = std::vector<BigInt>;

  GradingGroup() = default;
  /// Rows of `relations` span L ⊂ Z^m.
  GradingGroup(std::size_t ambient_rank, IntMatrix relations);

  std::size_t ambient_rank() const noexcept { return m_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const SNFResult& snf() const noexcept { return snf_; }
  /// Invariant factors greater than one.
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t element_size() const noexcept { return torsion_.size() + free_rank_; }

  /// Class of an exponent vector in Z^m.
  Element element(const std::vector<BigInt>& v) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const BigInt& k) const;
  Element zero() const { return Element(element_size(), 0); }

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
    return a.m_ == b.m_ && a.relations_ == b.relations_;
  }

 private:
  Element reduce(Element e) const;

  std::size_t m_ = 0;
  IntMatrix relations_;
  SNFResult snf_;
  std::vector<std::size_t> torsion_index_;  // SNF positions with d > 1
  std::vector<BigInt> torsion_;
  std::size_t free_rank_ = 0;
};

/// The finest grading making every φ(x_i) homogeneous.
struct MaximalGrading {
  GradingGroup group;
  /// deg(x_i) for each source variable.
  std::vector<GradingGroup::Element> degrees;
  /// Source variables with φ(x_i) = 0 (assigned degree 0).
  std::vector<std::size_t> zero_images;
};

MaximalGrading maximal_grading(const RingMap& phi);

GradingGroup::Element degree_of(const MaximalGrading& g, const Monomial& m);

/// One (total degree, multidegree) piece of the kernel.
struct GradedComponent {
  /// Kernel elements of this degree not generated by lower-degree ones.
  std::vector<MultiPoly> minimal;
  /// Basis of the whole kernel in this degree.
  std::vector<MultiPoly> basis;
};

/// Lower-degree kernel, keyed by multidegree: the full basis of each
/// component of total degree d-1.
using KernelTable = std::map<GradingGroup::Element, std::vector<MultiPoly>>;

/// Kernel of φ in multidegree b and total degree d, modulo x_j·known.
GradedComponent graded_component(const RingMap& phi, const MaximalGrading& grading, const GradingGroup::Element& b,
                                 unsigned d, const KernelTable& known);

struct GradedKernelResult {
  MaximalGrading grading;
  /// Minimal generators per multidegree (nonempty components only), keys sorted.
  std::map<GradingGroup::Element, std::vector<MultiPoly>> components;
  unsigned max_total_degree = 0;

  std::size_t generator_count() const;
  std::size_t generator_count(unsigned total_degree) const;
  std::vector<MultiPoly> generators() const;

  friend bool operator==(const GradedKernelResult& a, const GradedKernelResult& b) {
    return a.grading.group == b.grading.group && a.grading.degrees == b.grading.degrees &&
           a.components == b.components && a.max_total_degree == b.max_total_degree;
  }
};

struct ImplicitOptions {
  /// Threads evaluating independent components; 1 runs serially.
  unsigned workers = 1;
};

/// Minimal kernel generators of total degree 1..d, by multidegree. Output is
/// independent of the worker count.
GradedKernelResult components_of_kernel(unsigned d, const RingMap& phi, const ImplicitOptions& options = {});

std::string to_string(const GradingGroup::Element& e);

}  // namespace algstat
