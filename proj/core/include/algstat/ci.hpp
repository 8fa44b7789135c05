#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algstat/graph.hpp"
#include "algstat/groebner.hpp"
#include "algstat/polymatrix.hpp"

namespace algstat {

/// A ⫫ B | C with disjoint A, B, C and nonempty A, B. Canonical form has
/// sorted sets and A < B lexicographically.
class CIStmt {
 public:
  CIStmt(VertexSet a, VertexSet b, VertexSet c = {});

  const VertexSet& a() const noexcept { return a_; }
  const VertexSet& b() const noexcept { return b_; }
  const VertexSet& c() const noexcept { return c_; }

  /// `[1 _||_ 3 | {2, 4}]`; sets with several elements print as `{1, 2}`.
  std::string to_string() const;
  static CIStmt parse(std::string_view text);

  friend auto operator<=>(const CIStmt&, const CIStmt&) = default;

 private:
  VertexSet a_, b_, c_;
};

/// QQ[s[i,j] : 1 ≤ i ≤ j ≤ n], variables in row-major upper-triangle order.
class GaussianRing {
 public:
  explicit GaussianRing(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  /// Variable index of s[i,j] = s[j,i] (1-based vertices).
  std::size_t index(Vertex i, Vertex j) const;
  MultiPoly s(Vertex i, Vertex j) const { return MultiPoly::variable(ring_, index(i, j)); }
  /// Symbolic Σ restricted to the given ordered rows and columns.
  PolyMatrix submatrix(std::span<const Vertex> rows, std::span<const Vertex> cols) const;

 private:
  std::size_t n_;
  Ring ring_;
};

/// Pairwise statements i ⫫ j | C, one per non-adjacent pair and minimal
/// (d-)separator C, in canonical order.
std::vector<CIStmt> global_markov(const Graph& g);

/// All (#C+1)-minors of Σ_{A∪C, B∪C}, rows ordered (A, C) and columns (B, C).
Ideal ci_ideal(const GaussianRing& r, std::span<const CIStmt> stmts);

}  // namespace algstat
