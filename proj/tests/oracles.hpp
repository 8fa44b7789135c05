#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive: enumeration instead of clever algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "algstat/exactnum.hpp"
#include "algstat/graph.hpp"
#include "algstat/polyring.hpp"

namespace oracle {

using algstat::BigInt;
using algstat::BigRat;
using algstat::Graph;
using algstat::Vertex;
using algstat::VertexSet;

inline BigRat small_rational(std::mt19937_64& rng, long lo = -9, long hi = 9, long max_den = 7) {
  BigRat q(std::uniform_int_distribution<long>(lo, hi)(rng), std::uniform_int_distribution<long>(1, max_den)(rng));
  q.canonicalize();
  return q;
}

inline std::vector<std::vector<BigRat>> identity(std::size_t n) {
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Gauss–Jordan inverse; nullopt when singular.
inline std::optional<std::vector<std::vector<BigRat>>> inverse(std::vector<std::vector<BigRat>> a) {
  const std::size_t n = a.size();
  auto inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    BigRat piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      BigRat f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Leibniz expansion over all permutations.
inline BigInt leibniz_det(const algstat::IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  BigInt total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    BigInt prod = sign;
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline bool contains(const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

inline bool is_ancestor_of_set(const Graph& g, Vertex v, const VertexSet& c) {
  // v has a directed path (possibly empty) to some member of c.
  for (Vertex w : g.descendants(v))
    if (contains(c, w)) return true;
  return false;
}

/// Visits every simple path between a and b in the skeleton.
inline void for_each_simple_path(const Graph& g, Vertex a, Vertex b,
                                 const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{a};
  std::vector<bool> used(g.n_vertices() + 1, false);
  used[static_cast<std::size_t>(a)] = true;
  std::function<void()> rec = [&] {
    Vertex last = path.back();
    if (last == b) {
      visit(path);
      return;
    }
    for (Vertex w = 1; w <= static_cast<Vertex>(g.n_vertices()); ++w) {
      if (used[static_cast<std::size_t>(w)] || !g.adjacent(last, w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      rec();
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  rec();
}

/// Textbook d-separation: every path is blocked by a non-collider in C or a
/// collider with no descendant in C.
inline bool d_separated_by_paths(const Graph& g, Vertex a, Vertex b, const VertexSet& c) {
  bool active_found = false;
  for_each_simple_path(g, a, b, [&](const std::vector<Vertex>& p) {
    if (active_found) return;
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      bool collider = g.has_edge(p[k - 1], p[k]) && g.has_edge(p[k + 1], p[k]);
      if (collider ? !is_ancestor_of_set(g, p[k], c) : contains(c, p[k])) return;
    }
    active_found = true;
  });
  return !active_found;
}

/// Undirected separation: no path avoiding C.
inline bool separated_by_paths(const Graph& g, Vertex a, Vertex b, const VertexSet& c) {
  bool found = false;
  for_each_simple_path(g, a, b, [&](const std::vector<Vertex>& p) {
    for (std::size_t k = 1; k + 1 < p.size(); ++k)
      if (contains(c, p[k])) return;
    found = true;
  });
  return !found;
}

inline VertexSet subset_of(const std::vector<Vertex>& pool, std::uint32_t mask) {
  VertexSet s;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask >> i & 1U) s.push_back(pool[i]);
  return s;
}

/// DAG on 1..n with edges i -> j (i < j) chosen by the bits of `mask`, then
/// relabelled by `perm` (perm[v-1] is the new name of v).
inline Graph dag_from_mask(std::size_t n, std::uint64_t mask, const std::vector<Vertex>& perm = {}) {
  std::vector<algstat::Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i)
    for (Vertex j = i + 1; j <= static_cast<Vertex>(n); ++j, ++bit)
      if (mask >> bit & 1U) {
        Vertex s = perm.empty() ? i : perm[static_cast<std::size_t>(i - 1)];
        Vertex t = perm.empty() ? j : perm[static_cast<std::size_t>(j - 1)];
        edges.push_back({s, t});
      }
  return Graph(algstat::GraphKind::Directed, n, edges);
}

inline Graph undirected_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<algstat::Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i)
    for (Vertex j = i + 1; j <= static_cast<Vertex>(n); ++j, ++bit)
      if (mask >> bit & 1U) edges.push_back({i, j});
  return Graph(algstat::GraphKind::Undirected, n, edges);
}

}  // namespace oracle
