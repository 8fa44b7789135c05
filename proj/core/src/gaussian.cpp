#include "algstat/gaussian.hpp"

#include <algorithm>
#include <set>

#include "algstat/error.hpp"
#include "algstat/polymatrix.hpp"

namespace algstat {

namespace {

GaussianParameters make_parameters(const Graph& g, const std::optional<Labeling>& labeling, GaussianKind kind) {
  GaussianParameters p;
  const auto n = static_cast<Vertex>(g.n_vertices());
  std::vector<std::string> names;
  if (kind == GaussianKind::Dag) {
    for (const auto& e : g.edges()) {
      p.edge_var[e] = names.size();
      names.push_back(indexed_name("l", {e.source, e.target}));
    }
    for (Vertex v = 1; v <= n; ++v) {
      p.vertex_var[v] = names.size();
      names.push_back(indexed_name("w", {v}));
    }
  } else if (labeling && labeling->name == "color") {
    // One variable per distinct color, in order of first use: edges, then vertices.
    std::vector<std::string> colors;
    auto add = [&](const std::string& c) {
      if (std::find(colors.begin(), colors.end(), c) == colors.end()) colors.push_back(c);
    };
    for (const auto& e : g.edges()) add(labeling->edge_labels.at(e));
    for (Vertex v = 1; v <= n; ++v) add(labeling->vertex_labels.at(v));
    for (const auto& c : colors) names.push_back("k[" + c + "]");
    auto var_of = [&](const std::string& c) {
      return static_cast<std::size_t>(std::find(colors.begin(), colors.end(), c) - colors.begin());
    };
    for (const auto& e : g.edges()) p.edge_var[e] = var_of(labeling->edge_labels.at(e));
    for (Vertex v = 1; v <= n; ++v) p.vertex_var[v] = var_of(labeling->vertex_labels.at(v));
  } else {
    for (Vertex v = 1; v <= n; ++v) {
      p.vertex_var[v] = names.size();
      names.push_back(indexed_name("k", {v, v}));
    }
    for (const auto& e : g.edges()) {
      p.edge_var[e] = names.size();
      names.push_back(indexed_name("k", {e.source, e.target}));
    }
  }
  p.ring = ring_new(std::move(names));
  return p;
}

RingMap make_parametrization(const Graph& g, GaussianKind kind, const GaussianParameters& p,
                             const GaussianRing& model) {
  const std::size_t n = g.n_vertices();
  const Ring& R = p.ring;
  auto var = [&](std::size_t idx) { return MultiPoly::variable(R, idx); };
  std::vector<MultiPoly> images(model.ring()->size(), MultiPoly(R));

  if (kind == GaussianKind::Dag) {
    // (I - Λ)^{-1} = I + Λ + Λ^2 + ... (Λ is nilpotent on a DAG).
    PolyMatrix lambda(n, std::vector<MultiPoly>(n, MultiPoly(R)));
    for (const auto& e : g.edges())
      lambda[static_cast<std::size_t>(e.source - 1)][static_cast<std::size_t>(e.target - 1)] = var(p.edge_var.at(e));
    PolyMatrix inv(n, std::vector<MultiPoly>(n, MultiPoly(R)));
    PolyMatrix power(n, std::vector<MultiPoly>(n, MultiPoly(R)));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = MultiPoly::constant(R, 1);
    for (std::size_t step = 0; step < n; ++step) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] += power[i][j];
      PolyMatrix next(n, std::vector<MultiPoly>(n, MultiPoly(R)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          if (power[i][k].is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j)
            if (!lambda[k][j].is_zero()) next[i][j] += power[i][k] * lambda[k][j];
        }
      power = std::move(next);
    }
    // Σ_{ij} = Σ_k inv[k][i] ω_k inv[k][j].
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        MultiPoly s(R);
        for (std::size_t k = 0; k < n; ++k) {
          if (inv[k][i].is_zero() || inv[k][j].is_zero()) continue;
          s += inv[k][i] * var(p.vertex_var.at(static_cast<Vertex>(k + 1))) * inv[k][j];
        }
        images[model.index(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1))] = std::move(s);
      }
    return RingMap(model.ring(), R, std::move(images));
  }

  PolyMatrix k(n, std::vector<MultiPoly>(n, MultiPoly(R)));
  for (std::size_t v = 1; v <= n; ++v) k[v - 1][v - 1] = var(p.vertex_var.at(static_cast<Vertex>(v)));
  for (const auto& e : g.edges()) {
    auto a = static_cast<std::size_t>(e.source - 1);
    auto b = static_cast<std::size_t>(e.target - 1);
    k[a][b] = k[b][a] = var(p.edge_var.at(e));
  }
  MultiPoly det = determinant(k, R);
  PolyMatrix adj = adjugate(k, R);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      images[model.index(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1))] = adj[i][j];
  return RingMap(model.ring(), R, std::move(images), std::move(det));
}

}  // namespace

GaussianModel::GaussianModel(Graph graph, std::optional<Labeling> labeling) {
  const GaussianKind kind = graph.directed() ? GaussianKind::Dag : GaussianKind::Undirected;
  if (kind == GaussianKind::Dag && !graph.is_acyclic())
    throw Error(ErrorCode::CyclicGraph, "Gaussian DAG model on a cyclic graph");
  if (labeling && labeling->name == "color") {
    if (kind == GaussianKind::Dag)
      throw Error(ErrorCode::UnsupportedGraphKind, "colored Gaussian models are undirected");
    if (!labeling->is_total(graph))
      throw Error(ErrorCode::MissingLabel, "every vertex and edge needs a color");
  }
  GaussianParameters params = make_parameters(graph, labeling, kind);
  GaussianRing model(graph.n_vertices());
  RingMap map = make_parametrization(graph, kind, params, model);
  state_ = std::make_shared<const State>(
      State{std::move(graph), kind, std::move(labeling), std::move(params), std::move(model), std::move(map)});
}

Ideal dag_ci_ideal(const GaussianModel& m) {
  const auto stmts = global_markov(m.graph());
  return ci_ideal(m.model_ring(), stmts);
}

std::vector<MultiPoly> dag_parent_minors(const GaussianModel& m) {
  std::vector<MultiPoly> minors;
  const auto n = static_cast<Vertex>(m.graph().n_vertices());
  for (Vertex v = 1; v <= n; ++v) {
    auto pa = m.graph().parents(v);
    if (pa.empty()) continue;
    MultiPoly d = determinant(m.model_ring().submatrix(pa, pa), m.model_ring().ring());
    if (std::find(minors.begin(), minors.end(), d) == minors.end()) minors.push_back(std::move(d));
  }
  return minors;
}

namespace {

Ideal saturate_dag(const GaussianModel& m, const GroebnerOptions& opts) {
  Ideal j = dag_ci_ideal(m);
  if (j.is_zero()) return j;
  // (J : (f1 f2 ...)^∞) = ((J : f1^∞) : f2^∞) ...
  for (const auto& f : dag_parent_minors(m)) j = saturate(j, f, opts);
  return j;
}

}  // namespace

Ideal vanishing_ideal(const GaussianModel& m, const GaussianVanishingOptions& options) {
  GaussianAlgorithm alg = options.algorithm;
  if (alg == GaussianAlgorithm::Default)
    alg = m.kind() == GaussianKind::Dag ? GaussianAlgorithm::Saturate : GaussianAlgorithm::Eliminate;
  if (alg == GaussianAlgorithm::Eliminate) return kernel_of_map(m.parametrization(), options.groebner);
  if (m.kind() != GaussianKind::Dag)
    throw Error(ErrorCode::UnsupportedAlgorithm, "the saturation algorithm applies to DAG models only");
  Ideal sat = saturate_dag(m, options.groebner);
  if (options.cross_validate) {
    Ideal elim = kernel_of_map(m.parametrization(), options.groebner);
    if (!ideal_equal(sat, elim)) return elim;
  }
  return sat;
}

std::string to_string(GaussianAlgorithm a) {
  switch (a) {
    case GaussianAlgorithm::Default: return "default";
    case GaussianAlgorithm::Eliminate: return "eliminate";
    case GaussianAlgorithm::Saturate: return "saturate";
  }
  return "default";
}

GaussianAlgorithm gaussian_algorithm_from_string(const std::string& s) {
  if (s == "default") return GaussianAlgorithm::Default;
  if (s == "eliminate") return GaussianAlgorithm::Eliminate;
  if (s == "saturate") return GaussianAlgorithm::Saturate;
  throw Error(ErrorCode::UnsupportedAlgorithm, "unknown Gaussian algorithm '" + s + "'");
}

}  // namespace algstat
