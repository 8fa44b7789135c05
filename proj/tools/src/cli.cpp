#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "algstat/ci.hpp"
#include "algstat/error.hpp"
#include "algstat/persist.hpp"
#include "builtins.hpp"

namespace algstat::cli {

namespace {

using persist::json;
using Model = builtins::Model;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  json doc = json::parse(read_text(path), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "'" + path + "' is not valid JSON");
  return doc;
}

// A builtin name, a persisted Graph/PhyloNetwork/GaussianModel/PhyloModel, or
// a bare {"kind": ..., "edges": [...]} object.
Graph load_graph(const std::string& spec) {
  if (auto g = builtins::graph(spec)) return *g;
  json doc = read_json(spec);
  if (doc.is_object() && doc.contains("_type")) {
    persist::Object obj = persist::from_envelope(doc);
    if (auto* g = std::get_if<Graph>(&obj)) return *g;
    if (auto* n = std::get_if<PhyloNetwork>(&obj)) return n->graph;
    if (auto* m = std::get_if<GaussianModel>(&obj)) return m->graph();
    if (auto* m = std::get_if<PhyloModel>(&obj)) return m->network().graph;
    throw Error(ErrorCode::SchemaMismatch, "'" + spec + "' holds a " + persist::type_name(obj) + ", not a graph");
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("edges"))
    throw Error(ErrorCode::ParseError, "'" + spec + "' is not a graph document");
  std::vector<std::pair<Vertex, Vertex>> edges;
  try {
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "'" + spec + "': bad edge list: " + e.what());
  }
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind != "directed" && kind != "undirected") throw Error(ErrorCode::ParseError, "unknown graph kind '" + kind + "'");
  std::optional<std::size_t> n;
  if (doc.contains("n_vertices")) n = doc.at("n_vertices").get<std::size_t>();
  return graph_from_edges(kind == "directed" ? GraphKind::Directed : GraphKind::Undirected, edges, n);
}

Model model_from_graph(const Graph& g, const std::string& kind) {
  if (kind.empty() || kind == "gaussian") return GaussianModel(g);
  return PhyloModel(phylo_validate(g), phylo_kind_from_string(kind));
}

Model load_model(const std::string& spec, const std::string& kind) {
  if (kind.empty())
    if (auto m = builtins::model(spec)) return *m;
  if (builtins::graph(spec)) return model_from_graph(*builtins::graph(spec), kind);
  json doc = read_json(spec);
  if (kind.empty() && doc.is_object() && doc.contains("_type")) {
    persist::Object obj = persist::from_envelope(doc);
    if (auto* m = std::get_if<GaussianModel>(&obj)) return *m;
    if (auto* m = std::get_if<PhyloModel>(&obj)) return *m;
  }
  return model_from_graph(load_graph(spec), kind);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string ring_summary(const Ring& r) {
  std::vector<std::string> shown(r->names().begin(), r->names().begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(r->size(), 6)));
  std::string s = std::to_string(r->size()) + " variables " + join(shown);
  if (r->size() > 6) s += ", ..., " + r->names().back();
  return s;
}

std::string describe(const Model& m) {
  std::ostringstream os;
  if (auto* g = std::get_if<GaussianModel>(&m)) {
    os << (g->colored() ? "Colored " : "") << "Gaussian graphical model on a"
       << (g->kind() == GaussianKind::Dag ? " directed acyclic" : "n undirected") << " graph with "
       << g->graph().n_vertices() << " vertices and " << g->graph().edges().size() << " edges\n";
    os << "  edges: ";
    for (const auto& e : g->graph().edges()) os << to_string(e);
    os << "\n  parameter ring: " << ring_summary(g->parameter_ring().ring) << "\n";
    os << "  model ring: " << ring_summary(g->model_ring().ring()) << "\n";
    return os.str();
  }
  const auto& p = std::get<PhyloModel>(m);
  const auto& net = p.network();
  os << (p.group_based() ? "Group-based phylogenetic model" : "Phylogenetic model") << " (" << to_string(p.kind())
     << ") on a " << (net.is_tree() ? "tree" : "level-1 network") << " with ";
  if (!net.is_tree()) os << net.hybrid_nodes.size() << " hybrid node" << (net.hybrid_nodes.size() == 1 ? "" : "s") << ", ";
  os << net.leaves.size() << " leaves and " << net.graph.edges().size() << " edges\n";
  os << "  edges: ";
  for (const auto& e : net.graph.edges()) os << to_string(e);
  os << "\n  root distribution: ";
  if (p.symbolic_root()) {
    os << "symbolic";
  } else {
    std::vector<std::string> r;
    for (const auto& q : p.root_distribution()) r.push_back(rat_to_string(q));
    os << "[" << join(r) << "]";
  }
  os << "\n  transition matrices:\n";
  for (const auto& row : p.transition_template()) os << "    [" << join(row, " ") << "]\n";
  if (p.group_based()) os << "  fourier parameters: [" << join(p.group()->fourier_template) << "]\n";
  const CoordSpace space = p.default_space();
  os << "  parameter ring: " << ring_summary(p.parameter_ring(space).ring) << "\n";
  os << "  model ring (" << to_string(space) << "): " << ring_summary(p.model_ring(space).ring) << "\n";
  return os.str();
}

persist::Object as_object(const Model& m) {
  if (auto* g = std::get_if<GaussianModel>(&m)) return *g;
  return std::get<PhyloModel>(m);
}

std::string map_text(const RingMap& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.images().size(); ++i)
    os << f.source()->name(i) << " -> " << f.images()[i].to_string() << "\n";
  if (f.denominator()) os << "denominator: " << f.denominator()->to_string() << "\n";
  return os.str();
}

std::string ideal_text(const Ideal& I) {
  std::ostringstream os;
  if (I.is_zero()) os << "0\n";
  for (const auto& g : I.gens()) os << g.to_string() << "\n";
  return os.str();
}

std::string kernel_text(const GradedKernelResult& r) {
  std::ostringstream os;
  os << "# " << r.generator_count() << " minimal generators in " << r.components.size()
     << " components up to total degree " << r.max_total_degree << "\n";
  for (unsigned d = 1; d <= r.max_total_degree; ++d) os << "# degree " << d << ": " << r.generator_count(d) << "\n";
  for (const auto& [deg, polys] : r.components) {
    os << to_string(deg) << "\n";
    for (const auto& f : polys) os << "  " << f.to_string() << "\n";
  }
  return os.str();
}

CoordSpace space_for(const PhyloModel& m, const std::string& s) {
  return s.empty() ? m.default_space() : coord_space_from_string(s);
}

struct VanishingRequest {
  std::string model;
  std::string kind;
  std::string space;
  std::string algorithm = "default";
  unsigned max_degree = 3;
  bool cross_validate = false;
};

struct VanishingOutcome {
  Ideal ideal;
  std::string note;
};

VanishingOutcome compute_vanishing(const VanishingRequest& rq, const CliConfig& cfg) {
  Model m = load_model(rq.model, rq.kind);
  GroebnerOptions gopts{cfg.degree_cap};
  if (auto* g = std::get_if<GaussianModel>(&m)) {
    if (!rq.space.empty()) throw Error(ErrorCode::UnsupportedAlgorithm, "--space applies to phylogenetic models");
    GaussianVanishingOptions o;
    o.algorithm = gaussian_algorithm_from_string(rq.algorithm);
    o.groebner = gopts;
    o.cross_validate = rq.cross_validate;
    return {vanishing_ideal(*g, o), ""};
  }
  const auto& p = std::get<PhyloModel>(m);
  PhyloVanishingOptions o;
  o.algorithm = phylo_algorithm_from_string(rq.algorithm);
  o.max_degree = rq.max_degree;
  o.workers = cfg.workers;
  o.groebner = gopts;
  auto res = vanishing_ideal(p, space_for(p, rq.space), o);
  std::string note;
  if (res.degree_bounded)
    note = "# degree-bounded result (total degree <= " + std::to_string(res.max_degree) + "); may be incomplete\n";
  return {std::move(res.ideal), note};
}

std::optional<std::uint64_t> env_degree_cap() {
  const char* v = std::getenv("ALGSTAT_DEGREE_CAP");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0') throw CLI::ValidationError("ALGSTAT_DEGREE_CAP", "must be a non-negative integer");
  return x;
}

json parse_query_value(const std::string& s) {
  json v = json::parse(s, nullptr, false);
  if (v.is_discarded() || v.is_object() || v.is_array()) return s;
  return v;
}

BigRat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  BigRat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Evaluates probabilities at random edge parameters, applies the full
// character transform and compares with the Fourier parametrization.
std::size_t fourier_check(const PhyloModel& m, std::size_t draws, std::uint64_t seed) {
  if (!m.group_based()) throw Error(ErrorCode::NotGroupBased, "fourier-check needs a group-based model");
  std::mt19937_64 rng(seed);
  const auto& pr = m.parameter_ring(CoordSpace::Probability);
  const auto& fr = m.parameter_ring(CoordSpace::Fourier);
  const auto& net = m.network();
  const std::size_t n = net.leaves.size();
  RingMap psi = m.fourier_parametrization();
  std::vector<StateTuple> tuples;
  {
    StateTuple t(n, 1);
    for (;;) {
      tuples.push_back(t);
      std::size_t i = n;
      while (i > 0 && t[i - 1] == 4) t[--i] = 1;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
  std::vector<MultiPoly> prob;
  for (const auto& t : tuples) prob.push_back(m.probability_at(t));
  std::size_t ok = 0;
  const auto& tmpl = m.transition_template();
  for (std::size_t draw = 0; draw < draws; ++draw) {
    std::vector<BigRat> pv(pr.ring->size()), fv(fr.ring->size());
    for (std::size_t h = 0; h < pr.hybrid.size(); ++h)
      for (std::size_t j = 0; j < pr.hybrid[h].size(); ++j) {
        BigRat l = random_rational(rng);
        pv[pr.hybrid[h][j]] = l;
        fv[fr.hybrid[h][j]] = l;
      }
    for (std::size_t e = 1; e <= net.indexed_edges.size(); ++e) {
      std::map<std::string, BigRat> f;  // template symbol -> value
      for (const auto& s : tmpl[0]) f.emplace(s, random_rational(rng));
      for (const auto& [s, v] : f) pv[pr.ring->require_index(indexed_name(s, {static_cast<int>(e)}))] = v;
      for (int g = 0; g < 4; ++g) {
        BigRat lambda = 0;
        for (int h = 0; h < 4; ++h) lambda += GroupStructure::character(g, h) * f.at(tmpl[0][static_cast<std::size_t>(h)]);
        fv[fr.ring->require_index(indexed_name(m.group()->fourier_template[static_cast<std::size_t>(g)], {static_cast<int>(e)}))] =
            lambda;
      }
    }
    std::vector<BigRat> pvals;
    for (const auto& p : prob) pvals.push_back(p.evaluate(pv));
    bool good = true;
    const auto& qr = m.model_ring(CoordSpace::Fourier);
    for (std::size_t c = 0; c < qr.classes.size() && good; ++c) {
      const auto& g = qr.classes[c].representative;
      BigRat hat = 0;
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        int chi = 1;
        for (std::size_t i = 0; i < n; ++i) chi *= GroupStructure::character(g[i] - 1, tuples[t][i] - 1);
        hat += chi * pvals[t];
      }
      if (hat != psi.images()[c].evaluate(fv)) good = false;
    }
    if (good) ++ok;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"algstat: algebraic statistics models and their ideals"};
  app.name("algstat");
  app.require_subcommand(1);
  CliConfig cfg;
  std::optional<std::uint64_t> cap_flag;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
  app.add_option("--workers", cfg.workers, "Worker threads for multigraded implicitization")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", cap_flag, "Abort Groebner computations past this degree (default: $ALGSTAT_DEGREE_CAP)");

  std::ostringstream buffer;
  std::function<void()> action;

  // model
  auto* model_cmd = app.add_subcommand("model", "Build and inspect models");
  model_cmd->require_subcommand(1);
  std::string graph_spec, model_spec, kind, space;
  auto* build = model_cmd->add_subcommand("build", "Build a model from a graph or a built-in name");
  auto* build_src = build->add_option_group("source");
  build_src->add_option("--graph", graph_spec, "Built-in name or graph JSON file");
  build_src->add_option("--model", model_spec, "Built-in model name or model JSON file");
  build_src->require_option(1);
  build->add_option("--kind", kind, "gaussian, JC, K2, K3 or GM");
  build->callback([&] {
    action = [&] {
      Model m = graph_spec.empty() ? load_model(model_spec, kind) : model_from_graph(load_graph(graph_spec), kind);
      if (cfg.format == "json") buffer << persist::serialize(as_object(m));
      else buffer << describe(m);
    };
  });
  auto* param = model_cmd->add_subcommand("param", "Print the parametrization of a model");
  param->add_option("--model", model_spec, "Built-in model name or model JSON file")->required();
  param->add_option("--kind", kind, "Model kind when --model names a graph");
  param->add_option("--space", space, "probability or fourier (phylogenetic models)");
  param->callback([&] {
    action = [&] {
      Model m = load_model(model_spec, kind);
      std::optional<RingMap> f;
      if (auto* g = std::get_if<GaussianModel>(&m)) f = g->parametrization();
      else {
        const auto& p = std::get<PhyloModel>(m);
        f = p.parametrization(space_for(p, space));
      }
      if (cfg.format == "json") buffer << persist::serialize(*f);
      else buffer << "parameter ring: " << ring_summary(f->target()) << "\n" << map_text(*f);
    };
  });

  // ci
  auto* ci_cmd = app.add_subcommand("ci", "Conditional independence statements and ideals");
  ci_cmd->require_subcommand(1);
  std::vector<std::string> stmts;
  std::size_t n_vars = 0;
  auto* markov = ci_cmd->add_subcommand("markov", "Pairwise global Markov statements of a graph");
  markov->add_option("--graph", graph_spec, "Built-in name or graph JSON file")->required();
  markov->callback([&] {
    action = [&] {
      auto sts = global_markov(load_graph(graph_spec));
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& s : sts) arr.push_back(s.to_string());
        buffer << arr.dump(2) << "\n";
      } else {
        for (const auto& s : sts) buffer << s.to_string() << "\n";
      }
    };
  });
  auto* ci_ideal_cmd = ci_cmd->add_subcommand("ideal", "Gaussian CI ideal");
  auto* ci_src = ci_ideal_cmd->add_option_group("statements");
  ci_src->add_option("--graph", graph_spec, "Use the global Markov statements of this graph");
  ci_src->add_option("--stmt", stmts, "Statement such as '[1 _||_ 3 | {2, 4}]' (repeatable)");
  ci_src->require_option(1);
  ci_ideal_cmd->add_option("--n", n_vars, "Number of Gaussian variables (default: largest vertex)");
  ci_ideal_cmd->callback([&] {
    action = [&] {
      std::vector<CIStmt> sts;
      std::size_t n = n_vars;
      if (!graph_spec.empty()) {
        Graph g = load_graph(graph_spec);
        sts = global_markov(g);
        n = std::max(n, g.n_vertices());
      }
      for (const auto& s : stmts) sts.push_back(CIStmt::parse(s));
      for (const auto& s : sts)
        for (const VertexSet* set : {&s.a(), &s.b(), &s.c()})
          for (Vertex v : *set) n = std::max(n, static_cast<std::size_t>(v));
      Ideal I = ci_ideal(GaussianRing(n), sts);
      if (cfg.format == "json") buffer << persist::serialize(I);
      else buffer << ideal_text(I);
    };
  });

  // ideal
  auto* ideal_cmd = app.add_subcommand("ideal", "Vanishing ideals");
  ideal_cmd->require_subcommand(1);
  VanishingRequest rq;
  auto* vanishing = ideal_cmd->add_subcommand("vanishing", "Vanishing ideal of a model");
  auto add_vanishing_options = [&](CLI::App* cmd) {
    cmd->add_option("--model", rq.model, "Built-in model name or model JSON file")->required();
    cmd->add_option("--kind", rq.kind, "Model kind when --model names a graph");
    cmd->add_option("--space", rq.space, "probability or fourier (phylogenetic models)");
    cmd->add_option("--algorithm", rq.algorithm, "default, eliminate, saturate, toric or multigraded")
        ->check(CLI::IsMember({"default", "eliminate", "saturate", "toric", "multigraded"}));
    cmd->add_option("--max-degree", rq.max_degree, "Total degree bound for multigraded")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  add_vanishing_options(vanishing);
  vanishing->add_flag("--cross-validate", rq.cross_validate, "DAG saturation: compare against elimination");
  vanishing->callback([&] {
    action = [&] {
      auto res = compute_vanishing(rq, cfg);
      if (cfg.format == "json") buffer << persist::serialize(res.ideal);
      else buffer << res.note << ideal_text(res.ideal);
    };
  });
  auto* components = ideal_cmd->add_subcommand("components", "Multigraded kernel components up to a total degree");
  unsigned comp_degree = 2;
  components->add_option("--model", rq.model, "Built-in model name or model JSON file")->required();
  components->add_option("--kind", rq.kind, "Model kind when --model names a graph");
  components->add_option("--space", rq.space, "probability or fourier");
  components->add_option("--max-degree", comp_degree, "Total degree bound")->check(CLI::PositiveNumber);
  components->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  components->callback([&] {
    action = [&] {
      Model m = load_model(rq.model, rq.kind);
      RingMap phi = [&] {
        if (auto* g = std::get_if<GaussianModel>(&m)) return g->parametrization();
        const auto& p = std::get<PhyloModel>(m);
        return p.parametrization(space_for(p, rq.space));
      }();
      auto res = components_of_kernel(comp_degree, phi, {cfg.workers});
      if (cfg.format == "json") buffer << persist::serialize(res);
      else buffer << kernel_text(res);
    };
  });

  // fourier
  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coordinates of group-based models");
  fourier_cmd->require_subcommand(1);
  bool inverse = false;
  auto* change = fourier_cmd->add_subcommand("change", "Linear change between Fourier and probability coordinates");
  change->add_option("--model", model_spec, "Built-in model name or model JSON file")->required();
  change->add_option("--kind", kind, "Model kind when --model names a graph");
  change->add_flag("--inverse", inverse, "Probability to Fourier instead");
  change->callback([&] {
    action = [&] {
      Model m = load_model(model_spec, kind);
      auto* p = std::get_if<PhyloModel>(&m);
      if (!p) throw Error(ErrorCode::NotGroupBased, "'" + model_spec + "' is not a phylogenetic model");
      RingMap f = inverse ? inverse_coordinate_change(*p) : coordinate_change(*p);
      if (cfg.format == "json") buffer << persist::serialize(f);
      else buffer << map_text(f);
    };
  });

  // db
  auto* db_cmd = app.add_subcommand("db", "File-backed model collections");
  db_cmd->require_subcommand(1);
  std::string dir, id, file;
  std::vector<std::string> queries;
  auto* find = db_cmd->add_subcommand("find", "Documents matching dotted-path equalities");
  find->add_option("--dir", dir, "Collection directory")->required();
  find->add_option("--query", queries, "path=value, e.g. data.model_type=JC (repeatable)");
  find->callback([&] {
    action = [&] {
      std::map<std::string, json> q;
      for (const auto& s : queries) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--query", "expected path=value, got '" + s + "'");
        q[s.substr(0, eq)] = parse_query_value(s.substr(eq + 1));
      }
      std::vector<std::string> warnings;
      auto matches = persist::Collection(dir).find(q, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& mt : matches) arr.push_back({{"id", mt.id}, {"document", persist::to_envelope(mt.object)}});
        buffer << arr.dump(2) << "\n";
      } else {
        buffer << matches.size() << " matching document" << (matches.size() == 1 ? "" : "s") << "\n";
        for (const auto& mt : matches) buffer << mt.id << "\t" << persist::type_name(mt.object) << "\n";
      }
    };
  });
  auto* add = db_cmd->add_subcommand("add", "Add a model or persisted document to a collection");
  add->add_option("--dir", dir, "Collection directory")->required();
  add->add_option("--id", id, "Document id")->required();
  auto* add_src = add->add_option_group("source");
  add_src->add_option("--model", model_spec, "Built-in model name or model JSON file");
  add_src->add_option("--file", file, "Any persisted document");
  add_src->require_option(1);
  add->add_option("--kind", kind, "Model kind when --model names a graph");
  add->callback([&] {
    action = [&] {
      persist::Object obj = file.empty() ? as_object(load_model(model_spec, kind)) : persist::load(file);
      persist::Collection(dir).add(id, obj);
      buffer << "added " << id << " (" << persist::type_name(obj) << ")\n";
    };
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Repeat a computation and report wall times");
  std::size_t repeat = 5;
  std::uint64_t seed = 1;
  std::string task = "vanishing";
  std::size_t draws = 100;
  bench->add_option("--task", task, "vanishing, components or fourier-check")
      ->check(CLI::IsMember({"vanishing", "components", "fourier-check"}));
  add_vanishing_options(bench);
  bench->add_option("--repeat", repeat, "Number of runs")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Seed for fourier-check draws");
  bench->add_option("--draws", draws, "Random draws per fourier-check run");
  bench->callback([&] {
    action = [&] {
      std::vector<double> times;
      std::string summary;
      for (std::size_t r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        if (task == "vanishing") {
          auto res = compute_vanishing(rq, cfg);
          summary = std::to_string(res.ideal.gens().size()) + " generators";
        } else if (task == "components") {
          Model m = load_model(rq.model, rq.kind);
          const auto* p = std::get_if<PhyloModel>(&m);
          RingMap phi = p ? p->parametrization(space_for(*p, rq.space)) : std::get<GaussianModel>(m).parametrization();
          auto res = components_of_kernel(rq.max_degree, phi, {cfg.workers});
          summary = std::to_string(res.generator_count()) + " minimal generators";
        } else {
          Model m = load_model(rq.model, rq.kind);
          const auto* p = std::get_if<PhyloModel>(&m);
          if (!p) throw Error(ErrorCode::NotGroupBased, "fourier-check needs a phylogenetic model");
          summary = std::to_string(fourier_check(*p, draws, seed)) + "/" + std::to_string(draws) + " draws consistent";
        }
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
      const double mn = *std::min_element(times.begin(), times.end());
      const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
      if (cfg.format == "json") {
        buffer << json{{"task", task}, {"model", rq.model}, {"runs", repeat}, {"min_seconds", mn},
                       {"mean_seconds", mean}, {"result", summary}}
                      .dump(2)
               << "\n";
      } else {
        buffer << task << " " << rq.model << ": " << summary << "\n";
        buffer << "runs " << repeat << "  min " << mn << " s  mean " << mean << " s\n";
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.degree_cap = cap_flag ? cap_flag : env_degree_cap();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: IoError: cannot write '" << cfg.output << "'\n";
      return 1;
    }
    f << buffer.str();
  }
  return 0;
}

}  // namespace algstat::cli
