#include "algstat/phylo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "algstat/error.hpp"

namespace algstat {

namespace {

using Template = std::vector<std::vector<std::string>>;

Template group_template(const std::vector<std::string>& f) {
  Template t(4, std::vector<std::string>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(i ^ j)];
  return t;
}

Template named_template(PhyloKind kind) {
  switch (kind) {
    case PhyloKind::JukesCantor: return group_template({"a", "b", "b", "b"});
    case PhyloKind::Kimura2: return group_template({"a", "b", "b", "c"});
    case PhyloKind::Kimura3: return group_template({"a", "b", "c", "d"});
    case PhyloKind::GeneralMarkov: {
      Template t(4, std::vector<std::string>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = "m" + std::to_string(i + 1) + std::to_string(j + 1);
      return t;
    }
    case PhyloKind::Custom: break;
  }
  throw Error(ErrorCode::InvalidTemplate, "custom models need an explicit template");
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// M(i,j) = f(i ⊕ j) on four states yields a group-based structure whose
// Fourier symbols name the distinct eigenvalue forms Σ_h χ_g(h) f(h).
std::optional<GroupStructure> detect_group(const Template& t, const std::vector<BigRat>& root) {
  if (t.size() != 4) return std::nullopt;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (t[i][j] != t[0][i ^ j]) return std::nullopt;
  if (root.empty()) return std::nullopt;
  for (const auto& r : root)
    if (r != BigRat(1, 4)) return std::nullopt;
  static const char* const names[] = {"x", "y", "z", "t"};
  GroupStructure g;
  g.characters = IntMatrix(4, 4);
  std::vector<std::map<std::string, int>> forms;
  for (int a = 0; a < 4; ++a) {
    std::map<std::string, int> form;
    for (int h = 0; h < 4; ++h) {
      g.characters(static_cast<std::size_t>(a), static_cast<std::size_t>(h)) = GroupStructure::character(a, h);
      form[t[0][static_cast<std::size_t>(h)]] += GroupStructure::character(a, h);
    }
    std::erase_if(form, [](const auto& kv) { return kv.second == 0; });
    auto it = std::find(forms.begin(), forms.end(), form);
    if (it == forms.end()) {
      g.fourier_template.push_back(names[forms.size()]);
      forms.push_back(std::move(form));
    } else {
      g.fourier_template.push_back(names[it - forms.begin()]);
    }
  }
  return g;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orbits of `tuples` (0-based states) under elementwise application of `perms`.
std::vector<CoordClass> orbits(const std::vector<StateTuple>& tuples, const std::vector<std::vector<int>>& perms) {
  std::set<StateTuple> seen;
  std::vector<CoordClass> out;
  for (const auto& t : tuples) {
    if (seen.count(t)) continue;
    std::set<StateTuple> orbit;
    for (const auto& p : perms) {
      StateTuple img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = p[static_cast<std::size_t>(t[i])];
      orbit.insert(img);
    }
    CoordClass c;
    for (const auto& m : orbit) {
      seen.insert(m);
      StateTuple one(m);
      for (auto& x : one) ++x;
      c.members.push_back(std::move(one));
    }
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<StateTuple> all_tuples(std::size_t n, int k) {
  std::vector<StateTuple> out;
  StateTuple t(n, 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] == k - 1) t[--i] = 0;
    if (i == 0) return out;
    ++t[i - 1];
  }
}

PhyloModelRing make_model_ring(std::vector<CoordClass> classes, const std::string& letter) {
  // Variables ordered by representative, descending.
  std::sort(classes.begin(), classes.end(),
            [](const CoordClass& a, const CoordClass& b) { return a.representative > b.representative; });
  PhyloModelRing r;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    names.push_back(indexed_name(letter, classes[k].representative));
    for (const auto& m : classes[k].members) r.lookup.emplace(m, k);
  }
  r.ring = ring_new(std::move(names));
  r.classes = std::move(classes);
  return r;
}

std::vector<std::string> hybrid_names(const PhyloNetwork& net, std::vector<std::vector<std::size_t>>& slots) {
  std::vector<std::string> names;
  for (std::size_t h = 0; h < net.hybrid_nodes.size(); ++h) {
    slots.emplace_back();
    for (std::size_t j = 0; j < net.hybrid_parent_edges[h].size(); ++j) {
      slots.back().push_back(names.size());
      names.push_back(indexed_name("l", {static_cast<int>(h + 1), static_cast<int>(j + 1)}));
    }
  }
  return names;
}

}  // namespace

std::size_t PhyloModelRing::class_of(const StateTuple& t) const {
  auto c = find_class(t);
  if (!c) throw Error(ErrorCode::IndexOutOfRange, "no coordinate class contains this tuple");
  return *c;
}

std::optional<std::size_t> PhyloModelRing::find_class(const StateTuple& t) const {
  auto it = lookup.find(t);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

PhyloModel::PhyloModel(PhyloNetwork network, PhyloKind kind) {
  if (kind == PhyloKind::Custom) throw Error(ErrorCode::InvalidTemplate, "custom models need an explicit template");
  std::vector<BigRat> root;
  if (kind != PhyloKind::GeneralMarkov) root.assign(4, BigRat(1, 4));
  init(std::move(network), kind, named_template(kind), std::move(root));
}

PhyloModel::PhyloModel(PhyloNetwork network, std::vector<std::vector<std::string>> tmpl,
                       std::optional<std::vector<BigRat>> root) {
  const std::size_t k = tmpl.size();
  std::vector<BigRat> r = root.value_or(std::vector<BigRat>(k, BigRat(1, static_cast<long>(std::max<std::size_t>(k, 1)))));
  init(std::move(network), PhyloKind::Custom, std::move(tmpl), std::move(r));
}

void PhyloModel::init(PhyloNetwork network, PhyloKind kind, Template tmpl, std::vector<BigRat> root) {
  const std::size_t k = tmpl.size();
  if (k == 0) throw Error(ErrorCode::InvalidTemplate, "empty transition template");
  for (const auto& row : tmpl) {
    if (row.size() != k) throw Error(ErrorCode::InvalidTemplate, "transition template is not square");
    for (const auto& s : row)
      if (!valid_symbol(s)) throw Error(ErrorCode::InvalidTemplate, "bad template symbol '" + s + "'");
  }
  if (kind != PhyloKind::GeneralMarkov && root.size() != k)
    throw Error(ErrorCode::InvalidTemplate, "root distribution has " + std::to_string(root.size()) +
                                                " entries for " + std::to_string(k) + " states");
  for (auto& q : root) q.canonicalize();
  if (network.leaves.empty()) throw Error(ErrorCode::InvalidTemplate, "network has no leaves");

  auto st = std::make_shared<State>();
  st->network = std::move(network);
  st->kind = kind;
  st->tmpl = std::move(tmpl);
  st->root = std::move(root);
  st->group = detect_group(st->tmpl, st->root);
  if ((kind == PhyloKind::JukesCantor || kind == PhyloKind::Kimura2 || kind == PhyloKind::Kimura3) && !st->group)
    throw Error(ErrorCode::InvalidTemplate, "group-based template not recognized");
  for (const auto& row : st->tmpl)
    for (const auto& s : row)
      if (std::find(st->symbols.begin(), st->symbols.end(), s) == st->symbols.end()) st->symbols.push_back(s);
  st->trees = displayed_trees(st->network);

  const PhyloNetwork& net = st->network;
  const auto m = static_cast<int>(net.indexed_edges.size());
  {
    auto names = hybrid_names(net, st->prob_params.hybrid);
    for (const auto& s : st->symbols)
      for (int e = 1; e <= m; ++e) names.push_back(indexed_name(s, {e}));
    if (st->root.empty())
      for (std::size_t i = 1; i <= k; ++i) names.push_back(indexed_name("pi", {static_cast<int>(i)}));
    st->prob_params.ring = ring_new(std::move(names));
  }
  const std::size_t n = net.leaves.size();
  {
    // Probability classes: state permutations preserving template and root.
    std::vector<std::vector<int>> perms;
    for (auto& p : all_permutations(static_cast<int>(k))) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const auto pi = static_cast<std::size_t>(p[i]);
        if (st->root.empty() ? pi != i : st->root[pi] != st->root[i]) ok = false;
        for (std::size_t j = 0; j < k && ok; ++j)
          if (st->tmpl[pi][static_cast<std::size_t>(p[j])] != st->tmpl[i][j]) ok = false;
      }
      if (ok) perms.push_back(std::move(p));
    }
    st->prob_ring = make_model_ring(orbits(all_tuples(n, static_cast<int>(k)), perms), "p");
  }
  if (st->group) {
    PhyloParameterRing fp;
    auto names = hybrid_names(net, fp.hybrid);
    std::vector<std::string> fsyms;
    for (const auto& s : st->group->fourier_template)
      if (std::find(fsyms.begin(), fsyms.end(), s) == fsyms.end()) fsyms.push_back(s);
    for (const auto& s : fsyms)
      for (int e = 1; e <= m; ++e) names.push_back(indexed_name(s, {e}));
    fp.ring = ring_new(std::move(names));
    st->fourier_params = std::move(fp);

    // Fourier classes: sum-zero tuples modulo template-preserving automorphisms.
    std::vector<std::vector<int>> autos;
    for (auto& p : all_permutations(3)) {
      std::vector<int> full{0, p[0] + 1, p[1] + 1, p[2] + 1};
      bool ok = true;
      for (std::size_t g = 0; g < 4; ++g)
        if (st->group->fourier_template[static_cast<std::size_t>(full[g])] != st->group->fourier_template[g]) ok = false;
      if (ok) autos.push_back(std::move(full));
    }
    std::vector<StateTuple> zero_sum;
    for (auto& t : all_tuples(n, 4)) {
      int s = 0;
      for (int x : t) s ^= x;
      if (s == 0) zero_sum.push_back(std::move(t));
    }
    st->fourier_ring = make_model_ring(orbits(zero_sum, autos), "q");
  }
  s_ = std::move(st);
}

const std::vector<CoordClass>& PhyloModel::coordinate_classes(CoordSpace space) const {
  return model_ring(space).classes;
}

const PhyloModelRing& PhyloModel::model_ring(CoordSpace space) const {
  if (space == CoordSpace::Probability) return s_->prob_ring;
  if (!s_->fourier_ring) throw Error(ErrorCode::NotGroupBased, "Fourier coordinates need a group-based model");
  return *s_->fourier_ring;
}

const PhyloParameterRing& PhyloModel::parameter_ring(CoordSpace space) const {
  if (space == CoordSpace::Probability) return s_->prob_params;
  if (!s_->fourier_params) throw Error(ErrorCode::NotGroupBased, "Fourier parameters need a group-based model");
  return *s_->fourier_params;
}

MultiPoly PhyloModel::entry_transition_matrix(int i, int j, const Edge& e) const {
  const auto k = static_cast<int>(states());
  if (i < 1 || j < 1 || i > k || j > k)
    throw Error(ErrorCode::IndexOutOfRange, "state index outside 1.." + std::to_string(k));
  const auto idx = static_cast<int>(network().edge_index(e));
  const auto& sym = s_->tmpl[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  return MultiPoly::variable(s_->prob_params.ring, indexed_name(sym, {idx}));
}

MultiPoly PhyloModel::entry_fourier_parameter(int i, const Edge& e) const {
  if (!group_based()) throw Error(ErrorCode::NotGroupBased, "Fourier parameters need a group-based model");
  if (i < 1 || i > 4) throw Error(ErrorCode::IndexOutOfRange, "character index outside 1..4");
  const auto idx = static_cast<int>(network().edge_index(e));
  return MultiPoly::variable(s_->fourier_params->ring,
                             indexed_name(s_->group->fourier_template[static_cast<std::size_t>(i - 1)], {idx}));
}

MultiPoly PhyloModel::entry_hybrid_parameter(const Edge& e) const {
  const PhyloNetwork& net = network();
  net.edge_index(e);  // NoSuchEdge
  const auto& params = parameter_ring(default_space());
  for (std::size_t h = 0; h < net.hybrid_nodes.size(); ++h)
    for (std::size_t j = 0; j < net.hybrid_parent_edges[h].size(); ++j)
      if (net.hybrid_parent_edges[h][j] == e) return MultiPoly::variable(params.ring, params.hybrid[h][j]);
  throw Error(ErrorCode::NotHybridEdge, to_string(e) + " does not enter a hybrid node");
}

MultiPoly PhyloModel::probability_at(const StateTuple& t) const {
  const State& st = *s_;
  const PhyloNetwork& net = st.network;
  const std::size_t k = st.tmpl.size();
  if (t.size() != net.leaves.size()) throw Error(ErrorCode::IndexOutOfRange, "tuple length differs from leaf count");
  for (int x : t)
    if (x < 1 || static_cast<std::size_t>(x) > k) throw Error(ErrorCode::IndexOutOfRange, "state outside range");
  const Ring& R = st.prob_params.ring;
  const std::size_t nv = net.graph.n_vertices();
  const std::size_t m = net.indexed_edges.size();
  const std::size_t hybrid_vars = R->size() - st.symbols.size() * m - (st.root.empty() ? k : 0);

  // Variable of template entry (a, b) on edge index e (0-based).
  std::vector<std::vector<std::size_t>> sym_index(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto pos = std::find(st.symbols.begin(), st.symbols.end(), st.tmpl[a][b]) - st.symbols.begin();
      sym_index[a][b] = hybrid_vars + static_cast<std::size_t>(pos) * m;
    }
  std::vector<std::size_t> internal;
  for (std::size_t v = 1; v <= nv; ++v)
    if (!net.is_leaf(static_cast<Vertex>(v))) internal.push_back(v);
  std::vector<int> state(nv + 1, 0);
  for (std::size_t i = 0; i < net.leaves.size(); ++i) state[static_cast<std::size_t>(net.leaves[i])] = t[i] - 1;

  std::vector<Term> terms;
  for (const auto& tree : st.trees) {
    std::vector<Exponent> base(R->size(), 0);
    for (std::size_t h = 0; h < tree.choice.size(); ++h) ++base[st.prob_params.hybrid[h][tree.choice[h]]];
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (source, target) with edge index
    std::vector<std::size_t> edge_idx;
    for (const auto& e : tree.tree.graph.edges()) {
      edges.emplace_back(static_cast<std::size_t>(e.source), static_cast<std::size_t>(e.target));
      edge_idx.push_back(net.edge_index(e) - 1);
    }
    std::vector<int> assign(internal.size(), 0);
    for (;;) {
      for (std::size_t a = 0; a < internal.size(); ++a) state[internal[a]] = assign[a];
      std::vector<Exponent> exps(base);
      for (std::size_t q = 0; q < edges.size(); ++q)
        ++exps[sym_index[static_cast<std::size_t>(state[edges[q].first])][static_cast<std::size_t>(state[edges[q].second])] +
               edge_idx[q]];
      const auto r = static_cast<std::size_t>(state[static_cast<std::size_t>(net.root)]);
      BigRat coeff = 1;
      if (st.root.empty()) ++exps[R->size() - k + r];
      else coeff = st.root[r];
      if (coeff != 0) terms.push_back({Monomial(std::move(exps)), coeff});
      std::size_t pos = internal.size();
      while (pos > 0 && assign[pos - 1] == static_cast<int>(k) - 1) assign[--pos] = 0;
      if (pos == 0) break;
      ++assign[pos - 1];
    }
  }
  return MultiPoly::from_terms(R, std::move(terms));
}

RingMap PhyloModel::probability_parametrization() const {
  const PhyloModelRing& mr = s_->prob_ring;
  std::vector<MultiPoly> images;
  for (const auto& c : mr.classes) {
    MultiPoly img = probability_at(c.representative);
    for (const auto& member : c.members)
      if (member != c.representative && probability_at(member) != img)
        throw Error(ErrorCode::SymmetryViolation, "class " + indexed_name("p", c.representative) +
                                                      " has members with different images");
    images.push_back(std::move(img));
  }
  return RingMap(mr.ring, s_->prob_params.ring, std::move(images));
}

RingMap PhyloModel::fourier_parametrization() const {
  if (!group_based()) throw Error(ErrorCode::NotGroupBased, "Fourier parametrization needs a group-based model");
  const State& st = *s_;
  const PhyloNetwork& net = st.network;
  const PhyloParameterRing& fp = *st.fourier_params;
  const Ring& R = fp.ring;
  const std::size_t m = net.indexed_edges.size();
  std::size_t hybrid_vars = 0;
  for (const auto& h : fp.hybrid) hybrid_vars += h.size();
  std::vector<std::string> fsyms;
  for (const auto& s : st.group->fourier_template)
    if (std::find(fsyms.begin(), fsyms.end(), s) == fsyms.end()) fsyms.push_back(s);
  std::vector<std::size_t> block(4);
  for (std::size_t g = 0; g < 4; ++g)
    block[g] = hybrid_vars + static_cast<std::size_t>(std::find(fsyms.begin(), fsyms.end(), st.group->fourier_template[g]) -
                                                     fsyms.begin()) * m;

  auto image_of = [&](const StateTuple& rep) {
    std::vector<Term> terms;
    for (const auto& tree : st.trees) {
      std::vector<Exponent> exps(R->size(), 0);
      for (std::size_t h = 0; h < tree.choice.size(); ++h) ++exps[fp.hybrid[h][tree.choice[h]]];
      for (const auto& e : tree.tree.graph.edges()) {
        int gamma = 0;  // group sum of the leaf labels below e
        for (Vertex d : tree.tree.graph.descendants(e.target))
          if (net.is_leaf(d)) {
            auto pos = std::lower_bound(net.leaves.begin(), net.leaves.end(), d) - net.leaves.begin();
            gamma = GroupStructure::add(gamma, rep[static_cast<std::size_t>(pos)] - 1);
          }
        ++exps[block[static_cast<std::size_t>(gamma)] + net.edge_index(e) - 1];
      }
      terms.push_back({Monomial(std::move(exps)), 1});
    }
    return MultiPoly::from_terms(R, std::move(terms));
  };

  const PhyloModelRing& mr = *st.fourier_ring;
  std::vector<MultiPoly> images;
  for (const auto& c : mr.classes) {
    MultiPoly img = image_of(c.representative);
    for (const auto& member : c.members)
      if (member != c.representative && image_of(member) != img)
        throw Error(ErrorCode::SymmetryViolation, "class " + indexed_name("q", c.representative) +
                                                      " has members with different images");
    images.push_back(std::move(img));
  }
  return RingMap(mr.ring, R, std::move(images));
}

// ---- coordinate changes -----------------------------------------------------

namespace {

int chi(const StateTuple& g, const StateTuple& h) {
  int s = 1;
  for (std::size_t i = 0; i < g.size(); ++i) s *= GroupStructure::character(g[i] - 1, h[i] - 1);
  return s;
}

void require_square_classes(const PhyloModel& m) {
  if (!m.group_based()) throw Error(ErrorCode::NotGroupBased, "coordinate change needs a group-based model");
  if (m.model_ring(CoordSpace::Probability).classes.size() != m.model_ring(CoordSpace::Fourier).classes.size())
    throw Error(ErrorCode::SymmetryViolation, "probability and Fourier classes do not correspond");
}

}  // namespace

RingMap coordinate_change(const PhyloModel& m) {
  require_square_classes(m);
  const auto& q = m.model_ring(CoordSpace::Fourier);
  const auto& p = m.model_ring(CoordSpace::Probability);
  std::vector<MultiPoly> images;
  for (const auto& gc : q.classes) {
    MultiPoly img(p.ring);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
      BigInt s = 0;
      for (const auto& h : p.classes[c].members) s += chi(gc.representative, h);
      if (s == 0) continue;
      BigRat w(s, BigInt(static_cast<unsigned long>(p.classes[c].members.size())));
      w.canonicalize();
      img += w * MultiPoly::variable(p.ring, c);
    }
    images.push_back(std::move(img));
  }
  return RingMap(q.ring, p.ring, std::move(images));
}

RingMap inverse_coordinate_change(const PhyloModel& m) {
  require_square_classes(m);
  const auto& q = m.model_ring(CoordSpace::Fourier);
  const auto& p = m.model_ring(CoordSpace::Probability);
  BigInt scale = 1;
  for (std::size_t i = 0; i < m.network().leaves.size(); ++i) scale *= 4;
  std::vector<MultiPoly> images;
  for (const auto& pc : p.classes) {
    MultiPoly img(q.ring);
    for (std::size_t g = 0; g < q.classes.size(); ++g) {
      BigInt s = 0;
      for (const auto& gm : q.classes[g].members)
        for (const auto& h : pc.members) s += chi(gm, h);
      if (s == 0) continue;
      BigRat w(s, scale);
      w.canonicalize();
      img += w * MultiPoly::variable(q.ring, g);
    }
    images.push_back(std::move(img));
  }
  return RingMap(p.ring, q.ring, std::move(images));
}

// ---- vanishing ideals -------------------------------------------------------

Ideal toric_ideal(const RingMap& phi, const GroebnerOptions& options) {
  const Ring& src = phi.source();
  const std::size_t n = src->size();
  const std::size_t m = phi.target()->size();
  std::vector<MultiPoly> gens;
  std::vector<std::size_t> cols;  // source variables with a nonzero monomial image
  for (std::size_t i = 0; i < n; ++i) {
    const auto& img = phi.images()[i];
    if (img.is_zero()) gens.push_back(MultiPoly::variable(src, i));
    else if (img.term_count() != 1) throw Error(ErrorCode::UnsupportedAlgorithm, "toric algorithm needs a monomial map");
    else cols.push_back(i);
  }
  IntMatrix a(m, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) a(r, c) = phi.images()[cols[c]].terms()[0].monomial[r];
  for (const auto& u : lattice_kernel(a)) {
    std::vector<Exponent> plus(n, 0), minus(n, 0);
    BigRat cplus = 1, cminus = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const BigRat& coeff = phi.images()[cols[c]].terms()[0].coeff;
      if (u[c] > 0) {
        plus[cols[c]] = static_cast<Exponent>(u[c].get_ui());
        for (unsigned long e = 0; e < u[c].get_ui(); ++e) cplus *= coeff;
      } else if (u[c] < 0) {
        BigInt v = -u[c];
        minus[cols[c]] = static_cast<Exponent>(v.get_ui());
        for (unsigned long e = 0; e < v.get_ui(); ++e) cminus *= coeff;
      }
    }
    // x^{u+} φ-image equals cplus·t^α; x^{u-} equals cminus·t^α.
    gens.push_back(MultiPoly::monomial(src, Monomial(plus), cminus) - MultiPoly::monomial(src, Monomial(minus), cplus));
  }
  // Zero-image variables lie in the ideal; saturating by them would give (1).
  return saturate_by_variables(Ideal(src, std::move(gens)), cols, options);
}

PhyloVanishingResult vanishing_ideal(const PhyloModel& m, CoordSpace space, const PhyloVanishingOptions& options) {
  PhyloAlgorithm alg = options.algorithm;
  const bool tree = m.network().is_tree();
  if (space == CoordSpace::Fourier && !m.group_based())
    throw Error(ErrorCode::NotGroupBased, "Fourier coordinates need a group-based model");
  if (alg == PhyloAlgorithm::Default) {
    if (!tree) alg = PhyloAlgorithm::Multigraded;
    else alg = space == CoordSpace::Fourier ? PhyloAlgorithm::Toric : PhyloAlgorithm::Eliminate;
  }
  RingMap phi = m.parametrization(space);
  switch (alg) {
    case PhyloAlgorithm::Toric:
      if (space != CoordSpace::Fourier || !tree)
        throw Error(ErrorCode::UnsupportedAlgorithm, "the toric algorithm applies to group-based trees in Fourier space");
      return {toric_ideal(phi, options.groebner), alg, false, 0};
    case PhyloAlgorithm::Eliminate:
      return {kernel_of_map(phi, options.groebner), alg, false, 0};
    case PhyloAlgorithm::Multigraded: {
      auto res = components_of_kernel(options.max_degree, phi, {options.workers});
      return {Ideal(phi.source(), res.generators()), alg, true, options.max_degree};
    }
    case PhyloAlgorithm::Default: break;
  }
  throw Error(ErrorCode::UnsupportedAlgorithm, "unknown algorithm");
}

// ---- names ------------------------------------------------------------------

std::string to_string(PhyloKind k) {
  switch (k) {
    case PhyloKind::JukesCantor: return "JC";
    case PhyloKind::Kimura2: return "K2";
    case PhyloKind::Kimura3: return "K3";
    case PhyloKind::GeneralMarkov: return "GM";
    case PhyloKind::Custom: return "custom";
  }
  return "custom";
}

PhyloKind phylo_kind_from_string(const std::string& s) {
  if (s == "JC" || s == "jukes_cantor") return PhyloKind::JukesCantor;
  if (s == "K2" || s == "kimura2") return PhyloKind::Kimura2;
  if (s == "K3" || s == "kimura3") return PhyloKind::Kimura3;
  if (s == "GM" || s == "general_markov") return PhyloKind::GeneralMarkov;
  if (s == "custom") return PhyloKind::Custom;
  throw Error(ErrorCode::InvalidTemplate, "unknown model kind '" + s + "'");
}

std::string to_string(CoordSpace s) { return s == CoordSpace::Probability ? "probability" : "fourier"; }

CoordSpace coord_space_from_string(const std::string& s) {
  if (s == "probability") return CoordSpace::Probability;
  if (s == "fourier") return CoordSpace::Fourier;
  throw Error(ErrorCode::ParseError, "unknown coordinate space '" + s + "'");
}

std::string to_string(PhyloAlgorithm a) {
  switch (a) {
    case PhyloAlgorithm::Default: return "default";
    case PhyloAlgorithm::Eliminate: return "eliminate";
    case PhyloAlgorithm::Toric: return "toric";
    case PhyloAlgorithm::Multigraded: return "multigraded";
  }
  return "default";
}

PhyloAlgorithm phylo_algorithm_from_string(const std::string& s) {
  if (s == "default") return PhyloAlgorithm::Default;
  if (s == "eliminate") return PhyloAlgorithm::Eliminate;
  if (s == "toric") return PhyloAlgorithm::Toric;
  if (s == "multigraded") return PhyloAlgorithm::Multigraded;
  throw Error(ErrorCode::UnsupportedAlgorithm, "unknown algorithm '" + s + "'");
}

}  // namespace algstat
