#include <gtest/gtest.h>

#include <random>

#include "algstat/error.hpp"
#include "algstat/phylo.hpp"
#include "oracles.hpp"

using namespace algstat;

namespace {

PhyloNetwork star3() { return phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {4, 2}, {4, 3}})); }
PhyloNetwork sunlet3() {
  return phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {5, 2}, {6, 3}, {5, 4}, {6, 4}, {5, 6}}));
}
PhyloNetwork quartet() {
  return phylo_validate(graph_from_edges(GraphKind::Directed, {{5, 1}, {5, 2}, {6, 3}, {6, 4}, {7, 5}, {7, 6}}));
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IoError;
}

std::vector<StateTuple> all_tuples(std::size_t n, int k) {
  std::vector<StateTuple> out;
  StateTuple t(n, 1);
  for (;;) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] == k) t[--i] = 1;
    if (i == 0) return out;
    ++t[i - 1];
  }
}

// Numeric instance of a model: one value per probability parameter.
struct Draw {
  std::vector<BigRat> params;   // probability parameter ring point
  std::vector<BigRat> fourier;  // Fourier parameter ring point (group-based only)
};

// Draws stochastic edge parameters (rows of each transition matrix sum to 1)
// and hybrid weights summing to 1 at each hybrid node.
Draw draw(std::mt19937_64& rng, const PhyloModel& m) {
  const auto& pr = m.parameter_ring(CoordSpace::Probability);
  Draw d{std::vector<BigRat>(pr.ring->size()), {}};
  if (m.group_based()) d.fourier.resize(m.parameter_ring(CoordSpace::Fourier).ring->size());
  for (std::size_t h = 0; h < pr.hybrid.size(); ++h) {
    BigRat rest = 1;
    for (std::size_t j = 0; j < pr.hybrid[h].size(); ++j) {
      BigRat l = j + 1 == pr.hybrid[h].size() ? rest : oracle::small_rational(rng, 1, 5, 9);
      rest -= l;
      d.params[pr.hybrid[h][j]] = l;
      if (m.group_based()) d.fourier[m.parameter_ring(CoordSpace::Fourier).hybrid[h][j]] = l;
    }
  }
  const auto& tmpl = m.transition_template();
  for (std::size_t e = 1; e <= m.network().indexed_edges.size(); ++e) {
    // Symbols of the first row, the last one completing the row sum.
    std::map<std::string, BigRat> val;
    BigRat used = 0;
    std::vector<std::string> fresh;
    for (const auto& s : tmpl[0])
      if (!val.count(s)) {
        val[s] = 0;
        fresh.push_back(s);
      }
    for (std::size_t k = 0; k + 1 < fresh.size(); ++k) val[fresh[k]] = oracle::small_rational(rng, 1, 9, 40);
    for (const auto& s : tmpl[0]) used += val[s];
    // the last symbol appears c times in row 0
    long c = std::count(tmpl[0].begin(), tmpl[0].end(), fresh.back());
    val[fresh.back()] = (1 - used) / c;
    for (const auto& [s, v] : val) d.params[pr.ring->require_index(indexed_name(s, {static_cast<int>(e)}))] = v;
    if (m.group_based()) {
      const auto& fr = m.parameter_ring(CoordSpace::Fourier);
      for (int g = 0; g < 4; ++g) {
        BigRat lambda = 0;
        for (int h = 0; h < 4; ++h) lambda += GroupStructure::character(g, h) * val[tmpl[0][static_cast<std::size_t>(h)]];
        d.fourier[fr.ring->require_index(
            indexed_name(m.group()->fourier_template[static_cast<std::size_t>(g)], {static_cast<int>(e)}))] = lambda;
      }
    }
  }
  return d;
}

// Direct sum over internal states of one displayed tree, from numbers.
BigRat tree_probability(const PhyloModel& m, const PhyloNetwork& tree, const Draw& d, const StateTuple& t) {
  const auto& pr = m.parameter_ring(CoordSpace::Probability);
  const auto& tmpl = m.transition_template();
  const std::size_t nv = tree.graph.n_vertices();
  std::vector<Vertex> internal;
  for (Vertex v = 1; v <= static_cast<Vertex>(nv); ++v)
    if (!tree.is_leaf(v) && (v == tree.root || !tree.graph.parents(v).empty())) internal.push_back(v);
  std::vector<int> state(nv + 1, 0);
  for (std::size_t i = 0; i < tree.leaves.size(); ++i) state[static_cast<std::size_t>(tree.leaves[i])] = t[i] - 1;
  BigRat total = 0;
  std::vector<int> a(internal.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < internal.size(); ++i) state[static_cast<std::size_t>(internal[i])] = a[i];
    BigRat p = m.root_distribution()[static_cast<std::size_t>(state[static_cast<std::size_t>(tree.root)])];
    for (const auto& e : tree.graph.edges()) {
      const std::string& s = tmpl[static_cast<std::size_t>(state[static_cast<std::size_t>(e.source)])]
                                 [static_cast<std::size_t>(state[static_cast<std::size_t>(e.target)])];
      p *= d.params[pr.ring->require_index(indexed_name(s, {static_cast<int>(m.network().edge_index(e))}))];
    }
    total += p;
    std::size_t i = 0;
    while (i < a.size() && a[i] == 3) a[i++] = 0;
    if (i == a.size()) break;
    ++a[i];
  }
  return total;
}

BigRat dft(const std::vector<StateTuple>& tuples, const std::vector<BigRat>& p, const StateTuple& g) {
  BigRat hat = 0;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    int chi = 1;
    for (std::size_t i = 0; i < g.size(); ++i) chi *= GroupStructure::character(g[i] - 1, tuples[k][i] - 1);
    hat += chi * p[k];
  }
  return hat;
}

}  // namespace

TEST(PhyloModel, JukesCantorEntries) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  EXPECT_EQ(m.parameter_ring(CoordSpace::Probability).ring->names(),
            (std::vector<std::string>{"a[1]", "a[2]", "a[3]", "b[1]", "b[2]", "b[3]"}));
  EXPECT_EQ(m.entry_transition_matrix(3, 3, {4, 1}).to_string(), "a[1]");
  EXPECT_EQ(m.entry_transition_matrix(1, 2, {4, 2}).to_string(), "b[2]");
  EXPECT_EQ(m.entry_fourier_parameter(3, {4, 1}).to_string(), "y[1]");
  EXPECT_EQ(m.entry_fourier_parameter(1, {4, 2}).to_string(), "x[2]");
  EXPECT_EQ(m.root_distribution(), std::vector<BigRat>(4, BigRat(1, 4)));
  EXPECT_EQ(m.coordinate_classes(CoordSpace::Probability).size(), 5U);
  EXPECT_EQ(m.coordinate_classes(CoordSpace::Fourier).size(), 5U);
}

TEST(PhyloModel, ProbabilityImageOfConstantPattern) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  const auto& r = m.parameter_ring(CoordSpace::Probability).ring;
  const auto& mr = m.model_ring(CoordSpace::Probability);
  auto img = m.probability_parametrization().images()[mr.class_of({1, 1, 1})];
  EXPECT_EQ(img, parse_poly(r, "1//4*a[1]*a[2]*a[3] + 3//4*b[1]*b[2]*b[3]"));
}

TEST(PhyloModel, FourierTemplatesAreDetected) {
  EXPECT_EQ(PhyloModel(star3(), PhyloKind::JukesCantor).group()->fourier_template,
            (std::vector<std::string>{"x", "y", "y", "y"}));
  EXPECT_EQ(PhyloModel(star3(), PhyloKind::Kimura2).group()->fourier_template,
            (std::vector<std::string>{"x", "y", "y", "z"}));
  EXPECT_EQ(PhyloModel(star3(), PhyloKind::Kimura3).group()->fourier_template,
            (std::vector<std::string>{"x", "y", "z", "t"}));
  // A custom template of the form f(i xor j) is group-based too.
  PhyloModel custom(star3(), {{"u", "v", "u", "v"}, {"v", "u", "v", "u"}, {"u", "v", "u", "v"}, {"v", "u", "v", "u"}});
  EXPECT_TRUE(custom.group_based());
  PhyloModel gm(star3(), PhyloKind::GeneralMarkov);
  EXPECT_FALSE(gm.group_based());
  EXPECT_TRUE(gm.symbolic_root());
  EXPECT_EQ(gm.parameter_ring(CoordSpace::Probability).ring->size(), 16U * 3U + 4U);
}

TEST(PhyloModel, Errors) {
  PhyloModel gm(star3(), PhyloKind::GeneralMarkov);
  EXPECT_EQ(code_of([&] { gm.fourier_parametrization(); }), ErrorCode::NotGroupBased);
  EXPECT_EQ(code_of([&] { coordinate_change(gm); }), ErrorCode::NotGroupBased);
  EXPECT_EQ(code_of([] { PhyloModel(star3(), {{"a", "b"}, {"b"}}); }), ErrorCode::InvalidTemplate);
  PhyloModel net(sunlet3(), PhyloKind::JukesCantor);
  EXPECT_EQ(code_of([&] { net.entry_hybrid_parameter({4, 1}); }), ErrorCode::NotHybridEdge);
  EXPECT_EQ(code_of([&] { net.entry_transition_matrix(1, 1, {1, 4}); }), ErrorCode::NoSuchEdge);
  EXPECT_EQ(code_of([&] { vanishing_ideal(net, CoordSpace::Fourier, {PhyloAlgorithm::Toric}); }),
            ErrorCode::UnsupportedAlgorithm);
}

TEST(PhyloModel, SunletParametrization) {
  PhyloModel m(sunlet3(), PhyloKind::JukesCantor);
  const auto& fr = m.parameter_ring(CoordSpace::Fourier).ring;
  EXPECT_EQ(fr->size(), 14U);
  EXPECT_EQ(fr->name(0), "l[1,1]");
  EXPECT_EQ(fr->name(1), "l[1,2]");
  EXPECT_EQ(m.entry_hybrid_parameter({5, 4}).to_string(), "l[1,1]");
  EXPECT_EQ(m.entry_hybrid_parameter({6, 4}).to_string(), "l[1,2]");
  const auto& mr = m.model_ring(CoordSpace::Fourier);
  auto img = m.fourier_parametrization().images()[mr.class_of({1, 1, 1})];
  EXPECT_EQ(img, parse_poly(fr, "l[1,1]*x[1]*x[2]*x[3]*x[4]*x[5] + l[1,2]*x[1]*x[2]*x[3]*x[5]*x[6]"));
}

TEST(PhyloModel, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(61);
  for (const auto& net : {star3(), sunlet3(), quartet()})
    for (auto kind : {PhyloKind::JukesCantor, PhyloKind::Kimura2, PhyloKind::Kimura3}) {
      PhyloModel m(net, kind);
      auto tuples = all_tuples(net.leaves.size(), 4);
      std::vector<MultiPoly> ps;
      for (const auto& t : tuples) ps.push_back(m.probability_at(t));
      for (int trial = 0; trial < 3; ++trial) {
        Draw d = draw(rng, m);
        BigRat total = 0;
        for (const auto& p : ps) total += p.evaluate(d.params);
        EXPECT_EQ(total, 1);
      }
    }
}

// The network distribution is the λ-mixture of its displayed trees.
TEST(PhyloModel, NetworkMatchesDisplayedTreeMixture) {
  std::mt19937_64 rng(67);
  PhyloModel m(sunlet3(), PhyloKind::Kimura2);
  auto trees = displayed_trees(m.network());
  const auto& pr = m.parameter_ring(CoordSpace::Probability);
  for (int trial = 0; trial < 3; ++trial) {
    Draw d = draw(rng, m);
    for (const auto& t : all_tuples(3, 4)) {
      BigRat expected = 0;
      for (const auto& tr : trees) {
        BigRat w = 1;
        for (std::size_t h = 0; h < tr.choice.size(); ++h) w *= d.params[pr.hybrid[h][tr.choice[h]]];
        expected += w * tree_probability(m, tr.tree, d, t);
      }
      ASSERT_EQ(m.probability_at(t).evaluate(d.params), expected);
    }
  }
}

TEST(PhyloModel, ClassesHaveEqualImages) {
  for (auto kind : {PhyloKind::JukesCantor, PhyloKind::Kimura2, PhyloKind::Kimura3}) {
    PhyloModel m(quartet(), kind);
    // probability_parametrization checks every member; reaching here is the test.
    auto f = m.probability_parametrization();
    EXPECT_EQ(f.images().size(), m.coordinate_classes(CoordSpace::Probability).size());
    EXPECT_EQ(m.coordinate_classes(CoordSpace::Probability).size(), m.coordinate_classes(CoordSpace::Fourier).size());
    std::size_t members = 0;
    for (const auto& c : m.coordinate_classes(CoordSpace::Probability)) members += c.members.size();
    EXPECT_EQ(members, 256U);
  }
}

TEST(PhyloModel, FourierTransformOfProbabilitiesKimura2) {
  std::mt19937_64 rng(71);
  PhyloModel m(sunlet3(), PhyloKind::Kimura2);
  auto tuples = all_tuples(3, 4);
  std::vector<MultiPoly> ps;
  for (const auto& t : tuples) ps.push_back(m.probability_at(t));
  auto psi = m.fourier_parametrization();
  const auto& qr = m.model_ring(CoordSpace::Fourier);
  for (int trial = 0; trial < 5; ++trial) {
    Draw d = draw(rng, m);
    std::vector<BigRat> pv;
    for (const auto& p : ps) pv.push_back(p.evaluate(d.params));
    for (std::size_t c = 0; c < qr.classes.size(); ++c)
      for (const auto& g : qr.classes[c].members) ASSERT_EQ(dft(tuples, pv, g), psi.images()[c].evaluate(d.fourier));
    // Tuples outside every Fourier class have vanishing transform.
    for (const auto& g : tuples)
      if (!qr.find_class(g)) ASSERT_EQ(dft(tuples, pv, g), 0);
  }
}

TEST(CoordinateChange, PrintedRowsAndInverse) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  RingMap cc = coordinate_change(m), inv = inverse_coordinate_change(m);
  const auto& qr = m.model_ring(CoordSpace::Fourier);
  const Ring& p = m.model_ring(CoordSpace::Probability).ring;
  EXPECT_EQ(cc.images()[qr.class_of({2, 3, 4})],
            parse_poly(p, "1//3*p[1,2,3] - 1//3*p[1,2,2] - 1//3*p[1,2,1] - 1//3*p[1,1,2] + p[1,1,1]"));
  EXPECT_EQ(cc.images()[qr.class_of({2, 2, 1})],
            parse_poly(p, "-1//3*p[1,2,3] - 1//3*p[1,2,2] - 1//3*p[1,2,1] + p[1,1,2] + p[1,1,1]"));
}

TEST(CoordinateChange, CompositionIsIdentity) {
  for (const auto& net : {star3(), sunlet3()})
    for (auto kind : {PhyloKind::JukesCantor, PhyloKind::Kimura2, PhyloKind::Kimura3}) {
      PhyloModel m(net, kind);
      RingMap cc = coordinate_change(m), inv = inverse_coordinate_change(m);
      for (std::size_t i = 0; i < cc.images().size(); ++i) {
        EXPECT_EQ(inv.apply(cc.images()[i]), MultiPoly::variable(cc.source(), i));
        EXPECT_EQ(cc.apply(inv.images()[i]), MultiPoly::variable(inv.source(), i));
      }
    }
}

// coordinate_change reads p_c as the total mass of class c: substituting
// |c|·φ(p_c) reproduces the Fourier parametrization.
TEST(CoordinateChange, AggregatedMassMatchesFourierParametrization) {
  std::mt19937_64 rng(73);
  for (auto kind : {PhyloKind::JukesCantor, PhyloKind::Kimura3}) {
    PhyloModel m(sunlet3(), kind);
    RingMap cc = coordinate_change(m);
    auto phi = m.probability_parametrization();
    auto psi = m.fourier_parametrization();
    const auto& pc = m.coordinate_classes(CoordSpace::Probability);
    for (int trial = 0; trial < 3; ++trial) {
      Draw d = draw(rng, m);
      std::vector<BigRat> mass(pc.size());
      for (std::size_t c = 0; c < pc.size(); ++c)
        mass[c] = BigRat(static_cast<long>(pc[c].members.size())) * phi.images()[c].evaluate(d.params);
      for (std::size_t i = 0; i < cc.images().size(); ++i)
        EXPECT_EQ(cc.images()[i].evaluate(mass), psi.images()[i].evaluate(d.fourier));
    }
  }
}

TEST(PhyloVanishing, ToricMatchesEliminationOnStar) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  Ideal toric = vanishing_ideal(m, CoordSpace::Fourier).ideal;
  Ideal elim = vanishing_ideal(m, CoordSpace::Fourier, {PhyloAlgorithm::Eliminate}).ideal;
  EXPECT_TRUE(ideal_equal(toric, elim));
  const Ring& q = m.model_ring(CoordSpace::Fourier).ring;
  EXPECT_TRUE(ideal_equal(toric, Ideal(q, {parse_poly(q, "q[2,3,4]^2*q[1,1,1] - q[2,2,1]*q[2,1,2]*q[1,2,2]")})));
}

TEST(PhyloVanishing, NetworkDefaultIsDegreeBounded) {
  PhyloModel m(sunlet3(), PhyloKind::JukesCantor);
  PhyloVanishingOptions o;
  o.max_degree = 2;
  auto res = vanishing_ideal(m, CoordSpace::Fourier, o);
  EXPECT_EQ(res.algorithm, PhyloAlgorithm::Multigraded);
  EXPECT_TRUE(res.degree_bounded);
  auto psi = m.fourier_parametrization();
  for (const auto& g : res.ideal.gens()) EXPECT_TRUE(psi.apply(g).is_zero());
}

TEST(PhyloVanishing, ToricIdealOfMonomialMap) {
  Ring src = ring_new({"a", "b", "c", "d"}), tgt = ring_new({"s", "t", "u"});
  auto v = [&](const char* n) { return MultiPoly::variable(tgt, n); };
  RingMap f(src, tgt, {v("s") * v("s") * v("u"), v("s") * v("t") * v("u"), v("t") * v("t") * v("u"), MultiPoly(tgt)});
  Ideal I = toric_ideal(f);
  EXPECT_TRUE(ideal_equal(I, Ideal(src, {parse_poly(src, "a*c - b^2"), parse_poly(src, "d")})));
}

TEST(PhyloNames, RoundTrip) {
  for (auto k : {PhyloKind::JukesCantor, PhyloKind::Kimura2, PhyloKind::Kimura3, PhyloKind::GeneralMarkov})
    EXPECT_EQ(phylo_kind_from_string(to_string(k)), k);
  EXPECT_EQ(coord_space_from_string("fourier"), CoordSpace::Fourier);
  EXPECT_EQ(phylo_algorithm_from_string("multigraded"), PhyloAlgorithm::Multigraded);
  EXPECT_THROW(phylo_kind_from_string("HKY"), Error);
}
