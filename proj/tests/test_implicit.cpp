#include <gtest/gtest.h>

#include "algstat/error.hpp"
#include "algstat/implicit.hpp"
#include "algstat/persist.hpp"
#include "algstat/phylo.hpp"

using namespace algstat;

namespace {

RingMap twisted_cubic() {
  Ring src = ring_new({"x", "y", "z", "w"}), tgt = ring_new({"s", "t"});
  auto s = MultiPoly::variable(tgt, "s"), t = MultiPoly::variable(tgt, "t");
  return RingMap(src, tgt, {s.pow(3), s * s * t, s * t * t, t.pow(3)});
}

PhyloModel jc_star() {
  return PhyloModel(phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {4, 2}, {4, 3}})),
                    PhyloKind::JukesCantor);
}

PhyloModel jc_sunlet() {
  return PhyloModel(
      phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {5, 2}, {6, 3}, {5, 4}, {6, 4}, {5, 6}})),
      PhyloKind::JukesCantor);
}

}  // namespace

TEST(GradingGroup, TorsionAndFreeParts) {
  // Z^2 / <(2, 0)> = Z/2 x Z.
  GradingGroup g(2, IntMatrix(1, 2, {2, 0}));
  EXPECT_EQ(g.torsion(), (std::vector<BigInt>{2}));
  EXPECT_EQ(g.free_rank(), 1U);
  EXPECT_EQ(g.element({3, 5}), g.element({1, 5}));
  EXPECT_NE(g.element({1, 5}), g.element({0, 5}));
  EXPECT_EQ(g.add(g.element({1, 0}), g.element({1, 0})), g.zero());
  EXPECT_EQ(g.scale(g.element({1, 2}), 2), g.element({0, 4}));
  GradingGroup free(3, IntMatrix(0, 3));
  EXPECT_EQ(free.element_size(), 3U);
  EXPECT_EQ(free.element({1, 2, 3}), (GradingGroup::Element{1, 2, 3}));
}

TEST(MaximalGrading, ImagesAreHomogeneous) {
  // u -> a + b is not homogeneous under any nontrivial grading of a, b.
  Ring src = ring_new({"u", "v"}), tgt = ring_new({"a", "b"});
  auto a = MultiPoly::variable(tgt, "a"), b = MultiPoly::variable(tgt, "b");
  auto g = maximal_grading(RingMap(src, tgt, {a + b, a - b}));
  EXPECT_EQ(g.degrees[0], g.degrees[1]);

  auto tc = maximal_grading(twisted_cubic());
  EXPECT_EQ(tc.group.element_size(), 2U);
  EXPECT_NE(tc.degrees[0], tc.degrees[1]);
  // x w and y z share a degree.
  EXPECT_EQ(degree_of(tc, Monomial({1, 0, 0, 1})), degree_of(tc, Monomial({0, 1, 1, 0})));

  Ring r2 = ring_new({"p", "q"});
  RingMap z(r2, tgt, {a, MultiPoly(tgt)});
  auto gz = maximal_grading(z);
  EXPECT_EQ(gz.zero_images, (std::vector<std::size_t>{1}));
  EXPECT_THROW(maximal_grading(RingMap(src, tgt, {a, b}, a)), Error);
}

TEST(GradedComponent, LinearMapHasNoKernel) {
  Ring src = ring_new({"u", "v"}), tgt = ring_new({"a", "b"});
  auto a = MultiPoly::variable(tgt, "a"), b = MultiPoly::variable(tgt, "b");
  RingMap f(src, tgt, {a + b, a - b});
  auto g = maximal_grading(f);
  for (unsigned d = 1; d <= 3; ++d) {
    auto c = graded_component(f, g, g.group.scale(g.degrees[0], d), d, {});
    EXPECT_TRUE(c.basis.empty());
  }
  EXPECT_EQ(components_of_kernel(3, f).generator_count(), 0U);
}

TEST(ComponentsOfKernel, TwistedCubicMatchesElimination) {
  RingMap f = twisted_cubic();
  auto res = components_of_kernel(3, f);
  EXPECT_EQ(res.generator_count(1), 0U);
  EXPECT_EQ(res.generator_count(2), 3U);
  EXPECT_EQ(res.generator_count(3), 0U);
  Ideal I(f.source(), res.generators());
  EXPECT_TRUE(ideal_equal(I, kernel_of_map(f)));
  for (const auto& [deg, gens] : res.components)
    for (const auto& p : gens) {
      EXPECT_TRUE(f.apply(p).is_zero());
      for (const auto& t : p.terms()) EXPECT_EQ(degree_of(res.grading, t.monomial), deg);
    }
}

TEST(ComponentsOfKernel, JukesCantorStarIsOneCubic) {
  auto psi = jc_star().fourier_parametrization();
  auto res = components_of_kernel(3, psi);
  ASSERT_EQ(res.generator_count(), 1U);
  const Ring& q = psi.source();
  MultiPoly g = res.generators()[0];
  MultiPoly expected = parse_poly(q, "q[2,3,4]^2*q[1,1,1] - q[2,2,1]*q[2,1,2]*q[1,2,2]");
  EXPECT_TRUE(g == expected || g == -expected);
}

TEST(ComponentsOfKernel, ZeroImageGivesLinearGenerator) {
  Ring src = ring_new({"p", "q", "r"}), tgt = ring_new({"a"});
  auto a = MultiPoly::variable(tgt, "a");
  RingMap f(src, tgt, {a, MultiPoly(tgt), a});
  auto res = components_of_kernel(2, f);
  Ideal I(src, res.generators());
  EXPECT_TRUE(ideal_equal(I, Ideal(src, {parse_poly(src, "q"), parse_poly(src, "p - r")})));
}

TEST(ComponentsOfKernel, SunletAgreesWithElimination) {
  // Five Fourier coordinates on a three-leaf sunlet: the map is dominant.
  auto psi = jc_sunlet().fourier_parametrization();
  auto res = components_of_kernel(4, psi);
  for (const auto& g : res.generators()) EXPECT_TRUE(psi.apply(g).is_zero());
  Ideal K = kernel_of_map(psi);
  Ideal mine(psi.source(), res.generators());
  EXPECT_TRUE(K.is_zero());
  EXPECT_TRUE(ideal_equal(mine, K));
}

TEST(ComponentsOfKernel, DeterministicAcrossWorkerCounts) {
  auto psi = jc_sunlet().fourier_parametrization();
  auto serial = components_of_kernel(3, psi, {1});
  auto parallel = components_of_kernel(3, psi, {4});
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(persist::serialize(serial), persist::serialize(parallel));
}
