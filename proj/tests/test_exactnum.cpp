#include <gtest/gtest.h>

#include <random>

#include "algstat/error.hpp"
#include "algstat/exactnum.hpp"
#include "oracles.hpp"

using namespace algstat;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<long> d(lo, hi);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

BigInt gcd_of_entries(const IntMatrix& a) {
  BigInt g = 0;
  for (const auto& x : a.data()) g = gcd(g, x);
  return g;
}

}  // namespace

TEST(Rational, PrintsAndParsesDoubleSlash) {
  EXPECT_EQ(rat_to_string(BigRat(1, 4)), "1//4");
  EXPECT_EQ(rat_to_string(BigRat(-3)), "-3");
  EXPECT_EQ(rat_from_string("1//4"), BigRat(1, 4));
  EXPECT_EQ(rat_from_string("6/8"), BigRat(3, 4));
  EXPECT_EQ(rat_from_string("-7"), BigRat(-7));
  EXPECT_EQ(rat_from_string(rat_to_string(BigRat(-22, 7))), BigRat(-22, 7));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1//", "1//0", "2x"}) {
    try {
      rat_from_string(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(SmithNormalForm, KnownInvariantFactors) {
  IntMatrix a(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.diagonal(), (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(r.rank, 3U);
}

TEST(SmithNormalForm, DecompositionPropertiesOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_int_matrix(rng, r, c, -6, 6);
    auto res = smith_normal_form(a);
    EXPECT_EQ(res.U * a * res.V, res.S);
    EXPECT_EQ(abs(oracle::leibniz_det(res.U)), 1);
    EXPECT_EQ(abs(oracle::leibniz_det(res.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(res.S(i, j), 0);
    auto d = res.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i] != 0, i < res.rank);
    // d1 is the gcd of all entries.
    if (res.rank > 0) EXPECT_EQ(d[0], gcd_of_entries(a));
    if (r == c) EXPECT_EQ(abs(oracle::leibniz_det(a)), abs(oracle::leibniz_det(res.S)));
  }
}

TEST(LatticeKernel, BasisIsKernelAndSaturated) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 3, c = r + 1 + rng() % 3;
    IntMatrix a = random_int_matrix(rng, r, c, -4, 4);
    auto basis = lattice_kernel(a);
    RatMatrix q(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) q(i, j) = a(i, j);
    ASSERT_EQ(basis.size(), c - rank(q));
    for (const auto& v : basis) EXPECT_EQ(a.apply(v), std::vector<BigInt>(r, 0));
    if (basis.empty()) continue;
    // Saturated: the basis matrix has all invariant factors 1.
    IntMatrix b(basis.size(), c);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = basis[i][j];
    for (const auto& d : smith_normal_form(b).diagonal()) EXPECT_EQ(d, 1);
  }
}

TEST(LatticeKernel, SaturationPicksPrimitiveVector) {
  // 2x - 4y = 0 has kernel generated by (2, 1), not (4, 2).
  auto basis = lattice_kernel(IntMatrix(1, 2, {2, -4}));
  ASSERT_EQ(basis.size(), 1U);
  auto v = basis[0];
  if (v[0] < 0) v = {-v[0], -v[1]};
  EXPECT_EQ(v, (std::vector<BigInt>{2, 1}));
}

TEST(RationalLinearAlgebra, NullspaceAndRank) {
  RatMatrix m(2, 4, {1, 2, 3, 4, 2, 4, 6, 9});
  EXPECT_EQ(rank(m), 2U);
  auto ns = rational_nullspace(m);
  ASSERT_EQ(ns.size(), 2U);
  for (const auto& v : ns) EXPECT_EQ(m.apply(v), std::vector<BigRat>(2, 0));
  RatMatrix e = m;
  auto pivots = rref(e);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(e(0, 0), 1);
  EXPECT_EQ(e(1, 3), 1);
  EXPECT_EQ(e(0, 3), 0);
}

TEST(RationalLinearAlgebra, RandomNullspaceDimension) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 == 0 ? BigRat(0) : oracle::small_rational(rng);
    auto ns = rational_nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), c);
    for (const auto& v : ns) EXPECT_EQ(m.apply(v), std::vector<BigRat>(r, 0));
  }
}

TEST(Determinant, BareissMatchesLeibniz) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix a = random_int_matrix(rng, n, n, -5, 5);
    EXPECT_EQ(determinant(a), oracle::leibniz_det(a));
  }
  EXPECT_EQ(determinant(IntMatrix(2, 2, {1, 2, 2, 4})), 0);
}
