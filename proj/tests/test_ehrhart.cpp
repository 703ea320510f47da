#include <castelnuovo/ehrhart.hpp>
#include <castelnuovo/errors.hpp>

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace castelnuovo;
using namespace castelnuovo::testing;

namespace {

HStarVector make_h(std::initializer_list<long> xs) {
  HStarVector h;
  h.coeffs = ints(xs);
  h.dim = h.coeffs.size() - 1;
  return h;
}

}  // namespace

TEST(HStar, StandardSimplices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Polytope p = build_polytope(standard_simplex(n));
    std::vector<Integer> expected(n + 1, Integer(0));
    expected[0] = 1;
    EXPECT_EQ(hstar(p).coeffs, expected) << n;
    EXPECT_EQ(degree(p), 0u);
    EXPECT_EQ(normalized_volume(p), 1);
  }
}

TEST(HStar, NonSpanningFourPolytope) {
  const Polytope p = build_polytope(example_3_5());
  EXPECT_EQ(hstar(p).coeffs, ints({1, 1, 1, 1, 0}));
  EXPECT_EQ(degree(p), 3u);
  EXPECT_EQ(normalized_volume(p), 4);
}

TEST(HStar, NonIdpFamily) {
  const Polytope p1 = build_polytope(family_1());
  EXPECT_EQ(hstar(p1).coeffs, ints({1, 1, 2, 0}));
  EXPECT_EQ(degree(p1), 2u);
  const Polytope p2 = build_polytope(family_2());
  EXPECT_EQ(hstar(p2).coeffs, ints({1, 1, 1, 2, 0, 0}));
  EXPECT_EQ(degree(p2), 3u);
}

TEST(HStar, SquareOfSideTwo) {
  // L(k) = (2k+1)^2: 1, 9, 25 -> h* = (1, 9 - 3, 25 - 3*9 + 3) = (1, 6, 1).
  const Polytope p = build_polytope(square_2x2());
  EXPECT_EQ(hstar(p).coeffs, ints({1, 6, 1}));
  EXPECT_EQ(degree(p), 2u);
  EXPECT_EQ(normalized_volume(p), 8);
}

TEST(HStar, ReflexiveAndEmptySimplices) {
  EXPECT_EQ(hstar(build_polytope(reflexive_simplex())).coeffs, ints({1, 1, 1, 1}));
  EXPECT_EQ(hstar(build_polytope(reeve_2())).coeffs, ints({1, 0, 1, 0}));
  EXPECT_EQ(hstar(build_polytope(unit_cube())).coeffs, ints({1, 4, 1, 0}));
}

TEST(HStar, FromProfileDoesNoGeometry) {
  EhrhartProfile profile{ints({1, 4, 9})};
  EXPECT_EQ(hstar_from_profile(2, profile).coeffs, ints({1, 1, 0}));
  EXPECT_THROW(hstar_from_profile(3, profile), std::invalid_argument);
}

TEST(HStar, Accessors) {
  const HStarVector h = make_h({1, 2, 0, 0});
  EXPECT_EQ(h.degree(), 1u);
  EXPECT_EQ(h.volume(), 3);
  EXPECT_EQ(h[1], 2);
}

TEST(Degree, InteriorDilateFormula) {
  EXPECT_EQ(degree_from_interior_dilates(build_polytope(standard_simplex(3))), 0u);
  EXPECT_EQ(degree_from_interior_dilates(build_polytope(example_3_5())), 3u);
  EXPECT_EQ(degree_from_interior_dilates(build_polytope(family_2())), 3u);
  EXPECT_EQ(degree_from_interior_dilates(build_polytope(reflexive_simplex())), 3u);
}

TEST(EhrhartEval, Examples) {
  for (const auto& h : {make_h({1, 0}), make_h({1, 6, 1}), make_h({1, 1, 1, 1, 0})}) EXPECT_EQ(ehrhart_eval(h, 0), 1);
  EXPECT_EQ(ehrhart_eval(make_h({1, 1, 0}), 3), 16);
  const Polytope p = build_polytope(example_3_5());
  EXPECT_EQ(ehrhart_eval(make_h({1, 1, 1, 1, 0}), 5), count_lattice_points(p, 5));
}

TEST(HStar, BudgetPropagates) {
  CountOptions tiny;
  tiny.max_box_cells = 10;
  EXPECT_THROW(hstar(build_polytope(unit_cube()), tiny), BudgetExceeded);
}

// ---------------------------------------------------------------------------

class EhrhartProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(EhrhartProperties, InvariantsAndRoundTrip) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(600 + n);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope p = build_polytope(random_points(rng, n, n <= 2 ? 4 : 2));
    const HStarVector h = hstar(p);
    ASSERT_EQ(h.coeffs.size(), n + 1);
    EXPECT_EQ(h[0], 1);
    for (const auto& c : h.coeffs) EXPECT_GE(c, 0);
    EXPECT_EQ(h[1], count_lattice_points(p, 1) - static_cast<long>(n + 1));
    EXPECT_EQ(h[n], count_lattice_points(p, 1, Membership::kInterior));
    EXPECT_EQ(h.volume(), geometric_normalized_volume(p));
    EXPECT_EQ(degree(p), degree_from_interior_dilates(p));

    // Round trip against counts the convolution never used.
    for (unsigned k = 1; k <= 2 * n; ++k) EXPECT_EQ(ehrhart_eval(h, k), count_lattice_points(p, k)) << k;

    // Forward substitution in test code gives the same coefficients.
    std::vector<Integer> counts{1};
    for (unsigned k = 1; k <= n; ++k) counts.push_back(count_lattice_points(p, k));
    EXPECT_EQ(h.coeffs, oracle_hstar(counts, n));
  }
}

TEST_P(EhrhartProperties, BruteForceCountsAgreeOnSmallDims) {
  const std::size_t n = GetParam();
  if (n > 3) GTEST_SKIP() << "brute-force oracle limited to dim <= 3";
  std::mt19937_64 rng(700 + n);
  for (int trial = 0; trial < 6; ++trial) {
    const Polytope p = build_polytope(random_points(rng, n, 2));
    std::vector<Integer> counts{1};
    for (long k = 1; k <= static_cast<long>(n); ++k)
      counts.emplace_back(static_cast<unsigned long>(oracle_lattice_points(p.vertices(), k).size()));
    EXPECT_EQ(hstar(p).coeffs, oracle_hstar(counts, n));
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, EhrhartProperties, ::testing::Values(1, 2, 3, 4));
