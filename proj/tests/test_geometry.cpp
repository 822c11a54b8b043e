#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "zonoforge/error.hpp"
#include "zonoforge/geometry.hpp"
#include "zonoforge/zonotopal.hpp"

namespace zonoforge {
namespace {

using testing::cube_diagonal;
using testing::from_int_rows;

Vec ints(std::initializer_list<long> v) {
  Vec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Points of the unimodular zonotope found by sweeping the one-dimensional
// solution line w0 + t k of Xw = p for a corank-one X.
PointSet corank_one_lattice(const Config& c, const Vec& kernel_dir) {
  PointSet out;
  std::vector<long> lo(c.n, 0), hi(c.n, 0);
  for (const auto& col : c.columns)
    for (std::size_t i = 0; i < c.n; ++i) (col[i] < 0 ? lo[i] : hi[i]) += col[i].get_num().get_si();
  // Columns 0..n-1 form a basis for the configurations used here.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < c.n; ++i) {
    Vec r;
    for (std::size_t j = 0; j < c.n; ++j) r.push_back(c.columns[j][i]);
    rows.push_back(r);
  }
  const Mat basis = Mat::from_rows(rows, c.n);
  std::vector<long> p(lo);
  while (true) {
    Vec target(p.begin(), p.end());
    Vec w0 = *solve_square(basis, target);
    w0.resize(c.size());
    // t range: 0 <= w0_j + t k_j <= 1 for every j.
    Rat tmin = -1000, tmax = 1000;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Rat& k = kernel_dir[j];
      if (k == 0) {
        if (w0[j] < 0 || w0[j] > 1) tmin = 1, tmax = 0;
        continue;
      }
      Rat a = (0 - w0[j]) / k, b = (1 - w0[j]) / k;
      if (a > b) std::swap(a, b);
      tmin = std::max(tmin, a);
      tmax = std::min(tmax, b);
    }
    if (tmin <= tmax) out.push_back(target);
    std::size_t i = 0;
    while (i < c.n && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == c.n) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Arrangement, CubeDiagonalWithUnitOffsets) {
  const Config c = cube_diagonal();
  const auto a = make_arrangement(c, ints({1, 1, 1, 1}));
  EXPECT_TRUE(a.simple);
  ASSERT_EQ(a.vertices.size(), 4u);
  EXPECT_EQ(a.vertices.at(ColumnSet::of({0, 1, 2})), ints({1, 1, 1}));
  for (const auto& [b, v] : a.vertices) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const bool on = dot(c.columns[j], v) == a.lambda[j];
      EXPECT_EQ(on, b.contains(j));
    }
  }
  std::set<Vec> distinct;
  for (const auto& [b, v] : a.vertices) distinct.insert(v);
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Arrangement, CentralOffsetsAreNotSimple) {
  try {
    make_arrangement(cube_diagonal(), ints({0, 0, 0, 0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSimple);
  }
}

TEST(Arrangement, LineWithTwoPoints) {
  const auto a = make_arrangement(from_int_rows({{1, 1}}), ints({0, 1}));
  EXPECT_EQ(a.vertices.size(), 2u);
  EXPECT_THROW(make_arrangement(from_int_rows({{1, 1}}), ints({1, 1})), Error);
}

TEST(Arrangement, SamplingIsDeterministicAndSimple) {
  const Config c = cube_diagonal();
  const auto a1 = make_arrangement(c, std::nullopt, 42);
  const auto a2 = make_arrangement(c, std::nullopt, 42);
  const auto a3 = make_arrangement(c, std::nullopt, 43);
  EXPECT_EQ(a1.lambda, a2.lambda);
  EXPECT_NE(a1.lambda, a3.lambda);
  EXPECT_FALSE(simplicity_violation(c, a1.lambda));
  for (std::size_t j = 0; j < a1.lambda.size(); ++j) {
    EXPECT_GE(a1.lambda[j], 1);
    EXPECT_LE(a1.lambda[j], 1000 * 4 * (j + 1));
  }
  EXPECT_EQ(a1.seed, 42u);
}

TEST(Arrangement, VertexCountEqualsBasisCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Config c = testing::random_config(rng, 2 + trial % 2, 4 + trial % 2);
    const auto a = make_arrangement(c, std::nullopt, trial);
    EXPECT_EQ(vertex_set(a, bases(c)).size(), testing::oracle_bases(c).size());
  }
}

TEST(VertexSet, FamiliesAndErrors) {
  const Config c = cube_diagonal();
  const auto a = make_arrangement(c, ints({1, 1, 1, 1}));
  EXPECT_EQ(vertex_set(a, bases(c)).size(), 4u);
  EXPECT_TRUE(vertex_set(a, {}).empty());
  try {
    vertex_set(a, {ColumnSet::of({0, 1})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownBasis);
  }
  const auto f = semiexternal_close(c, {ColumnSet::of({0})});
  const auto ax = make_arrangement(extended_config(c), std::nullopt, 5);
  std::vector<ColumnSet> ex;
  for (auto s : f.members) ex.push_back(extend_basis(c, s));
  EXPECT_EQ(vertex_set(ax, ex).size(), 8u);
}

TEST(LeastSpace, SmallCases) {
  EXPECT_EQ(least_space(2, {ints({0, 0})}).hilbert().values, (std::vector<std::size_t>{1}));
  const auto line = least_space(1, {ints({0}), ints({1}), ints({2})});
  EXPECT_EQ(line, GradedSubspace::from_spanning(1, {HPoly::constant(1, 1), HPoly::monomial({1}),
                                                     HPoly::monomial({2})}));
  EXPECT_EQ(least_space(3, {}).dim(), 0u);
  try {
    least_space(1, {ints({1}), ints({1})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoints);
  }
}

TEST(LeastSpace, CollinearPointsGiveUnivariatePowers) {
  // Points on the line through (1,2): the least space is spanned by powers of t1 + 2 t2.
  const auto s = least_space(2, {ints({0, 0}), ints({1, 2}), ints({-2, -4}), ints({3, 6})});
  const HPoly f = HPoly::linear_form(ints({1, 2}));
  EXPECT_EQ(s, GradedSubspace::from_spanning(2, {HPoly::constant(2, 1), f, power(f, 2), power(f, 3)}));
}

TEST(LeastSpace, VerticesOfCubeDiagonalGiveCentralDSpace) {
  const Config c = cube_diagonal();
  const auto a = make_arrangement(c, ints({1, 1, 1, 1}));
  const auto v = least_space(3, vertex_set(a, bases(c)));
  EXPECT_EQ(v.hilbert().values, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(v, d_space(c, central(c)));
}

TEST(Restriction, Certificates) {
  const auto one = restriction_certificate({ints({0})}, least_space(1, {ints({0})}));
  EXPECT_TRUE(one.invertible);
  const PointSet pts{ints({0}), ints({1}), ints({2})};
  const auto rep = restriction_certificate(pts, least_space(1, pts));
  EXPECT_TRUE(rep.invertible);
  EXPECT_NE(determinant(rep.evaluation), 0);
  const auto small = GradedSubspace::from_spanning(1, {HPoly::constant(1, 1)});
  try {
    restriction_certificate(pts, small);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Zonotope, CubeDiagonalLatticePoints) {
  const Config c = cube_diagonal();
  const auto lat = zonotope_lattice(c);
  ASSERT_TRUE(lat.unimodular);
  ASSERT_TRUE(lat.points);
  EXPECT_EQ(lat.points->size(), 15u);
  EXPECT_EQ(*lat.points, corank_one_lattice(c, ints({1, 1, 1, -1})));
  // Unit cube vertices and the cube shifted by (1,1,1).
  std::set<Vec> expected;
  for (int m = 0; m < 8; ++m) {
    const Vec v = ints({m & 1, m >> 1 & 1, m >> 2 & 1});
    expected.insert(v);
    expected.insert(ints({(m & 1) + 1, (m >> 1 & 1) + 1, (m >> 2 & 1) + 1}));
  }
  EXPECT_EQ(std::set<Vec>(lat.points->begin(), lat.points->end()), expected);
}

TEST(Zonotope, TriangleMatchesLineSweep) {
  const Config c = testing::triangle();
  const auto lat = zonotope_lattice(c);
  ASSERT_TRUE(lat.unimodular);
  EXPECT_EQ(*lat.points, corank_one_lattice(c, ints({1, 1, -1})));
  EXPECT_EQ(lat.points->size(), 7u);
}

TEST(Zonotope, SquareAndNonUnimodular) {
  const auto sq = zonotope_lattice(from_int_rows({{1, 0}, {0, 1}}));
  ASSERT_TRUE(sq.points);
  EXPECT_EQ(sq.points->size(), 4u);
  const auto bad = zonotope_lattice(from_int_rows({{2, 1}}));
  EXPECT_FALSE(bad.unimodular);
  EXPECT_FALSE(bad.points);
  EXPECT_FALSE(is_unimodular(testing::load_config("rational.json").config));
}

TEST(Zonotope, WitnessesSatisfyTheSystem) {
  const Config c = cube_diagonal();
  const auto w = zonotope_witness(c, ints({2, 2, 1}));
  ASSERT_TRUE(w);
  Vec image(3);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 3; ++i) image[i] += c.columns[j][i] * (*w)[j];
  EXPECT_EQ(image, ints({2, 2, 1}));
  EXPECT_FALSE(zonotope_witness(c, ints({2, 0, 0})));
  EXPECT_FALSE(zonotope_witness(c, ints({-1, 0, 0})));
}

TEST(Zonotope, LatticeLeastSpaceIsExternalSpace) {
  const Config c = cube_diagonal();
  EXPECT_EQ(least_space(3, *zonotope_lattice(c).points), external(c).p_space);
}

}  // namespace
}  // namespace zonoforge
