#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "zonoforge/error.hpp"
#include "zonoforge/matrix.hpp"

namespace zonoforge {
namespace {

Mat int_mat(const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) {
    Vec v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return Mat::from_rows(r, r.empty() ? 0 : r[0].size());
}

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-2/4")), "-1/2");
  EXPECT_EQ(to_string(parse_rat("+7")), "7");
  EXPECT_EQ(to_string(parse_rat("0/5")), "0");
  EXPECT_EQ(to_string(parse_rat("-10/5")), "-2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"1/0", "", "/3", "1/", "abc", "1.5", "1//2", "2 /3"}) {
    try {
      parse_rat(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Rational, PrimitiveIntegerVector) {
  const Vec v{Rat(0), Rat(-2, 3), Rat(4, 9)};
  const Vec p = primitive_integer(v);
  EXPECT_EQ(p, (Vec{0, 3, -2}));
}

TEST(Matrix, RrefOfSmallSystem) {
  const Rref r = rref(int_mat({{2, 4, 2}, {1, 2, 3}, {0, 0, 1}}));
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.reduced.row_vec(0), (Vec{1, 2, 0}));
  EXPECT_EQ(r.reduced.row_vec(1), (Vec{0, 0, 1}));
  EXPECT_EQ(rank(r.reduced), 2u);
}

TEST(Matrix, RrefIsCanonicalForTheRowSpace) {
  const Mat a = int_mat({{1, 2, 3}, {4, 5, 6}});
  const Mat b = int_mat({{5, 7, 9}, {-3, -3, -3}});
  EXPECT_EQ(row_basis(a), row_basis(b));
}

TEST(Matrix, NullspaceAnnihilates) {
  const Mat a = int_mat({{1, 1, 1, 1}, {0, 1, 2, 3}});
  const Mat k = nullspace(a);
  EXPECT_EQ(k.rows(), 2u);
  for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(is_zero(a.apply(k.row_vec(i))));
}

TEST(Matrix, SolveSquareAndSingular) {
  const auto x = solve_square(int_mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}), Vec{1, 1, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vec{1, 1, -1}));
  EXPECT_FALSE(solve_square(int_mat({{1, 2}, {2, 4}}), Vec{1, 2}));
  EXPECT_THROW(solve_square(int_mat({{1, 2, 3}}), Vec{1}), Error);
}

TEST(Matrix, DeterminantMatchesPermutationExpansion) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<Vec> rows(n, Vec(n));
    for (auto& r : rows)
      for (auto& x : r) {
        x = Rat(e(rng), 1 + trial % 3);
        x.canonicalize();
      }
    EXPECT_EQ(determinant(Mat::from_rows(rows, n)), testing::leibniz_det(rows));
  }
}

TEST(Matrix, RankMatchesMinorOracle) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> e(-1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + trial % 5;
    const std::size_t n = 1 + trial % 4;
    std::vector<Vec> rows(m, Vec(n));
    for (auto& r : rows)
      for (auto& x : r) x = e(rng);
    EXPECT_EQ(rank(Mat::from_rows(rows, n)), testing::minor_rank(rows, n));
  }
}

TEST(EchelonBuilder, TracksSpanIncrementally) {
  EchelonBuilder b(3);
  EXPECT_TRUE(b.insert(Vec{1, 1, 0}));
  EXPECT_TRUE(b.insert(Vec{0, 1, 1}));
  EXPECT_FALSE(b.insert(Vec{1, 2, 1}));
  Vec v{2, 3, 1};
  b.reduce(v);
  EXPECT_TRUE(is_zero(v));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_FALSE(b.full());
  EXPECT_EQ(b.finish(), row_basis(int_mat({{1, 1, 0}, {0, 1, 1}})));
}

}  // namespace
}  // namespace zonoforge
