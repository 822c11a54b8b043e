#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zonoforge/rational.hpp"

namespace zonoforge {

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  // Every row must have exactly `cols` entries.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  std::vector<Vec> to_rows() const;

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  Vec apply(const Vec& v) const;

  void append_row(std::span<const Rat> r);
  // Rows of *this followed by rows of below; column counts must agree.
  Mat stacked(const Mat& below) const;

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};

// Canonical reduced row echelon form: leading ones, cleared above and below.
// Zero rows are kept at the bottom so the shape of m is preserved.
Rref rref(Mat m);

// RREF with the zero rows dropped; the canonical basis of the row space.
Mat row_basis(const Mat& m);

std::size_t rank(const Mat& m);

// Rows form the basis of {v : m v = 0} read off the free columns of rref(m).
Mat nullspace(const Mat& m);

// Unique solution of a x = b, or nullopt when a is singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

Rat determinant(const Mat& a);

// Incremental row-space accumulator. Rows are kept in (non-reduced) echelon
// form keyed by pivot column; finish() back-substitutes to canonical RREF.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : cols_(cols) {}

  // Returns true when the row enlarged the span.
  bool insert(Vec row);
  // Reduces v against the accumulated rows in place; v is zero afterwards iff
  // it lay in the span.
  void reduce(Vec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  Mat finish() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, Vec> rows_;
};

}  // namespace zonoforge
