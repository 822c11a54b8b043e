#include "zonoforge/matrix.hpp"

#include <utility>

#include "zonoforge/error.hpp"

namespace zonoforge {

namespace {

// dst[from..] -= f * src[from..]
void axpy_tail(std::span<Rat> dst, std::span<const Rat> src, const Rat& f, std::size_t from) {
  Rat t;
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (sgn(src[j]) == 0) continue;
    mpq_mul(t.get_mpq_t(), f.get_mpq_t(), src[j].get_mpq_t());
    mpq_sub(dst[j].get_mpq_t(), dst[j].get_mpq_t(), t.get_mpq_t());
  }
}

void scale_tail(std::span<Rat> row, const Rat& f, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (sgn(row[j]) != 0) row[j] *= f;
  }
}

}  // namespace

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "row length differs from column count");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

std::vector<Vec> Mat::to_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shapes");
  Mat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shapes");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void Mat::append_row(std::span<const Rat> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "appended row length");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::stacked(const Mat& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error(ErrorCode::kDimensionMismatch, "stacking shapes");
  Mat out = *this;
  out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
  out.rows_ += below.rows_;
  return out;
}

Rref rref(Mat m) {
  Rref out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead) {
      auto a = m.row(p);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Rat inv = 1 / m(lead, c);
    scale_tail(m.row(lead), inv, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rat f = m(r, c);
      axpy_tail(m.row(r), m.row(lead), f, c);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

Mat row_basis(const Mat& m) {
  Rref r = rref(m);
  Mat out(r.pivot_cols.size(), m.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = r.reduced(i, c);
  return out;
}

std::size_t rank(const Mat& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows() && !b.full(); ++r) b.insert(m.row_vec(r));
  return b.rank();
}

Mat nullspace(const Mat& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  Mat out(m.cols() - r.pivot_cols.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out(k, f) = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) out(k, r.pivot_cols[i]) = -r.reduced(i, f);
    ++k;
  }
  return out;
}

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_square expects a square system");
  }
  Mat aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Rref r = rref(std::move(aug));
  if (n > 0 && (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r.reduced(i, n);
  return x;
}

Rat determinant(const Mat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square");
  Mat m = a;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      auto x = m.row(p);
      auto y = m.row(c);
      std::swap_ranges(x.begin(), x.end(), y.begin());
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rat f = m(r, c) / m(c, c);
      axpy_tail(m.row(r), m.row(c), f, c);
    }
  }
  return det;
}

void EchelonBuilder::reduce(Vec& v) const {
  for (const auto& [p, row] : rows_) {
    if (sgn(v[p]) == 0) continue;
    const Rat f = v[p];
    axpy_tail(std::span<Rat>(v), std::span<const Rat>(row), f, p);
  }
}

bool EchelonBuilder::insert(Vec row) {
  if (row.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "echelon row length");
  if (full()) return false;
  reduce(row);
  std::size_t p = 0;
  while (p < cols_ && sgn(row[p]) == 0) ++p;
  if (p == cols_) return false;
  const Rat inv = 1 / row[p];
  scale_tail(std::span<Rat>(row), inv, p);
  rows_.emplace(p, std::move(row));
  return true;
}

Mat EchelonBuilder::finish() const {
  std::vector<std::pair<std::size_t, Vec>> rows(rows_.begin(), rows_.end());
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto& [p, pivot_row] = rows[i];
    for (std::size_t k = 0; k < i; ++k) {
      Vec& target = rows[k].second;
      if (sgn(target[p]) == 0) continue;
      const Rat f = target[p];
      axpy_tail(std::span<Rat>(target), std::span<const Rat>(pivot_row), f, p);
    }
  }
  Mat out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = rows[i].second[c];
  return out;
}

}  // namespace zonoforge
