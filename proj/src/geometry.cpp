#include "zonoforge/geometry.hpp"

#include <algorithm>
#include <optional>

#include "zonoforge/error.hpp"
#include "zonoforge/polynomial.hpp"

namespace zonoforge {

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(ColumnSet::of(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<ColumnSet> simplicity_violation(const Config& c, const Vec& lambda) {
  if (lambda.size() != c.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                                                   std::to_string(c.size()));
  }
  std::optional<ColumnSet> witness;
  for (std::size_t k = 1; k <= c.n + 1 && !witness; ++k) {
    for_each_subset(c.size(), k, [&](ColumnSet s) {
      std::vector<Vec> rows;
      std::vector<Vec> aug;
      for (auto j : s.indices()) {
        rows.push_back(c.columns[j]);
        Vec r = c.columns[j];
        r.push_back(lambda[j]);
        aug.push_back(std::move(r));
      }
      const std::size_t ra = rank(Mat::from_rows(rows, c.n));
      const bool consistent = ra == rank(Mat::from_rows(aug, c.n + 1));
      if (consistent && ra != k) {
        witness = s;
        return true;
      }
      return false;
    });
  }
  return witness;
}

Vec sample_offsets(std::size_t count, std::mt19937_64& rng) {
  Vec out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t bound = 1000ULL * count * (j + 1);
    out.emplace_back(static_cast<unsigned long>(rng() % bound + 1));
  }
  return out;
}

ArrangementInstance make_arrangement(const Config& c, const std::optional<Vec>& lambda, std::uint64_t seed) {
  ArrangementInstance a;
  a.config = c;
  if (lambda) {
    if (auto w = simplicity_violation(c, *lambda)) {
      throw Error(ErrorCode::kNotSimple, "hyperplanes " + w->str() + " violate simplicity");
    }
    a.lambda = *lambda;
  } else {
    a.seed = seed;
    std::mt19937_64 rng(seed);
    constexpr unsigned kMaxAttempts = 100;
    bool found = false;
    for (unsigned t = 0; t < kMaxAttempts && !found; ++t) {
      a.lambda = sample_offsets(c.size(), rng);
      a.attempts = t + 1;
      found = !simplicity_violation(c, a.lambda);
    }
    if (!found) {
      throw Error(ErrorCode::kSamplingExhausted,
                  "no simple offsets after " + std::to_string(kMaxAttempts) + " attempts (seed " +
                      std::to_string(seed) + ")");
    }
  }
  a.simple = true;
  for (auto b : bases(c)) {
    std::vector<Vec> rows;
    Vec rhs;
    for (auto j : b.indices()) {
      rows.push_back(c.columns[j]);
      rhs.push_back(a.lambda[j]);
    }
    auto v = solve_square(Mat::from_rows(rows, c.n), rhs);
    if (!v) throw Error(ErrorCode::kRankDeficient, "basis " + b.str() + " is singular");
    a.vertices.emplace(b, std::move(*v));
  }
  return a;
}

PointSet vertex_set(const ArrangementInstance& a, const std::vector<ColumnSet>& family) {
  PointSet out;
  for (auto b : family) {
    auto it = a.vertices.find(b);
    if (it == a.vertices.end()) throw Error(ErrorCode::kUnknownBasis, b.str() + " is not a basis");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_points(unsigned nvars, const PointSet& points) {
  for (const auto& p : points) {
    if (p.size() != nvars) throw Error(ErrorCode::kDimensionMismatch, "point of wrong length");
  }
  PointSet sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kDuplicatePoints, "point set has repeated points");
  }
}

// Appends the Taylor block of degree `top` to every row.
void append_taylor_block(unsigned nvars, const PointSet& points, unsigned top, std::vector<Vec>& rows,
                         std::vector<std::size_t>& offsets) {
  const auto& mons = monomials(nvars, top);
  offsets.push_back(offsets.back() + mons.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (const auto& a : mons) {
      Rat v = 1;
      for (unsigned i = 0; i < nvars; ++i)
        for (unsigned e = 0; e < a[i]; ++e) v *= points[r][i];
      rows[r].push_back(v / factorial(a));
    }
  }
}

// Least parts of the reduced Taylor rows, or nothing when they lack full rank.
std::optional<GradedSubspace> least_parts(unsigned nvars, std::size_t count, const std::vector<Vec>& rows,
                                          const std::vector<std::size_t>& offsets) {
  const Rref red = rref(Mat::from_rows(rows, offsets.back()));
  if (red.pivot_cols.size() < count) return std::nullopt;
  std::vector<HPoly> least;
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    const std::size_t pc = red.pivot_cols[r];
    const auto d = static_cast<unsigned>(std::upper_bound(offsets.begin(), offsets.end(), pc) - offsets.begin() - 1);
    Vec coeffs(offsets[d + 1] - offsets[d]);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = red.reduced(r, offsets[d] + k);
    least.push_back(HPoly::from_coeffs(nvars, d, coeffs));
  }
  return GradedSubspace::from_spanning(nvars, least);
}

}  // namespace

GradedSubspace least_space(unsigned nvars, const PointSet& points) {
  check_points(nvars, points);
  if (points.empty()) return GradedSubspace(nvars);
  // Taylor rows grow one degree block at a time. Once the truncated rows
  // have full rank, further blocks cannot move the pivots or change the
  // reduced entries in front of them.
  std::vector<std::size_t> offsets{0};
  std::vector<Vec> rows(points.size());
  for (unsigned top = 0;; ++top) {
    append_taylor_block(nvars, points, top, rows, offsets);
    if (auto s = least_parts(nvars, points.size(), rows, offsets)) return *std::move(s);
  }
}

GradedSubspace least_space_truncated(unsigned nvars, const PointSet& points, unsigned truncation) {
  check_points(nvars, points);
  if (points.empty()) return GradedSubspace(nvars);
  std::vector<std::size_t> offsets{0};
  std::vector<Vec> rows(points.size());
  for (unsigned top = 0; top <= truncation; ++top) append_taylor_block(nvars, points, top, rows, offsets);
  if (auto s = least_parts(nvars, points.size(), rows, offsets)) return *std::move(s);
  throw Error(ErrorCode::kNoStabilization,
              "Taylor rows truncated at degree " + std::to_string(truncation) + " do not have full rank");
}

RestrictionReport restriction_certificate(const PointSet& points, const GradedSubspace& s) {
  if (s.dim() != points.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "space has dimension " + std::to_string(s.dim()) + " but there are " +
                                                   std::to_string(points.size()) + " points");
  }
  const auto basis = s.basis();
  RestrictionReport rep;
  rep.evaluation = Mat(points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) rep.evaluation(i, j) = basis[j].evaluate(points[i]);
  rep.invertible = rank(rep.evaluation) == points.size();
  return rep;
}

bool is_unimodular(const Config& c) {
  for (const auto& col : c.columns)
    for (const auto& e : col)
      if (!is_integer(e)) return false;
  for (auto b : bases(c)) {
    Rat d = abs(determinant(Mat::from_rows(vectors_of(c, b), c.n)));
    if (d != 1) return false;
  }
  return true;
}

std::optional<Vec> zonotope_witness(const Config& c, const Vec& p) {
  const std::size_t n = c.n;
  const std::size_t N = c.size();
  if (p.size() != n) throw Error(ErrorCode::kDimensionMismatch, "point of wrong length");
  // Columns: w (N), s (N), artificials (n), rhs.
  const std::size_t nv = 2 * N + n;
  const std::size_t m = n + N;
  Mat t(m + 1, nv + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < n; ++i) {
    const int sign = p[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < N; ++j) t(i, j) = sign * c.columns[j][i];
    t(i, 2 * N + i) = 1;
    t(i, nv) = sign * p[i];
    basis[i] = 2 * N + i;
  }
  for (std::size_t k = 0; k < N; ++k) {
    t(n + k, k) = 1;
    t(n + k, N + k) = 1;
    t(n + k, nv) = 1;
    basis[n + k] = N + k;
  }
  // Objective row holds reduced costs of sum(artificials).
  for (std::size_t j = 0; j < nv; ++j) {
    if (j >= 2 * N) continue;
    for (std::size_t i = 0; i < n; ++i) t(m, j) -= t(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) t(m, nv) -= t(i, nv);

  while (true) {
    std::size_t enter = nv;
    for (std::size_t j = 0; j < nv; ++j) {
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == nv) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, nv) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    const Rat piv = t(leave, enter);
    for (std::size_t j = 0; j <= nv; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rat f = t(i, enter);
      for (std::size_t j = 0; j <= nv; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  if (t(m, nv) != 0) return std::nullopt;
  Vec w(N);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < N) w[basis[i]] = t(i, nv);
  for (std::size_t i = 0; i < n; ++i) {
    Rat acc;
    for (std::size_t j = 0; j < N; ++j) acc += c.columns[j][i] * w[j];
    if (acc != p[i]) throw Error(ErrorCode::kBundleMismatch, "simplex witness fails Xw = p");
  }
  for (const auto& x : w)
    if (x < 0 || x > 1) throw Error(ErrorCode::kBundleMismatch, "simplex witness leaves the unit cube");
  return w;
}

LatticeResult zonotope_lattice(const Config& c) {
  LatticeResult res;
  res.unimodular = is_unimodular(c);
  if (!res.unimodular) return res;
  std::vector<long> lo(c.n, 0), hi(c.n, 0);
  for (const auto& col : c.columns) {
    for (std::size_t i = 0; i < c.n; ++i) {
      const long v = col[i].get_num().get_si();
      (v < 0 ? lo[i] : hi[i]) += v;
    }
  }
  PointSet pts;
  std::vector<long> cur = lo;
  while (true) {
    Vec p(cur.begin(), cur.end());
    if (zonotope_witness(c, p)) pts.push_back(std::move(p));
    std::size_t i = 0;
    while (i < c.n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == c.n) break;
    ++cur[i];
  }
  std::sort(pts.begin(), pts.end());
  res.points = std::move(pts);
  return res;
}

}  // namespace zonoforge
