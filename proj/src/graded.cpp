#include "zonoforge/graded.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "zonoforge/error.hpp"

namespace zonoforge {

namespace {

// up[i][k]: index of t_i * (k-th monomial of degree d) in degree d + 1.
const std::vector<std::vector<std::size_t>>& raise_table(std::size_t nvars, unsigned d) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<std::vector<std::vector<std::size_t>>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, d}];
  if (!slot) {
    const auto& lo = monomial_basis(nvars, d);
    const auto& hi = monomial_basis(nvars, d + 1);
    slot = std::make_unique<std::vector<std::vector<std::size_t>>>(nvars, std::vector<std::size_t>(lo.size()));
    for (std::size_t i = 0; i < nvars; ++i) {
      for (std::size_t k = 0; k < lo.size(); ++k) {
        MultiIndex a = lo[k];
        ++a[i];
        (*slot)[i][k] = hi.index_of(a);
      }
    }
  }
  return *slot;
}

Mat empty_component(std::size_t nvars, unsigned d) { return Mat(0, monomial_count(nvars, d)); }

std::size_t sum_rank(const Mat& a, const Mat& b) {
  EchelonBuilder e(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) e.insert(a.row_vec(r));
  for (std::size_t r = 0; r < b.rows() && !e.full(); ++r) e.insert(b.row_vec(r));
  return e.rank();
}

}  // namespace

HilbertFn HilbertFn::of(std::vector<std::size_t> values) {
  while (!values.empty() && values.back() == 0) values.pop_back();
  return HilbertFn{std::move(values)};
}

std::size_t HilbertFn::total() const {
  std::size_t s = 0;
  for (auto v : values) s += v;
  return s;
}

GradedSubspace GradedSubspace::from_spanning(std::size_t nvars, const std::vector<HPoly>& polys) {
  std::map<unsigned, EchelonBuilder> builders;
  for (const auto& p : polys) {
    if (p.nvars() != nvars) throw Error(ErrorCode::kDimensionMismatch, "polynomial in wrong ring");
    if (p.is_zero()) continue;
    auto it = builders.try_emplace(p.degree(), monomial_count(nvars, p.degree())).first;
    it->second.insert(p.coeffs());
  }
  GradedSubspace out(nvars);
  for (auto& [d, b] : builders)
    if (b.rank() > 0) out.comps_.emplace(d, b.finish());
  return out;
}

GradedSubspace GradedSubspace::from_components(std::size_t nvars, const std::map<unsigned, Mat>& comps) {
  GradedSubspace out(nvars);
  for (const auto& [d, m] : comps) {
    if (m.rows() == 0) continue;
    if (m.cols() != monomial_count(nvars, d)) {
      throw Error(ErrorCode::kDimensionMismatch, "component width differs from monomial count");
    }
    Mat b = row_basis(m);
    if (b.rows() > 0) out.comps_.emplace(d, std::move(b));
  }
  return out;
}

std::size_t GradedSubspace::dim() const {
  std::size_t s = 0;
  for (const auto& [d, m] : comps_) s += m.rows();
  return s;
}

std::size_t GradedSubspace::dim_at(unsigned d) const {
  auto it = comps_.find(d);
  return it == comps_.end() ? 0 : it->second.rows();
}

std::optional<unsigned> GradedSubspace::top_degree() const {
  if (comps_.empty()) return std::nullopt;
  return comps_.rbegin()->first;
}

HilbertFn GradedSubspace::hilbert() const {
  std::vector<std::size_t> v;
  if (auto top = top_degree()) {
    v.resize(*top + 1, 0);
    for (const auto& [d, m] : comps_) v[d] = m.rows();
  }
  return HilbertFn::of(std::move(v));
}

Mat GradedSubspace::component(unsigned d) const {
  auto it = comps_.find(d);
  return it == comps_.end() ? empty_component(nvars_, d) : it->second;
}

std::vector<HPoly> GradedSubspace::basis_at(unsigned d) const {
  std::vector<HPoly> out;
  auto it = comps_.find(d);
  if (it == comps_.end()) return out;
  for (std::size_t r = 0; r < it->second.rows(); ++r)
    out.push_back(HPoly::from_coeffs(nvars_, d, it->second.row_vec(r)));
  return out;
}

std::vector<HPoly> GradedSubspace::basis() const {
  std::vector<HPoly> out;
  for (const auto& [d, m] : comps_) {
    auto b = basis_at(d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

bool GradedSubspace::contains(const HPoly& p) const {
  if (p.is_zero()) return true;
  auto it = comps_.find(p.degree());
  if (it == comps_.end()) return false;
  EchelonBuilder e(it->second.cols());
  for (std::size_t r = 0; r < it->second.rows(); ++r) e.insert(it->second.row_vec(r));
  Vec v = p.coeffs();
  e.reduce(v);
  return is_zero(v);
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::kDimensionMismatch, "intersecting different rings");
  std::map<unsigned, Mat> comps;
  for (const auto& [d, ma] : a.components()) {
    const Mat mb = b.component(d);
    if (mb.rows() == 0) continue;
    // A cap B = (A^perp + B^perp)^perp in coefficient space.
    const Mat perp = nullspace(ma).stacked(nullspace(mb));
    const Mat meet = perp.rows() == 0 ? Mat::identity(ma.cols()) : nullspace(perp);
    comps.emplace(d, meet);
  }
  return GradedSubspace::from_components(a.nvars(), comps);
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::kDimensionMismatch, "adding different rings");
  std::map<unsigned, Mat> comps;
  for (const auto& [d, m] : a.components()) comps[d] = m;
  for (const auto& [d, m] : b.components()) {
    auto it = comps.find(d);
    if (it == comps.end()) {
      comps.emplace(d, m);
    } else {
      it->second = it->second.stacked(m);
    }
  }
  return GradedSubspace::from_components(a.nvars(), comps);
}

bool is_subspace(const GradedSubspace& a, const GradedSubspace& b) {
  for (const auto& [d, m] : a.components()) {
    if (sum_rank(b.component(d), m) != b.dim_at(d)) return false;
  }
  return true;
}

IdealTower::IdealTower(IdealGens gens) : gens_(std::move(gens)) {
  for (const auto& g : gens_.gens) {
    if (g.is_zero()) throw Error(ErrorCode::kDimensionMismatch, "zero generator");
    if (g.nvars() != gens_.nvars) throw Error(ErrorCode::kDimensionMismatch, "generator in wrong ring");
  }
}

bool IdealTower::full_at(unsigned d) { return component(d).rows() == monomial_count(gens_.nvars, d); }

const Mat& IdealTower::component(unsigned d) {
  const std::size_t n = gens_.nvars;
  while (comps_.size() <= d) {
    const unsigned k = static_cast<unsigned>(comps_.size());
    const std::size_t cols = monomial_count(n, k);
    if (k > 0 && comps_[k - 1].rows() == monomial_count(n, k - 1) && comps_[k - 1].rows() > 0) {
      comps_.push_back(Mat::identity(cols));
      continue;
    }
    EchelonBuilder e(cols);
    if (k > 0) {
      const Mat& prev = comps_[k - 1];
      const auto& up = raise_table(n, k - 1);
      for (std::size_t i = 0; i < n && !e.full(); ++i) {
        for (std::size_t r = 0; r < prev.rows() && !e.full(); ++r) {
          Vec row(cols);
          for (std::size_t c = 0; c < prev.cols(); ++c) {
            if (sgn(prev(r, c)) != 0) row[up[i][c]] = prev(r, c);
          }
          e.insert(std::move(row));
        }
      }
    }
    for (const auto& g : gens_.gens) {
      if (e.full()) break;
      if (g.degree() == k) e.insert(g.coeffs());
    }
    comps_.push_back(e.rank() == 0 ? Mat(0, cols) : e.finish());
  }
  return comps_[d];
}

Mat ideal_component(const IdealGens& gens, unsigned d) {
  IdealTower t(gens);
  return t.component(d);
}

namespace {

// Component of the kernel at degree d; nullopt-equivalent empty matrix when
// trivial.
Mat kernel_component(const IdealGens& gens, unsigned d) {
  const std::size_t n = gens.nvars;
  const auto& in = monomial_basis(n, d);
  EchelonBuilder e(in.size());
  for (const auto& g : gens.gens) {
    if (e.full()) break;
    if (g.is_zero() || g.degree() > d) continue;
    const auto& out = monomial_basis(n, d - g.degree());
    for (std::size_t bi = 0; bi < out.size() && !e.full(); ++bi) {
      const MultiIndex& beta = out[bi];
      const Rat beta_fact = factorial(beta);
      // Row: coefficient of t^beta in g(D) q as a linear functional of q.
      Vec row(in.size());
      for (const auto& [alpha, c] : g.terms()) {
        MultiIndex gamma(n);
        for (std::size_t i = 0; i < n; ++i) gamma[i] = beta[i] + alpha[i];
        row[in.index_of(gamma)] += c * factorial(gamma) / beta_fact;
      }
      e.insert(std::move(row));
    }
  }
  if (e.full()) return Mat(0, in.size());
  if (e.rank() == 0) return Mat::identity(in.size());
  return nullspace(e.finish());
}

}  // namespace

GradedSubspace kernel(const IdealGens& gens, unsigned dmax) {
  std::map<unsigned, Mat> comps;
  for (unsigned d = 0; d <= dmax; ++d) {
    Mat k = kernel_component(gens, d);
    if (k.rows() == 0) break;
    comps.emplace(d, std::move(k));
  }
  return GradedSubspace::from_components(gens.nvars, comps);
}

GradedSubspace full_kernel(const IdealGens& gens, unsigned cap) {
  std::map<unsigned, Mat> comps;
  for (unsigned d = 0;; ++d) {
    if (d > cap) throw Error(ErrorCode::kNoStabilization, "kernel nonzero through degree " + std::to_string(cap));
    Mat k = kernel_component(gens, d);
    if (k.rows() == 0) break;
    comps.emplace(d, std::move(k));
  }
  return GradedSubspace::from_components(gens.nvars, comps);
}

HilbertFn hilbert_quotient(const IdealGens& gens, unsigned cap) {
  IdealTower t(gens);
  std::vector<std::size_t> v;
  for (unsigned d = 0;; ++d) {
    if (d > cap) throw Error(ErrorCode::kNoStabilization, "quotient nonzero through degree " + std::to_string(cap));
    const std::size_t q = monomial_count(gens.nvars, d) - t.dim_at(d);
    if (q == 0) break;
    v.push_back(q);
  }
  return HilbertFn::of(std::move(v));
}

DirectSumReport direct_sum_certificate(const GradedSubspace& space, const IdealGens& ideal,
                                       std::optional<unsigned> dmax) {
  const unsigned top = dmax ? *dmax : (space.top_degree() ? *space.top_degree() + 1 : 0);
  IdealTower t(ideal);
  DirectSumReport rep;
  for (unsigned d = 0; d <= top; ++d) {
    DirectSumRow row;
    row.degree = d;
    const Mat p = space.component(d);
    const Mat& j = t.component(d);
    row.dim_space = p.rows();
    row.dim_ideal = j.rows();
    row.dim_total = monomial_count(space.nvars(), d);
    row.dim_meet = row.dim_space + row.dim_ideal - sum_rank(p, j);
    row.ok = row.dim_space + row.dim_ideal == row.dim_total && row.dim_meet == 0;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

IdealComparison compare_ideals(const IdealGens& a, const IdealGens& b, unsigned cap) {
  IdealTower ta(a);
  IdealTower tb(b);
  IdealComparison out;
  for (unsigned d = 0; d <= cap; ++d) {
    const Mat& ma = ta.component(d);
    const Mat& mb = tb.component(d);
    out.dims_a.push_back(ma.rows());
    out.dims_b.push_back(mb.rows());
    out.checked_through = d;
    if (!(ma == mb)) {
      out.equal = false;
      if (!out.first_difference) out.first_difference = d;
    }
    if (ta.full_at(d) && tb.full_at(d)) return out;
  }
  throw Error(ErrorCode::kNoStabilization, "ideals not full by degree " + std::to_string(cap));
}

bool ideal_contains(const IdealGens& big, const IdealGens& small) {
  IdealTower t(big);
  for (const auto& g : small.gens) {
    const Mat& m = t.component(g.degree());
    EchelonBuilder e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vec(r));
    Vec v = g.coeffs();
    e.reduce(v);
    if (!is_zero(v)) return false;
  }
  return true;
}

}  // namespace zonoforge
