#include "zonoforge/config.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zonoforge/error.hpp"

namespace zonoforge {

ColumnSet ColumnSet::of(std::initializer_list<std::size_t> idx) {
  std::uint32_t bits = 0;
  for (auto i : idx) bits |= 1u << i;
  return ColumnSet(bits);
}

ColumnSet ColumnSet::of(const std::vector<std::size_t>& idx) {
  std::uint32_t bits = 0;
  for (auto i : idx) bits |= 1u << i;
  return ColumnSet(bits);
}

std::vector<std::size_t> ColumnSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string ColumnSet::str() const {
  std::string s = "[";
  bool first = true;
  for (auto i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

ColumnOrder ColumnOrder::index_order(std::size_t count) {
  ColumnOrder o;
  o.position_.resize(count);
  for (std::size_t i = 0; i < count; ++i) o.position_[i] = i;
  return o;
}

ColumnOrder ColumnOrder::with_last(std::size_t count, ColumnSet last) {
  ColumnOrder o;
  o.position_.resize(count);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i)
    if (!last.contains(i)) o.position_[i] = pos++;
  for (std::size_t i = 0; i < count; ++i)
    if (last.contains(i)) o.position_[i] = pos++;
  return o;
}

std::size_t ColumnOrder::max_of(ColumnSet s) const {
  const auto idx = s.indices();
  return *std::max_element(idx.begin(), idx.end(),
                           [&](std::size_t a, std::size_t b) { return position_[a] < position_[b]; });
}

bool ColumnOrder::is_index_order() const {
  for (std::size_t i = 0; i < position_.size(); ++i)
    if (position_[i] != i) return false;
  return true;
}

Mat Config::matrix() const {
  Mat m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  return m;
}

Config validate(Config c) {
  if (c.columns.size() > 24) {
    throw Error(ErrorCode::kResourceLimit, "at most 24 columns are supported");
  }
  for (std::size_t j = 0; j < c.columns.size(); ++j) {
    if (c.columns[j].size() != c.n) {
      throw Error(ErrorCode::kDimensionMismatch, "column " + std::to_string(j) + " has wrong length");
    }
    if (is_zero(c.columns[j])) throw Error(ErrorCode::kZeroColumn, "column " + std::to_string(j));
  }
  const std::size_t r = rank_of(c, c.all());
  if (r != c.n) {
    throw Error(ErrorCode::kRankDeficient, "rank " + std::to_string(r) + " < n = " + std::to_string(c.n));
  }
  if (c.b0) {
    if (c.b0->size() != c.n) throw Error(ErrorCode::kBadB0, "B0 must have n vectors");
    for (const auto& b : *c.b0) {
      if (b.size() != c.n) throw Error(ErrorCode::kBadB0, "B0 vector of wrong length");
    }
    if (rank(Mat::from_rows(*c.b0, c.n)) != c.n) throw Error(ErrorCode::kBadB0, "B0 is not a basis");
  }
  if (c.lambda && c.lambda->size() != c.columns.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "lambda must have one entry per column");
  }
  if (c.lambda_b0 && c.lambda_b0->size() != c.n) {
    throw Error(ErrorCode::kDimensionMismatch, "lambda_b0 must have n entries");
  }
  return c;
}

Config config_from_matrix(const std::vector<Vec>& rows) {
  Config c;
  c.n = rows.size();
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  c.columns.assign(cols, Vec(c.n));
  for (std::size_t i = 0; i < c.n; ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) c.columns[j][i] = rows[i][j];
  }
  return validate(std::move(c));
}

std::vector<Vec> vectors_of(const Config& c, ColumnSet s) {
  std::vector<Vec> out;
  for (auto i : s.indices()) out.push_back(c.columns[i]);
  return out;
}

std::size_t rank_of(const Config& c, ColumnSet s) {
  EchelonBuilder b(c.n);
  for (auto i : s.indices()) {
    b.insert(c.columns[i]);
    if (b.full()) break;
  }
  return b.rank();
}

bool is_independent(const Config& c, ColumnSet s) { return rank_of(c, s) == s.size(); }

Mat span_key(const Config& c, ColumnSet s) {
  EchelonBuilder b(c.n);
  for (auto i : s.indices()) b.insert(c.columns[i]);
  return b.finish();
}

bool span_contains(const Config& c, ColumnSet b, ColumnSet a) {
  return rank_of(c, a | b) == rank_of(c, b);
}

std::vector<ColumnSet> independents(const Config& c) {
  std::vector<ColumnSet> out;
  const std::uint32_t limit = c.all().bits();
  for (std::uint32_t m = 0;; ++m) {
    const ColumnSet s(m);
    if (s.size() <= c.n && is_independent(c, s)) out.push_back(s);
    if (m == limit) break;
  }
  return out;
}

std::vector<ColumnSet> bases(const Config& c) {
  std::vector<ColumnSet> out;
  for (auto s : independents(c))
    if (s.size() == c.n) out.push_back(s);
  return out;
}

ColumnSet coloops(const Config& c) {
  ColumnSet out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (rank_of(c, c.all().without(i)) < c.n) out = out.with(i);
  return out;
}

ColumnSet passive_set(const Config& c, ColumnSet y, const std::optional<ColumnOrder>& order) {
  const ColumnOrder ord = order ? *order : ColumnOrder::index_order(c.size());
  ColumnSet out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (y.contains(x)) continue;
    ColumnSet before;
    for (auto k : y.indices())
      if (ord.less(k, x)) before = before.with(k);
    if (!span_contains(c, before, ColumnSet::of({x}))) out = out.with(x);
  }
  return out;
}

std::size_t valuation(const Config& c, ColumnSet y, const std::optional<ColumnOrder>& order) {
  return passive_set(c, y, order).size();
}

std::vector<std::size_t> valuation_histogram(const Config& c, const std::vector<ColumnSet>& family,
                                             const std::optional<ColumnOrder>& order) {
  std::vector<std::size_t> h;
  for (auto s : family) {
    const auto v = valuation(c, s, order);
    if (h.size() <= v) h.resize(v + 1, 0);
    ++h[v];
  }
  return h;
}

Facet facet_of(const Config& c, ColumnSet spanning) {
  Mat rows = Mat::from_rows(vectors_of(c, spanning), c.n);
  if (rows.rows() == 0) rows = Mat(0, c.n);
  const Mat ns = nullspace(rows);
  if (ns.rows() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "set " + spanning.str() + " does not span a hyperplane");
  }
  Facet f;
  f.normal = primitive_integer(ns.row_vec(0));
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(dot(f.normal, c.columns[j])) == 0) f.members = f.members.with(j);
  f.mult = c.size() - f.members.size();
  return f;
}

std::vector<Facet> facets(const Config& c) {
  std::map<Vec, Facet> by_normal;
  for (auto s : independents(c)) {
    if (s.size() + 1 != c.n) continue;
    Facet f = facet_of(c, s);
    by_normal.emplace(f.normal, std::move(f));
  }
  std::vector<Facet> out;
  out.reserve(by_normal.size());
  for (auto& [k, f] : by_normal) out.push_back(std::move(f));
  return out;
}

ColumnOrder internal_order(const Config& c, ColumnSet i) { return ColumnOrder::with_last(c.size(), i); }

namespace {

// b is the order-maximal column off span(B \ b).
bool is_active(const Config& c, ColumnSet basis, std::size_t b, const ColumnOrder& order) {
  const Facet f = facet_of(c, basis.without(b));
  return order.max_of(c.all().minus(f.members)) == b;
}

}  // namespace

std::vector<ColumnSet> internal_bases(const Config& c, ColumnSet i) {
  if (!is_independent(c, i)) throw Error(ErrorCode::kNotIndependent, i.str());
  const ColumnOrder order = internal_order(c, i);
  std::vector<ColumnSet> out;
  for (auto basis : bases(c)) {
    bool internal = true;
    for (auto b : (basis & i).indices()) {
      if (is_active(c, basis, b, order)) {
        internal = false;
        break;
      }
    }
    if (internal) out.push_back(basis);
  }
  return out;
}

std::vector<ColumnSet> internal_bases_all(const Config& c, const ColumnOrder& order) {
  std::vector<ColumnSet> out;
  for (auto basis : bases(c)) {
    bool internal = true;
    for (auto b : basis.indices()) {
      if (is_active(c, basis, b, order)) {
        internal = false;
        break;
      }
    }
    if (internal) out.push_back(basis);
  }
  return out;
}

bool SemiExternalFamily::contains(ColumnSet s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

SemiExternalFamily semiexternal_close(const Config& c, const std::vector<ColumnSet>& seeds) {
  for (auto s : seeds)
    if (!is_independent(c, s)) throw Error(ErrorCode::kNotIndependent, s.str());
  const auto indep = independents(c);
  std::set<ColumnSet> fam;
  for (auto b : bases(c)) fam.insert(b);
  // span containment is transitive, so a single pass over the seeds reaches
  // the fixpoint.
  for (auto s : seeds) {
    for (auto t : indep)
      if (span_contains(c, t, s)) fam.insert(t);
  }
  SemiExternalFamily out{{fam.begin(), fam.end()}};
  return out;
}

std::optional<ColumnSet> closure_violation(const Config& c, const std::vector<ColumnSet>& family) {
  std::set<ColumnSet> fam(family.begin(), family.end());
  const auto indep = independents(c);
  for (auto s : family) {
    for (auto t : indep)
      if (!fam.count(t) && span_contains(c, t, s)) return t;
  }
  return std::nullopt;
}

SemiExternalFamily semiexternal_explicit(const Config& c, std::vector<ColumnSet> family) {
  for (auto s : family)
    if (!is_independent(c, s)) throw Error(ErrorCode::kNotIndependent, s.str());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (auto v = closure_violation(c, family)) {
    throw Error(ErrorCode::kFamilyNotClosed, "missing independent set " + v->str());
  }
  return SemiExternalFamily{std::move(family)};
}

std::vector<ColumnSet> facet_extensions(const Config& c, ColumnSet i) {
  std::vector<ColumnSet> out;
  for (auto t : independents(c))
    if (t.size() + 1 == c.n && span_contains(c, t, i)) out.push_back(t);
  return out;
}

ConditionResult extension_condition(const Config& c, const SemiExternalFamily& fam) {
  for (auto i : independents(c)) {
    if (i.size() == c.n || fam.contains(i)) continue;
    const auto ext = facet_extensions(c, i);
    const bool all_in = std::all_of(ext.begin(), ext.end(), [&](ColumnSet t) { return fam.contains(t); });
    if (all_in) return {false, i};
  }
  return {};
}

Config extended_config(const Config& c) {
  if (!c.b0) throw Error(ErrorCode::kMissingB0, "an ordered basis b0 is required");
  Config x;
  x.n = c.n;
  x.columns = c.columns;
  x.columns.insert(x.columns.end(), c.b0->begin(), c.b0->end());
  if (c.lambda && c.lambda_b0) {
    Vec l = *c.lambda;
    l.insert(l.end(), c.lambda_b0->begin(), c.lambda_b0->end());
    x.lambda = std::move(l);
  }
  return x;
}

ColumnSet extend_basis(const Config& c, ColumnSet i) {
  if (!c.b0) throw Error(ErrorCode::kMissingB0, "an ordered basis b0 is required");
  if (!is_independent(c, i)) throw Error(ErrorCode::kNotIndependent, i.str());
  const Config xp = extended_config(c);
  const std::size_t N = c.size();
  ColumnSet out = i;
  ColumnSet prefix = i;
  for (std::size_t k = 0; k < c.n; ++k) {
    const std::size_t b = N + k;
    if (!span_contains(xp, prefix, ColumnSet::of({b}))) out = out.with(b);
    prefix = prefix.with(b);
  }
  return out;
}

Config delete_columns(const Config& c, ColumnSet s) {
  Config out;
  out.n = c.n;
  out.b0 = c.b0;
  Vec lambda;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (s.contains(j)) continue;
    out.columns.push_back(c.columns[j]);
    if (c.lambda) lambda.push_back((*c.lambda)[j]);
  }
  if (c.lambda) out.lambda = std::move(lambda);
  return out;
}

Config append_columns(const Config& c, ColumnSet s) {
  Config out;
  out.n = c.n;
  out.b0 = c.b0;
  out.columns = c.columns;
  for (auto j : s.indices()) out.columns.push_back(c.columns[j]);
  return out;
}

}  // namespace zonoforge
