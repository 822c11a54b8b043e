#include "zonoforge/zonotopal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zonoforge/error.hpp"

namespace zonoforge {

std::string_view kind_name(BundleKind k) {
  switch (k) {
    case BundleKind::kCentral: return "central";
    case BundleKind::kExternal: return "external";
    case BundleKind::kSemiExternal: return "semi_external";
    case BundleKind::kSemiInternal: return "semi_internal";
  }
  return "?";
}

std::optional<BundleKind> parse_kind(std::string_view s) {
  for (auto k : {BundleKind::kCentral, BundleKind::kExternal, BundleKind::kSemiExternal, BundleKind::kSemiInternal})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

unsigned stabilization_cap(const Config& c) { return static_cast<unsigned>(2 * (c.size() + c.n) + 2); }

namespace {

std::vector<HPoly> q_polys(const Config& c, const std::vector<ColumnSet>& family, const ColumnOrder& order,
                           std::vector<QBasisEntry>* entries) {
  std::vector<HPoly> out;
  for (auto s : family) {
    HPoly q = linform_product(c, passive_set(c, s, order));
    if (entries) entries->push_back({s, q});
    out.push_back(std::move(q));
  }
  return out;
}

// Products p_Y for Y ranging over the given column sets of cfg.
IdealGens products(const Config& cfg, const std::vector<ColumnSet>& sets) {
  IdealGens g{cfg.n, {}};
  for (auto s : sets) g.gens.push_back(linform_product(cfg, s));
  return g;
}

void finish_bundle(const Config& c, ZonotopalBundle& b) {
  b.i_kernel = full_kernel(b.i_ideal, stabilization_cap(c));
  b.hilbert_algebraic = b.i_kernel.hilbert();
  b.hilbert_space = b.p_space.hilbert();
  b.hilbert_valuation = HilbertFn::of(valuation_histogram(c, b.family, b.order));
  if (!(b.hilbert_algebraic == b.hilbert_space) || !(b.hilbert_space == b.hilbert_valuation)) {
    throw Error(ErrorCode::kBundleMismatch,
                std::string(kind_name(b.kind)) + " bundle: Hilbert functions disagree");
  }
}

}  // namespace

GradedSubspace central_space(const Config& c) {
  const auto order = ColumnOrder::index_order(c.size());
  return GradedSubspace::from_spanning(c.n, q_polys(c, bases(c), order, nullptr));
}

GradedSubspace short_span(const Config& c) {
  std::vector<HPoly> polys;
  const std::uint32_t limit = c.all().bits();
  for (std::uint32_t m = 0;; ++m) {
    const ColumnSet y(m);
    if (rank_of(c, c.all().minus(y)) == c.n) polys.push_back(linform_product(c, y));
    if (m == limit) break;
  }
  return GradedSubspace::from_spanning(c.n, polys);
}

GradedSubspace deletion_intersection(const Config& c, ColumnSet s) {
  std::optional<GradedSubspace> acc;
  for (auto b : s.indices()) {
    if (rank_of(c, c.all().without(b)) < c.n) {
      throw Error(ErrorCode::kColoopInI, "column " + std::to_string(b) + " is a coloop of X");
    }
    GradedSubspace p = central_space(delete_columns(c, ColumnSet::of({b})));
    acc = acc ? intersect(*acc, p) : std::move(p);
  }
  return acc ? *acc : central_space(c);
}

namespace {

IdealGens facet_powers(const Config& c, int shift) {
  IdealGens g{c.n, {}};
  for (const auto& f : facets(c)) {
    const int e = static_cast<int>(f.mult) + shift;
    g.gens.push_back(power(HPoly::linear_form(f.normal), static_cast<unsigned>(std::max(e, 0))));
  }
  return g;
}

}  // namespace

IdealGens central_i_ideal(const Config& c) { return facet_powers(c, 0); }
IdealGens external_i_ideal(const Config& c) { return facet_powers(c, 1); }
IdealGens internal_i_ideal(const Config& c) { return facet_powers(c, -1); }

std::vector<ColumnSet> minimal_hitting_sets(const std::vector<ColumnSet>& family) {
  std::set<ColumnSet> found;
  std::set<ColumnSet> visited;
  // Branch on the elements of the first member not yet hit; prune states
  // already seen or already containing a found hitting set.
  auto rec = [&](auto&& self, ColumnSet chosen) -> void {
    if (!visited.insert(chosen).second) return;
    for (auto h : found)
      if (h.subset_of(chosen)) return;
    auto miss = std::find_if(family.begin(), family.end(), [&](ColumnSet s) { return !s.intersects(chosen); });
    if (miss == family.end()) {
      found.insert(chosen);
      return;
    }
    for (auto e : miss->indices()) self(self, chosen.with(e));
  };
  rec(rec, ColumnSet());
  std::vector<ColumnSet> out;
  for (auto s : found) {
    bool minimal = true;
    for (auto t : found)
      if (t != s && t.subset_of(s)) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

ZonotopalBundle central(const Config& c) {
  ZonotopalBundle b;
  b.kind = BundleKind::kCentral;
  b.order = ColumnOrder::index_order(c.size());
  b.family = bases(c);
  const auto q = q_polys(c, b.family, b.order, &b.q_basis);
  b.p_space = GradedSubspace::from_spanning(c.n, q);
  if (!(b.p_space == short_span(c))) {
    throw Error(ErrorCode::kBundleMismatch, "central: Q-basis span differs from the span of short products");
  }
  b.i_ideal = central_i_ideal(c);
  for (const auto& f : facets(c)) b.j_sets.push_back(c.all().minus(f.members));
  b.j_ideal = products(c, b.j_sets);
  finish_bundle(c, b);
  return b;
}

ZonotopalBundle external(const Config& c) {
  ZonotopalBundle b = semi_external(c, SemiExternalFamily{independents(c)});
  b.kind = BundleKind::kExternal;
  return b;
}

ZonotopalBundle semi_external(const Config& c, const SemiExternalFamily& fam) {
  if (!c.b0) throw Error(ErrorCode::kMissingB0, "semi-external J-ideal needs b0");
  if (auto v = closure_violation(c, fam.members)) {
    throw Error(ErrorCode::kFamilyNotClosed, "missing independent set " + v->str());
  }
  ZonotopalBundle b;
  b.kind = BundleKind::kSemiExternal;
  b.order = ColumnOrder::index_order(c.size());
  b.family = fam.members;
  const auto q = q_polys(c, b.family, b.order, &b.q_basis);
  b.p_space = GradedSubspace::from_spanning(c.n, q);

  std::vector<HPoly> short_polys;
  const std::uint32_t limit = c.all().bits();
  for (std::uint32_t m = 0;; ++m) {
    const ColumnSet y(m);
    if (std::any_of(fam.members.begin(), fam.members.end(), [&](ColumnSet s) { return !s.intersects(y); }))
      short_polys.push_back(linform_product(c, y));
    if (m == limit) break;
  }
  if (!(b.p_space == GradedSubspace::from_spanning(c.n, short_polys))) {
    throw Error(ErrorCode::kBundleMismatch, "semi-external: Q-basis span differs from the family-short span");
  }

  b.i_ideal = external_i_ideal(c);
  std::map<Mat, std::size_t, bool (*)(const Mat&, const Mat&)> spans(
      [](const Mat& x, const Mat& y) { return x.to_rows() < y.to_rows(); });
  for (auto s : independents(c)) {
    if (fam.contains(s)) continue;
    Mat key = span_key(c, s);
    std::size_t off = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!span_contains(c, s, ColumnSet::of({j}))) ++off;
    spans.emplace(std::move(key), off);
  }
  for (const auto& [key, off] : spans) {
    auto g = perp_space_gens(c.n, key.to_rows(), static_cast<unsigned>(off));
    b.i_ideal.gens.insert(b.i_ideal.gens.end(), g.begin(), g.end());
  }

  IdealGens eps{c.n, {}};
  for (const auto& f : facets(c)) {
    bool raised = false;
    for (auto s : fam.members) {
      if (s.size() + 1 == c.n && (s.subset_of(f.members))) raised = true;
    }
    eps.gens.push_back(power(HPoly::linear_form(f.normal), static_cast<unsigned>(f.mult + (raised ? 1 : 0))));
  }
  b.ieps_ideal = std::move(eps);

  std::vector<ColumnSet> ex;
  for (auto s : fam.members) ex.push_back(extend_basis(c, s));
  b.j_sets = minimal_hitting_sets(ex);
  b.j_ideal = products(extended_config(c), b.j_sets);
  finish_bundle(c, b);
  return b;
}

ZonotopalBundle semi_internal(const Config& c, ColumnSet i) {
  if (!is_independent(c, i)) throw Error(ErrorCode::kNotIndependent, i.str());
  for (auto x : i.indices()) {
    if (rank_of(c, c.all().without(x)) < c.n) {
      throw Error(ErrorCode::kColoopInI, "column " + std::to_string(x) + " is a coloop of X");
    }
  }
  ZonotopalBundle b;
  b.kind = BundleKind::kSemiInternal;
  b.internal_set = i;
  b.order = internal_order(c, i);
  b.family = internal_bases(c, i);
  b.p_space = deletion_intersection(c, i);
  b.i_ideal = central_i_ideal(c);
  for (const auto& f : facets(c)) {
    if (!i.subset_of(f.members)) {
      b.i_ideal.gens.push_back(power(HPoly::linear_form(f.normal), static_cast<unsigned>(f.mult - 1)));
    }
  }
  b.j_sets = minimal_hitting_sets(b.family);
  b.j_ideal = products(c, b.j_sets);
  finish_bundle(c, b);
  return b;
}

GradedSubspace d_space(const Config& c, const ZonotopalBundle& b) {
  return full_kernel(b.j_ideal, stabilization_cap(c));
}

Mat pairing_gram(const std::vector<HPoly>& p_basis, const std::vector<HPoly>& d_basis) {
  Mat g(p_basis.size(), d_basis.size());
  for (std::size_t i = 0; i < p_basis.size(); ++i)
    for (std::size_t j = 0; j < d_basis.size(); ++j) g(i, j) = pair(p_basis[i], d_basis[j]);
  return g;
}

bool gram_invertible(const Mat& gram) { return gram.rows() == gram.cols() && rank(gram) == gram.rows(); }

std::vector<ColumnSet> minimal_members(const SemiExternalFamily& fam) {
  std::vector<ColumnSet> out;
  for (auto s : fam.members) {
    bool minimal = true;
    for (auto t : fam.members)
      if (t != s && t.subset_of(s)) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<ColumnSet> completions(const Config& c, ColumnSet i) {
  std::vector<ColumnSet> out;
  for (auto b : bases(c))
    if (i.subset_of(b)) out.push_back(b.minus(i));
  return out;
}

GradedSubspace thm28_decomposition(const Config& c, const SemiExternalFamily& fam, bool enforce) {
  if (enforce) {
    const auto cond = extension_condition(c, fam);
    if (!cond.holds) throw Error(ErrorCode::kConditionFails, "witness " + cond.witness->str());
  }
  GradedSubspace total(c.n);
  for (auto i : minimal_members(fam)) {
    std::optional<GradedSubspace> meet;
    for (auto z : completions(c, i)) {
      GradedSubspace p = central_space(append_columns(c, z));
      meet = meet ? intersect(*meet, p) : std::move(p);
    }
    if (meet) total = sum(total, *meet);
  }
  return total;
}

DeletionIdentityReport remark37_check(const Config& c, ColumnSet i, IdentityCheckMode mode) {
  if (mode == IdentityCheckMode::kAssert && i.size() > 2) {
    throw Error(ErrorCode::kDimensionMismatch, "assertion mode needs #I <= 2");
  }
  if (!is_independent(c, i)) throw Error(ErrorCode::kNotIndependent, i.str());
  DeletionIdentityReport rep;
  const ColumnSet loops = coloops(c);
  if (!loops.empty()) {
    rep.applicable = false;
    rep.diagnostic = "X has coloops " + loops.str() + "; P_-(X) is undefined";
    return rep;
  }
  const ColumnOrder order = internal_order(c, i);
  const GradedSubspace lhs = deletion_intersection(c, i);
  const auto internal = internal_bases_all(c, order);
  const auto semi = internal_bases(c, i);
  std::vector<HPoly> extra;
  for (auto b : semi) {
    if (std::binary_search(internal.begin(), internal.end(), b)) continue;
    rep.extra_bases.push_back(b);
    extra.push_back(linform_product(c, passive_set(c, b, order)));
  }
  const GradedSubspace rhs = sum(deletion_intersection(c, c.all()), GradedSubspace::from_spanning(c.n, extra));
  rep.lhs = lhs.hilbert();
  rep.rhs = rhs.hilbert();
  rep.equal = lhs == rhs;
  if (mode == IdentityCheckMode::kAssert && !rep.equal) {
    throw Error(ErrorCode::kBundleMismatch, "P_-(X,I) differs from P_-(X) + extra Q_B for I = " + i.str());
  }
  return rep;
}

CodimensionCounts theorem1_counts(const Config& c) {
  const unsigned cap = stabilization_cap(c);
  CodimensionCounts t;
  t.central = {hilbert_quotient(central_i_ideal(c), cap).total(), bases(c).size()};
  t.external = {hilbert_quotient(external_i_ideal(c), cap).total(), independents(c).size()};
  t.internal = {hilbert_quotient(internal_i_ideal(c), cap).total(),
                internal_bases_all(c, ColumnOrder::index_order(c.size())).size()};
  return t;
}

}  // namespace zonoforge
