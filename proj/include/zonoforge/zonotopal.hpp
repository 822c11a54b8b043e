#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zonoforge/config.hpp"
#include "zonoforge/graded.hpp"
#include "zonoforge/polynomial.hpp"

namespace zonoforge {

enum class BundleKind { kCentral, kExternal, kSemiExternal, kSemiInternal };

std::string_view kind_name(BundleKind k);
std::optional<BundleKind> parse_kind(std::string_view s);

struct QBasisEntry {
  ColumnSet index_set;
  HPoly poly;
};

// One zonotopal P-space together with its I- and J-ideals and the three
// independently computed Hilbert functions.
struct ZonotopalBundle {
  BundleKind kind = BundleKind::kCentral;
  // B(X), the family I' or B_-(X, I), depending on kind.
  std::vector<ColumnSet> family;
  std::optional<ColumnSet> internal_set;
  ColumnOrder order = ColumnOrder::index_order(0);

  GradedSubspace p_space;
  // Empty for semi-internal bundles.
  std::vector<QBasisEntry> q_basis;
  IdealGens i_ideal;
  // Facet-power ideal with multiplicities raised on spans of family members
  // (semi-external kinds only).
  std::optional<IdealGens> ieps_ideal;
  IdealGens j_ideal;
  // Column sets whose products generate j_ideal; they index X' for the
  // external kinds and X otherwise.
  std::vector<ColumnSet> j_sets;

  GradedSubspace i_kernel;
  HilbertFn hilbert_valuation;
  HilbertFn hilbert_algebraic;
  HilbertFn hilbert_space;
};

// Degree cap used when waiting for graded computations to stabilize.
unsigned stabilization_cap(const Config& c);

// Span of the polynomials Q_B = p_{X(B)} over all bases (index order).
GradedSubspace central_space(const Config& c);
// Span of all p_Y with rank(X \ Y) = n.
GradedSubspace short_span(const Config& c);
// Intersection of P(X \ b) over b in s. Throws kColoopInI when some b is a
// coloop.
GradedSubspace deletion_intersection(const Config& c, ColumnSet s);

IdealGens central_i_ideal(const Config& c);
IdealGens external_i_ideal(const Config& c);
IdealGens internal_i_ideal(const Config& c);

// Inclusion-minimal sets meeting every member of the family, sorted by
// bitmask. An empty family yields the single empty set.
std::vector<ColumnSet> minimal_hitting_sets(const std::vector<ColumnSet>& family);

ZonotopalBundle central(const Config& c);
ZonotopalBundle external(const Config& c);
ZonotopalBundle semi_external(const Config& c, const SemiExternalFamily& fam);
ZonotopalBundle semi_internal(const Config& c, ColumnSet i);

// D-space: kernel of the bundle's J-ideal.
GradedSubspace d_space(const Config& c, const ZonotopalBundle& b);

// Gram matrix <p_i, d_j> over the given bases.
Mat pairing_gram(const std::vector<HPoly>& p_basis, const std::vector<HPoly>& d_basis);
bool gram_invertible(const Mat& gram);

// Members of fam with no proper subset in fam.
std::vector<ColumnSet> minimal_members(const SemiExternalFamily& fam);
// Z inside X \ i completing i to a basis.
std::vector<ColumnSet> completions(const Config& c, ColumnSet i);

// Sum over minimal I of the intersections of P(X + Z) over the completions Z
// of I. With enforce set, throws kConditionFails unless the extension
// condition holds for fam.
GradedSubspace thm28_decomposition(const Config& c, const SemiExternalFamily& fam, bool enforce = true);

enum class IdentityCheckMode { kAssert, kExplore };

struct DeletionIdentityReport {
  bool applicable = true;
  std::string diagnostic;
  bool equal = false;
  HilbertFn lhs;
  HilbertFn rhs;
  std::vector<ColumnSet> extra_bases;
};

// Compares P_-(X, I) with P_-(X) + span{Q_B : B in B_-(X, I) \ B_-(X)}, all
// under the order putting I last. Assertion mode requires #I <= 2 and throws
// kBundleMismatch if the spaces differ; both modes skip when X has a coloop.
DeletionIdentityReport remark37_check(const Config& c, ColumnSet i, IdentityCheckMode mode);

struct CountPair {
  std::size_t codim = 0;
  std::size_t count = 0;
  bool ok() const { return codim == count; }
};

struct CodimensionCounts {
  CountPair central;   // codim I(X) vs #B(X)
  CountPair external;  // codim I_+(X) vs #I(X)
  CountPair internal;  // codim I_-(X) vs #B_-(X)
  bool ok() const { return central.ok() && external.ok() && internal.ok(); }
};

CodimensionCounts theorem1_counts(const Config& c);

}  // namespace zonoforge
