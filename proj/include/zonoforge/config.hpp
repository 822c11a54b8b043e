#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonoforge/matrix.hpp"
#include "zonoforge/rational.hpp"

namespace zonoforge {

// Index subset of a configuration's columns.
class ColumnSet {
 public:
  constexpr ColumnSet() = default;
  constexpr explicit ColumnSet(std::uint32_t bits) : bits_(bits) {}
  static ColumnSet of(std::initializer_list<std::size_t> idx);
  static ColumnSet of(const std::vector<std::size_t>& idx);
  static constexpr ColumnSet range(std::size_t count) {
    return ColumnSet(count >= 32 ? ~0u : ((1u << count) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(ColumnSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ColumnSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr ColumnSet with(std::size_t i) const { return ColumnSet(bits_ | (1u << i)); }
  constexpr ColumnSet without(std::size_t i) const { return ColumnSet(bits_ & ~(1u << i)); }
  constexpr ColumnSet operator|(ColumnSet o) const { return ColumnSet(bits_ | o.bits_); }
  constexpr ColumnSet operator&(ColumnSet o) const { return ColumnSet(bits_ & o.bits_); }
  constexpr ColumnSet minus(ColumnSet o) const { return ColumnSet(bits_ & ~o.bits_); }

  std::vector<std::size_t> indices() const;
  // "[0,2,3]"
  std::string str() const;

  constexpr auto operator<=>(const ColumnSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Order on column indices: position[i] is the rank of column i. The identity
// order is column index order.
class ColumnOrder {
 public:
  static ColumnOrder index_order(std::size_t count);
  // Columns outside `last` keep index order and precede the members of `last`
  // (which also keep index order among themselves).
  static ColumnOrder with_last(std::size_t count, ColumnSet last);

  bool less(std::size_t a, std::size_t b) const { return position_[a] < position_[b]; }
  // Maximal element of a nonempty set.
  std::size_t max_of(ColumnSet s) const;
  std::size_t size() const { return position_.size(); }
  bool is_index_order() const;

 private:
  std::vector<std::size_t> position_;
};

// A rational vector configuration X (columns in order), with optional
// attachments used by the external, semi-external and arrangement
// constructions.
struct Config {
  std::size_t n = 0;
  std::vector<Vec> columns;
  std::optional<std::vector<Vec>> b0;
  std::optional<Vec> lambda;
  std::optional<Vec> lambda_b0;

  std::size_t size() const { return columns.size(); }
  ColumnSet all() const { return ColumnSet::range(columns.size()); }
  // n x N matrix whose columns are the configuration vectors.
  Mat matrix() const;
};

// Throws Error(kZeroColumn | kRankDeficient | kBadB0 | kDimensionMismatch).
Config validate(Config c);

// Config from an n x N matrix (columns are the vectors); validated.
Config config_from_matrix(const std::vector<Vec>& rows);

std::size_t rank_of(const Config& c, ColumnSet s);
bool is_independent(const Config& c, ColumnSet s);
// Canonical form of span(s): RREF of the vectors as rows.
Mat span_key(const Config& c, ColumnSet s);
// span(a) is contained in span(b).
bool span_contains(const Config& c, ColumnSet b, ColumnSet a);

std::vector<ColumnSet> independents(const Config& c);
std::vector<ColumnSet> bases(const Config& c);

// Columns x in X whose removal drops the rank.
ColumnSet coloops(const Config& c);

// X(Y): columns outside Y not spanned by the members of Y preceding them.
ColumnSet passive_set(const Config& c, ColumnSet y,
                      const std::optional<ColumnOrder>& order = std::nullopt);
std::size_t valuation(const Config& c, ColumnSet y,
                      const std::optional<ColumnOrder>& order = std::nullopt);

// Histogram of val over a family: entry j counts members with valuation j.
// Trailing zeros trimmed.
std::vector<std::size_t> valuation_histogram(const Config& c, const std::vector<ColumnSet>& family,
                                             const std::optional<ColumnOrder>& order = std::nullopt);

struct Facet {
  ColumnSet members;  // columns lying on the hyperplane
  Vec normal;         // primitive integer, first nonzero entry positive
  std::size_t mult;   // columns off the hyperplane

  bool operator==(const Facet&) const = default;
};

// One facet per distinct hyperplane spanned by columns, sorted by normal.
std::vector<Facet> facets(const Config& c);

// Facet hyperplane spanned by a rank-(n-1) column set.
Facet facet_of(const Config& c, ColumnSet spanning);

// Order used for I-internal activity: the members of i come last.
ColumnOrder internal_order(const Config& c, ColumnSet i);

// Bases B with no element b in i for which b is the maximum of X outside
// span(B \ b), with the order putting i last. i = {} gives all bases; i a
// basis gives the internal bases for that order.
std::vector<ColumnSet> internal_bases(const Config& c, ColumnSet i);

// Internal bases under an explicit order (no restriction on the active
// element).
std::vector<ColumnSet> internal_bases_all(const Config& c, const ColumnOrder& order);

// Family of independent sets, sorted by bitmask.
struct SemiExternalFamily {
  std::vector<ColumnSet> members;

  bool contains(ColumnSet s) const;
  std::size_t size() const { return members.size(); }
};

// Smallest closed family containing the seeds and all bases.
SemiExternalFamily semiexternal_close(const Config& c, const std::vector<ColumnSet>& seeds);
// First independent set violating closure, if any.
std::optional<ColumnSet> closure_violation(const Config& c, const std::vector<ColumnSet>& family);
// Validates an explicitly listed family; throws kFamilyNotClosed.
SemiExternalFamily semiexternal_explicit(const Config& c, std::vector<ColumnSet> family);

struct ConditionResult {
  bool holds = true;
  std::optional<ColumnSet> witness;
};

// Independent sets I' of rank n-1 whose span is a facet containing i.
std::vector<ColumnSet> facet_extensions(const Config& c, ColumnSet i);

// For every non-basis independent I: facet_extensions(I) inside fam implies
// I in fam. Reports the first violating I in bitmask order.
ConditionResult extension_condition(const Config& c, const SemiExternalFamily& fam);

// X' = X followed by the columns of B0. Throws kMissingB0.
Config extended_config(const Config& c);

// Greedy completion of an independent set of X to a basis of X' using B0 in
// its listed order. Result indexes X' (B0 members at N..N+n-1).
ColumnSet extend_basis(const Config& c, ColumnSet i);

// Configuration with the columns in s removed (order kept).
Config delete_columns(const Config& c, ColumnSet s);
// Configuration with extra columns appended (X followed by the given columns
// of X, as a multiset union).
Config append_columns(const Config& c, ColumnSet s);
// Vectors of the columns in s, in index order.
std::vector<Vec> vectors_of(const Config& c, ColumnSet s);

}  // namespace zonoforge
