#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zonoforge/matrix.hpp"
#include "zonoforge/polynomial.hpp"

namespace zonoforge {

// Dimensions by degree, trailing zeros trimmed.
struct HilbertFn {
  std::vector<std::size_t> values;

  static HilbertFn of(std::vector<std::size_t> values);
  std::size_t total() const;
  std::size_t at(unsigned d) const { return d < values.size() ? values[d] : 0; }
  bool operator==(const HilbertFn&) const = default;
};

// Homogeneous subspace of the polynomial ring, stored per degree as the
// canonical RREF of coefficient rows over monomial_basis(nvars, d). Equality
// of subspaces is equality of these matrices.
class GradedSubspace {
 public:
  explicit GradedSubspace(std::size_t nvars = 0) : nvars_(nvars) {}

  static GradedSubspace from_spanning(std::size_t nvars, const std::vector<HPoly>& polys);
  // Rows of each matrix span the component; canonicalized here.
  static GradedSubspace from_components(std::size_t nvars, const std::map<unsigned, Mat>& comps);

  std::size_t nvars() const { return nvars_; }
  std::size_t dim() const;
  std::size_t dim_at(unsigned d) const;
  std::optional<unsigned> top_degree() const;
  HilbertFn hilbert() const;

  // Component at degree d; a 0-row matrix when absent.
  Mat component(unsigned d) const;
  const std::map<unsigned, Mat>& components() const { return comps_; }

  std::vector<HPoly> basis_at(unsigned d) const;
  // Canonical basis, degree by degree.
  std::vector<HPoly> basis() const;
  bool contains(const HPoly& p) const;

  bool operator==(const GradedSubspace& o) const = default;

 private:
  std::size_t nvars_;
  std::map<unsigned, Mat> comps_;
};

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
bool is_subspace(const GradedSubspace& a, const GradedSubspace& b);

// Finite homogeneous generator list of a graded ideal.
struct IdealGens {
  std::size_t nvars = 0;
  std::vector<HPoly> gens;
};

// Degreewise realization of the ideal generated by a generator list. Each
// component is derived from the previous one (multiplication by the
// variables) plus the generators of that degree, and cached.
class IdealTower {
 public:
  explicit IdealTower(IdealGens gens);

  const Mat& component(unsigned d);
  std::size_t dim_at(unsigned d) { return component(d).rows(); }
  bool full_at(unsigned d);
  const IdealGens& gens() const { return gens_; }

 private:
  IdealGens gens_;
  std::vector<Mat> comps_;
};

// RREF basis of the degree-d component of the ideal.
Mat ideal_component(const IdealGens& gens, unsigned d);

// {q : g(D) q = 0 for every generator g}, degrees 0..dmax. Stops early once a
// component vanishes (the kernel is closed under differentiation).
GradedSubspace kernel(const IdealGens& gens, unsigned dmax);
// Whole kernel, computed until a component vanishes; throws
// Error(kNoStabilization) when none does by `cap`.
GradedSubspace full_kernel(const IdealGens& gens, unsigned cap);

// dim of the quotient per degree, up to the first zero. Throws
// Error(kNoStabilization) when no zero occurs by `cap`.
HilbertFn hilbert_quotient(const IdealGens& gens, unsigned cap);

struct DirectSumRow {
  unsigned degree = 0;
  std::size_t dim_space = 0;
  std::size_t dim_ideal = 0;
  std::size_t dim_total = 0;
  std::size_t dim_meet = 0;
  bool ok = false;
};

struct DirectSumReport {
  std::vector<DirectSumRow> rows;
  bool ok = true;
};

// Checks space (+) ideal = Pi in every degree 0..dmax: complementary
// dimensions and trivial intersection. dmax defaults to top degree + 1.
DirectSumReport direct_sum_certificate(const GradedSubspace& space, const IdealGens& ideal,
                                       std::optional<unsigned> dmax = std::nullopt);

struct IdealComparison {
  bool equal = true;
  std::optional<unsigned> first_difference;
  unsigned checked_through = 0;
  std::vector<std::size_t> dims_a;
  std::vector<std::size_t> dims_b;
};

// Compares two ideals degree by degree until both components are full.
IdealComparison compare_ideals(const IdealGens& a, const IdealGens& b, unsigned cap);

// Every generator of `small` lies in the ideal generated by `big`.
bool ideal_contains(const IdealGens& big, const IdealGens& small);

}  // namespace zonoforge
