#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "zonoforge/config.hpp"
#include "zonoforge/graded.hpp"

namespace zonoforge {

using PointSet = std::vector<Vec>;

// The affine arrangement {x : <x_j, x> = lambda_j} with one vertex per basis.
struct ArrangementInstance {
  Config config;
  Vec lambda;
  // Seed used for sampling, absent when lambda was supplied.
  std::optional<std::uint64_t> seed;
  // Number of resampling rounds before a simple lambda was found.
  unsigned attempts = 0;
  std::map<ColumnSet, Vec> vertices;
  bool simple = false;
};

// First subset of at most n+1 hyperplanes that meets in a point set of the
// wrong codimension, or nothing when the arrangement is simple.
std::optional<ColumnSet> simplicity_violation(const Config& c, const Vec& lambda);

// Deterministic integer offsets; offset j is drawn from [1, 1000 * N * (j+1)].
Vec sample_offsets(std::size_t count, std::mt19937_64& rng);

// Uses lambda when given (throws kNotSimple with the witness subset if it is
// not simple), otherwise samples from seed (kSamplingExhausted after 100
// rounds).
ArrangementInstance make_arrangement(const Config& c, const std::optional<Vec>& lambda,
                                     std::uint64_t seed = 0);

// Vertices of the given bases, sorted. Throws kUnknownBasis.
PointSet vertex_set(const ArrangementInstance& a, const std::vector<ColumnSet>& family);

// Least space of a finite point set in nvars variables. The Taylor matrix is
// truncated at the first degree where it reaches full row rank.
GradedSubspace least_space(unsigned nvars, const PointSet& points);
// Same map with the Taylor matrix truncated at a fixed degree. Throws
// kNoStabilization when the truncated rows are not of full rank.
GradedSubspace least_space_truncated(unsigned nvars, const PointSet& points, unsigned truncation);

struct RestrictionReport {
  Mat evaluation;
  bool invertible = false;
};

// Evaluates a basis of s at the points. Throws kDimensionMismatch unless
// dim s == #points.
RestrictionReport restriction_certificate(const PointSet& points, const GradedSubspace& s);

bool is_unimodular(const Config& c);

// Some w in [0,1]^N with Xw = p, found by an exact phase-one simplex.
std::optional<Vec> zonotope_witness(const Config& c, const Vec& p);

struct LatticeResult {
  bool unimodular = false;
  std::optional<PointSet> points;
};

LatticeResult zonotope_lattice(const Config& c);

}  // namespace zonoforge
