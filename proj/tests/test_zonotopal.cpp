#include <gtest/gtest.h>

#include "support.hpp"
#include "zonoforge/error.hpp"
#include "zonoforge/zonotopal.hpp"

namespace zonoforge {
namespace {

using testing::cube_diagonal;
using testing::from_int_rows;

using H = std::vector<std::size_t>;

HPoly lf(std::initializer_list<long> v) {
  Vec x;
  for (long e : v) x.emplace_back(e);
  return HPoly::linear_form(x);
}

SemiExternalFamily first_family(const Config& c) {
  return semiexternal_close(c, {ColumnSet::of({0, 1}), ColumnSet::of({0, 2}), ColumnSet::of({0, 3})});
}

SemiExternalFamily second_family(const Config& c) { return semiexternal_close(c, {ColumnSet::of({0})}); }

TEST(Central, CubeDiagonal) {
  const auto b = central(cube_diagonal());
  EXPECT_EQ(b.p_space.dim(), 4u);
  EXPECT_EQ(b.hilbert_space.values, (H{1, 3}));
  EXPECT_EQ(b.q_basis.size(), 4u);
  EXPECT_EQ(b.i_ideal.gens.size(), 6u);
  EXPECT_EQ(b.j_sets.size(), 6u);
  for (auto s : b.j_sets) EXPECT_EQ(s.size(), 2u);
}

TEST(Central, IdentityIsConstants) {
  const auto b = central(from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(b.hilbert_space.values, (H{1}));
}

TEST(Central, RepeatedVector) {
  const Config c = from_int_rows({{1, 1, 0}, {0, 0, 1}});
  const auto b = central(c);
  ASSERT_EQ(b.q_basis.size(), 2u);
  EXPECT_EQ(b.q_basis[0].poly.degree(), 0u);
  EXPECT_EQ(b.q_basis[1].poly.degree(), 1u);
  EXPECT_EQ(b.q_basis[1].poly, lf({1, 0}));
  EXPECT_EQ(b.hilbert_space.values, (H{1, 1}));
}

TEST(External, CubeDiagonal) {
  const auto b = external(cube_diagonal());
  EXPECT_EQ(b.p_space.dim(), 15u);
  EXPECT_EQ(b.hilbert_space.values, (H{1, 3, 6, 4, 1}));
  EXPECT_EQ(b.kind, BundleKind::kExternal);
}

TEST(SemiExternal, FirstFamilyMatchesListedGenerators) {
  const Config c = cube_diagonal();
  const auto b = semi_external(c, first_family(c));
  EXPECT_EQ(b.p_space.dim(), 7u);
  EXPECT_EQ(b.hilbert_space.values, (H{1, 3, 3}));
  const IdealGens listed{3,
                         {power(lf({0, 0, 1}), 3), power(lf({0, 1, 0}), 3), power(lf({0, 1, -1}), 3),
                          power(lf({1, 0, 0}), 2), power(lf({1, 0, -1}), 2), power(lf({1, -1, 0}), 2),
                          power(lf({0, 0, 1}), 2) * lf({0, 1, 0})}};
  EXPECT_TRUE(compare_ideals(b.i_ideal, listed, stabilization_cap(c)).equal);
  const auto listed_span = GradedSubspace::from_spanning(
      3, {HPoly::constant(3, 1), lf({1, 0, 0}), lf({0, 1, 0}), lf({0, 0, 1}), lf({0, 1, 0}) * lf({0, 0, 1}),
          lf({0, 0, 1}) * lf({1, 1, 1}), lf({0, 1, 0}) * lf({1, 1, 1})});
  EXPECT_EQ(b.p_space, listed_span);
}

TEST(SemiExternal, SecondFamilyMatchesListedGenerators) {
  const Config c = cube_diagonal();
  const auto b = semi_external(c, second_family(c));
  EXPECT_EQ(b.p_space.dim(), 8u);
  EXPECT_EQ(b.hilbert_space.values, (H{1, 3, 3, 1}));
  const IdealGens listed{3,
                         {power(lf({0, 0, 1}), 3), power(lf({0, 1, 0}), 3), power(lf({0, 1, -1}), 3),
                          power(lf({1, 0, 0}), 2), power(lf({1, 0, -1}), 2), power(lf({1, -1, 0}), 2)}};
  EXPECT_TRUE(compare_ideals(b.i_ideal, listed, stabilization_cap(c)).equal);
  ASSERT_TRUE(b.ieps_ideal);
  EXPECT_TRUE(compare_ideals(b.i_ideal, *b.ieps_ideal, stabilization_cap(c)).equal);
}

TEST(SemiExternal, IepsContainedWithoutTheCondition) {
  const Config c = cube_diagonal();
  const auto b = semi_external(c, first_family(c));
  ASSERT_TRUE(b.ieps_ideal);
  EXPECT_TRUE(ideal_contains(b.i_ideal, *b.ieps_ideal));
}

TEST(SemiExternal, FullFamilyIsExternal) {
  const Config c = cube_diagonal();
  const auto b = semi_external(c, SemiExternalFamily{independents(c)});
  EXPECT_EQ(b.p_space, external(c).p_space);
  const auto bases_only = semi_external(c, SemiExternalFamily{bases(c)});
  EXPECT_EQ(bases_only.p_space, central(c).p_space);
}

TEST(SemiExternal, Errors) {
  Config c = cube_diagonal();
  EXPECT_THROW(semi_external(c, SemiExternalFamily{{ColumnSet::of({0})}}), Error);
  c.b0.reset();
  try {
    semi_external(c, SemiExternalFamily{bases(c)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingB0);
  }
}

TEST(SemiInternal, CubeDiagonal) {
  const Config c = cube_diagonal();
  const auto all3 = semi_internal(c, ColumnSet::of({0, 1, 2}));
  EXPECT_EQ(all3.p_space.dim(), 1u);
  EXPECT_EQ(all3.hilbert_space.values, (H{1}));
  const auto x4 = semi_internal(c, ColumnSet::of({3}));
  EXPECT_EQ(x4.family, (std::vector<ColumnSet>{ColumnSet::of({0, 1, 2})}));
  EXPECT_EQ(x4.p_space, central_space(delete_columns(c, ColumnSet::of({3}))));
  EXPECT_TRUE(x4.q_basis.empty());
}

TEST(SemiInternal, EmptySetReproducesCentral) {
  const Config c = cube_diagonal();
  const auto s = semi_internal(c, ColumnSet());
  const auto b = central(c);
  EXPECT_EQ(s.p_space, b.p_space);
  EXPECT_EQ(s.family, b.family);
  EXPECT_TRUE(compare_ideals(s.i_ideal, b.i_ideal, stabilization_cap(c)).equal);
  EXPECT_TRUE(compare_ideals(s.j_ideal, b.j_ideal, stabilization_cap(c)).equal);
}

TEST(SemiInternal, Errors) {
  const Config c = from_int_rows({{1, 0, 1}, {0, 1, 0}});
  try {
    semi_internal(c, ColumnSet::of({1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kColoopInI);
  }
  try {
    semi_internal(c, ColumnSet::of({0, 2}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIndependent);
  }
}

TEST(HittingSets, SmallFamilies) {
  EXPECT_EQ(minimal_hitting_sets({}), (std::vector<ColumnSet>{ColumnSet()}));
  const auto h = minimal_hitting_sets({ColumnSet::of({0, 1}), ColumnSet::of({1, 2})});
  EXPECT_EQ(h, (std::vector<ColumnSet>{ColumnSet::of({1}), ColumnSet::of({0, 2})}));
}

TEST(HittingSets, MatchBruteForce) {
  const std::vector<ColumnSet> fam{ColumnSet::of({0, 1, 2}), ColumnSet::of({1, 3}), ColumnSet::of({2, 3, 4}),
                                   ColumnSet::of({0, 4})};
  std::vector<ColumnSet> hits;
  for (std::uint32_t m = 0; m < 32; ++m) {
    const ColumnSet s(m);
    if (std::all_of(fam.begin(), fam.end(), [&](ColumnSet f) { return f.intersects(s); })) hits.push_back(s);
  }
  std::vector<ColumnSet> minimal;
  for (auto s : hits) {
    bool ok = true;
    for (auto t : hits)
      if (t != s && t.subset_of(s)) ok = false;
    if (ok) minimal.push_back(s);
  }
  EXPECT_EQ(minimal_hitting_sets(fam), minimal);
}

TEST(Pairing, GramInvertibleOnCubeDiagonal) {
  const Config c = cube_diagonal();
  for (const auto& b : {central(c), semi_external(c, first_family(c)), semi_external(c, second_family(c))}) {
    std::vector<HPoly> q;
    for (const auto& e : b.q_basis) q.push_back(e.poly);
    EXPECT_TRUE(gram_invertible(pairing_gram(q, d_space(c, b).basis())));
  }
  const auto s = semi_internal(c, ColumnSet::of({3}));
  EXPECT_TRUE(gram_invertible(pairing_gram(s.p_space.basis(), d_space(c, s).basis())));
}

TEST(Decomposition, SecondFamilyDecomposes) {
  const Config c = cube_diagonal();
  const auto fam = second_family(c);
  EXPECT_EQ(thm28_decomposition(c, fam), semi_external(c, fam).p_space);
  try {
    thm28_decomposition(c, first_family(c));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionFails);
  }
}

TEST(Decomposition, ExtremeFamilies) {
  const Config c = cube_diagonal();
  EXPECT_EQ(thm28_decomposition(c, SemiExternalFamily{bases(c)}), central(c).p_space);
  EXPECT_EQ(thm28_decomposition(c, SemiExternalFamily{independents(c)}), external(c).p_space);
  EXPECT_EQ(minimal_members(SemiExternalFamily{independents(c)}), (std::vector<ColumnSet>{ColumnSet()}));
  EXPECT_EQ(completions(c, ColumnSet()), bases(c));
}

TEST(DeletionIdentity, SmallSetsOnCubeDiagonal) {
  const Config c = cube_diagonal();
  for (auto i : {ColumnSet(), ColumnSet::of({3}), ColumnSet::of({0, 3}), ColumnSet::of({1, 2})}) {
    const auto r = remark37_check(c, i, IdentityCheckMode::kAssert);
    EXPECT_TRUE(r.applicable);
    EXPECT_TRUE(r.equal) << i.str();
  }
  EXPECT_THROW(remark37_check(c, ColumnSet::of({0, 1, 2}), IdentityCheckMode::kAssert), Error);
  EXPECT_NO_THROW(remark37_check(c, ColumnSet::of({0, 1, 2}), IdentityCheckMode::kExplore));
}

TEST(DeletionIdentity, SkippedWithColoops) {
  const auto r = remark37_check(from_int_rows({{1, 0, 1}, {0, 1, 0}}), ColumnSet::of({0}), IdentityCheckMode::kAssert);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(CodimensionCounts, Counts) {
  auto check = [](const Config& c, std::size_t central_n, std::size_t external_n, std::size_t internal_n) {
    const auto t = theorem1_counts(c);
    EXPECT_EQ(t.central.codim, central_n);
    EXPECT_EQ(t.external.codim, external_n);
    EXPECT_EQ(t.internal.codim, internal_n);
    EXPECT_TRUE(t.ok());
  };
  check(cube_diagonal(), 4, 15, 1);
  check(from_int_rows({{1, 0}, {0, 1}}), 1, 4, 0);
  check(from_int_rows({{1, 0, 1}, {0, 1, 1}}), 3, 7, 1);
}

TEST(CodimensionCounts, MatroidSidesMatchOracle) {
  for (const Config& c : {cube_diagonal(), testing::triangle()}) {
    const auto t = theorem1_counts(c);
    EXPECT_EQ(t.central.count, testing::oracle_bases(c).size());
    EXPECT_EQ(t.external.count, testing::oracle_independents(c).size());
  }
}

TEST(Bundles, KindNames) {
  for (auto k : {BundleKind::kCentral, BundleKind::kExternal, BundleKind::kSemiExternal, BundleKind::kSemiInternal})
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_FALSE(parse_kind("internal"));
}

}  // namespace
}  // namespace zonoforge
