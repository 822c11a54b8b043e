#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "zonoforge/cli.hpp"
#include "zonoforge/config.hpp"
#include "zonoforge/graded.hpp"
#include "zonoforge/polynomial.hpp"

namespace zonoforge::testing {

inline Config from_int_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) {
    Vec v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return config_from_matrix(r);
}

inline std::vector<Vec> identity_vectors(std::size_t n) {
  std::vector<Vec> out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline Config with_b0(Config c) {
  c.b0 = identity_vectors(c.n);
  return c;
}

// The four vectors e1, e2, e3, e1+e2+e3.
inline Config cube_diagonal() {
  return with_b0(from_int_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
}

inline Config triangle() { return with_b0(from_int_rows({{1, 0, 1}, {0, 1, 1}})); }

inline std::string config_dir() { return ZONOFORGE_CONFIG_DIR; }
inline std::string golden_dir() { return ZONOFORGE_GOLDEN_DIR; }

inline cli::ConfigDocument load_config(const std::string& name) {
  return cli::load_document(config_dir() + "/" + name);
}

// Bundled documents, sorted by file name.
inline std::vector<std::string> bundled_configs() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(config_dir()))
    if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Determinant by permutation expansion.
inline Rat leibniz_det(const std::vector<Vec>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const std::vector<Vec>& vectors, std::size_t dim) {
  const std::size_t m = vectors.size();
  for (std::size_t k = std::min(m, dim); k > 0; --k) {
    for (std::uint32_t rs = 0; rs < (1u << m); ++rs) {
      if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
      for (std::uint32_t cs = 0; cs < (1u << dim); ++cs) {
        if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
        std::vector<Vec> sub;
        for (std::size_t i = 0; i < m; ++i) {
          if (!(rs >> i & 1u)) continue;
          Vec row;
          for (std::size_t j = 0; j < dim; ++j)
            if (cs >> j & 1u) row.push_back(vectors[i][j]);
          sub.push_back(row);
        }
        if (leibniz_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

inline std::size_t oracle_rank(const Config& c, ColumnSet s) { return minor_rank(vectors_of(c, s), c.n); }

// Independent subsets by direct rank test over all subsets.
inline std::vector<ColumnSet> oracle_independents(const Config& c) {
  std::vector<ColumnSet> out;
  for (std::uint32_t m = 0; m < (1u << c.size()); ++m) {
    const ColumnSet s(m);
    if (oracle_rank(c, s) == s.size()) out.push_back(s);
  }
  return out;
}

inline std::vector<ColumnSet> oracle_bases(const Config& c) {
  std::vector<ColumnSet> out;
  for (auto s : oracle_independents(c))
    if (s.size() == c.n) out.push_back(s);
  return out;
}

// val(Y) in index order, straight from the definition.
inline std::size_t oracle_valuation(const Config& c, ColumnSet y) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (y.contains(x)) continue;
    ColumnSet before;
    for (auto e : y.indices())
      if (e < x) before = before.with(e);
    std::vector<Vec> vs = vectors_of(c, before);
    const std::size_t r0 = minor_rank(vs, c.n);
    vs.push_back(c.columns[x]);
    if (minor_rank(vs, c.n) > r0) ++count;
  }
  return count;
}

inline std::vector<std::size_t> oracle_histogram(const Config& c, const std::vector<ColumnSet>& fam) {
  std::vector<std::size_t> h;
  for (auto s : fam) {
    const std::size_t v = oracle_valuation(c, s);
    if (h.size() <= v) h.resize(v + 1);
    ++h[v];
  }
  return h;
}

// Hilbert function of the kernel of an ideal, degree by degree: the
// nullspace of the map q -> (g(D) q)_g over the monomials of degree d, with
// every entry produced by differentiating one monomial at a time.
inline std::size_t oracle_kernel_dim(const IdealGens& ideal, unsigned d) {
  const auto mons = monomials(ideal.nvars, d);
  std::vector<Vec> cols;
  for (const auto& m : mons) {
    Vec col;
    for (const auto& g : ideal.gens) {
      if (g.degree() > d) continue;
      const HPoly img = diff_apply(g, HPoly::monomial(m));
      for (const auto& t : monomials(ideal.nvars, d - g.degree())) col.push_back(img.coeff(t));
    }
    cols.push_back(col);
  }
  if (cols.empty() || cols[0].empty()) return mons.size();
  Mat a(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) a(i, j) = cols[j][i];
  return mons.size() - rank(a);
}

inline std::vector<std::size_t> oracle_kernel_hilbert(const IdealGens& ideal, unsigned dmax) {
  std::vector<std::size_t> h;
  for (unsigned d = 0; d <= dmax; ++d) h.push_back(oracle_kernel_dim(ideal, d));
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

// Random full-rank configuration with small integer entries.
inline Config random_config(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<int> entry(-1, 2);
  while (true) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < count; ++j) {
      Vec v(n);
      do {
        for (auto& x : v) x = entry(rng);
      } while (is_zero(v));
      cols.push_back(v);
    }
    if (minor_rank(cols, n) < n) continue;
    Config c;
    c.n = n;
    c.columns = cols;
    c.b0 = identity_vectors(n);
    return validate(c);
  }
}

// Configuration with columns permuted: column perm[j] of the result is
// column j of c.
inline Config permute_columns(const Config& c, const std::vector<std::size_t>& perm) {
  Config out = c;
  for (std::size_t j = 0; j < c.size(); ++j) out.columns[perm[j]] = c.columns[j];
  out.lambda.reset();
  return validate(out);
}

inline ColumnSet permute_set(ColumnSet s, const std::vector<std::size_t>& perm) {
  ColumnSet out;
  for (auto j : s.indices()) out = out.with(perm[j]);
  return out;
}

}  // namespace zonoforge::testing
