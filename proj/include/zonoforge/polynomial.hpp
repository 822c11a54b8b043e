#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zonoforge/config.hpp"
#include "zonoforge/rational.hpp"

namespace zonoforge {

using MultiIndex = std::vector<unsigned>;

unsigned degree_of(const MultiIndex& a);

// Graded-lex with t1 > t2 > ... : within one degree, lexicographically larger
// exponent vectors come first.
struct GrlexBefore {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All degree-d monomials in n variables, in graded-lex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const MultiIndex& operator[](std::size_t k) const { return monos_[k]; }
  const std::vector<MultiIndex>& all() const { return monos_; }
  std::size_t index_of(const MultiIndex& a) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<MultiIndex> monos_;
  std::map<MultiIndex, std::size_t> index_;
};

// Shared immutable basis for (nvars, degree); safe to call from any thread.
const MonomialBasis& monomial_basis(std::size_t nvars, unsigned degree);
std::vector<MultiIndex> monomials(std::size_t nvars, unsigned degree);
std::size_t monomial_count(std::size_t nvars, unsigned degree);

// alpha! = prod alpha_i!
Rat factorial(const MultiIndex& a);

// Homogeneous polynomial with exact coefficients. The zero polynomial keeps
// the degree it was created with.
class HPoly {
 public:
  using Terms = std::map<MultiIndex, Rat, GrlexBefore>;

  HPoly() = default;
  HPoly(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}

  static HPoly constant(std::size_t nvars, const Rat& c);
  static HPoly monomial(const MultiIndex& a, const Rat& c = 1);
  static HPoly linear_form(const Vec& v);
  // Coefficients listed over monomial_basis(nvars, degree).
  static HPoly from_coeffs(std::size_t nvars, unsigned degree, const Vec& coeffs);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rat coeff(const MultiIndex& a) const;

  // Dense coefficients over monomial_basis(nvars, degree).
  Vec coeffs() const;
  Rat evaluate(const Vec& point) const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const Rat& s);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(HPoly a, const Rat& s) { return a *= s; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);

  bool operator==(const HPoly& o) const;

  // Canonical rendering, e.g. "t1^2*t2 - 1/2*t3^3"; zero renders as "0".
  std::string str() const;

 private:
  void add_term(const MultiIndex& a, const Rat& c);

  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  Terms terms_;
};

HPoly power(const HPoly& p, unsigned k);

// prod_{v} p_v with p_v(t) = v . t; the empty product is 1.
// Throws Error(kZeroVector).
HPoly linform_product(std::size_t nvars, const std::vector<Vec>& vectors);
HPoly linform_product(const Config& c, ColumnSet s);

// p(D) applied to q. Homogeneous of degree deg q - deg p; zero polynomial of
// degree 0 when deg p > deg q.
HPoly diff_apply(const HPoly& p, const HPoly& q);

// <p, q> = (p(D) q)(0).
Rat pair(const HPoly& p, const HPoly& q);

// Spanning set of the degree-j polynomials on the orthogonal complement of
// span(s_basis): all degree-j monomials in the linear forms of a nullspace
// basis of span(s_basis).
std::vector<HPoly> perp_space_gens(std::size_t nvars, const std::vector<Vec>& s_basis, unsigned j);

}  // namespace zonoforge
