#include "zonoforge/polynomial.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "zonoforge/error.hpp"

namespace zonoforge {

unsigned degree_of(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

bool GrlexBefore::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate(std::size_t var, unsigned left, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var + 1, left - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    if (degree == 0) monos_.push_back({});
  } else {
    MultiIndex cur(nvars, 0);
    enumerate(0, degree, cur, monos_);
  }
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], k);
}

std::size_t MonomialBasis::index_of(const MultiIndex& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw Error(ErrorCode::kDimensionMismatch, "monomial outside basis");
  return it->second;
}

const MonomialBasis& monomial_basis(std::size_t nvars, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_unique<MonomialBasis>(nvars, degree);
  return *slot;
}

std::vector<MultiIndex> monomials(std::size_t nvars, unsigned degree) {
  return monomial_basis(nvars, degree).all();
}

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), degree + nvars - 1, nvars - 1);
  return b.get_ui();
}

Rat factorial(const MultiIndex& a) {
  mpz_class out = 1;
  for (auto e : a) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), e);
    out *= f;
  }
  return Rat(out);
}

HPoly HPoly::constant(std::size_t nvars, const Rat& c) {
  HPoly p(nvars, 0);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

HPoly HPoly::monomial(const MultiIndex& a, const Rat& c) {
  HPoly p(a.size(), degree_of(a));
  p.add_term(a, c);
  return p;
}

HPoly HPoly::linear_form(const Vec& v) {
  HPoly p(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    MultiIndex a(v.size(), 0);
    a[i] = 1;
    p.add_term(a, v[i]);
  }
  return p;
}

HPoly HPoly::from_coeffs(std::size_t nvars, unsigned degree, const Vec& coeffs) {
  const auto& basis = monomial_basis(nvars, degree);
  if (coeffs.size() != basis.size()) throw Error(ErrorCode::kDimensionMismatch, "coefficient vector length");
  HPoly p(nvars, degree);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(basis[k], coeffs[k]);
  return p;
}

void HPoly::add_term(const MultiIndex& a, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat HPoly::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rat(0) : it->second;
}

Vec HPoly::coeffs() const {
  const auto& basis = monomial_basis(nvars_, degree_);
  Vec out(basis.size());
  for (const auto& [a, c] : terms_) out[basis.index_of(a)] = c;
  return out;
}

Rat HPoly::evaluate(const Vec& point) const {
  Rat s = 0;
  for (const auto& [a, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (unsigned e = 0; e < a[i]; ++e) t *= point[i];
    s += t;
  }
  return s;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
    nvars_ = o.nvars_;
  } else if (o.degree_ != degree_) {
    throw Error(ErrorCode::kDimensionMismatch, "adding polynomials of different degree");
  }
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += o * Rat(-1); }

HPoly& HPoly::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly out(a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiIndex e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool HPoly::operator==(const HPoly& o) const {
  if (is_zero() && o.is_zero()) return nvars_ == o.nvars_;
  return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string HPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

HPoly power(const HPoly& p, unsigned k) {
  HPoly out = HPoly::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

HPoly linform_product(std::size_t nvars, const std::vector<Vec>& vectors) {
  HPoly out = HPoly::constant(nvars, 1);
  for (const auto& v : vectors) {
    if (v.size() != nvars) throw Error(ErrorCode::kDimensionMismatch, "linear form length");
    if (is_zero(v)) throw Error(ErrorCode::kZeroVector, "linear form of the zero vector");
    out = out * HPoly::linear_form(v);
  }
  return out;
}

HPoly linform_product(const Config& c, ColumnSet s) { return linform_product(c.n, vectors_of(c, s)); }

HPoly diff_apply(const HPoly& p, const HPoly& q) {
  if (p.degree() > q.degree()) return HPoly(q.nvars(), 0);
  HPoly acc(q.nvars(), q.degree() - p.degree());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      bool divides = true;
      for (std::size_t i = 0; i < a.size(); ++i) divides = divides && a[i] <= b[i];
      if (!divides) continue;
      MultiIndex rest(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) rest[i] = b[i] - a[i];
      // d^a t^b = b!/(b-a)! t^(b-a)
      acc += HPoly::monomial(rest, ca * cb * factorial(b) / factorial(rest));
    }
  }
  return acc;
}

Rat pair(const HPoly& p, const HPoly& q) {
  if (p.is_zero() || q.is_zero() || p.degree() != q.degree()) return 0;
  Rat s = 0;
  for (const auto& [a, c] : p.terms()) {
    const Rat d = q.coeff(a);
    if (sgn(d) != 0) s += c * d * factorial(a);
  }
  return s;
}

std::vector<HPoly> perp_space_gens(std::size_t nvars, const std::vector<Vec>& s_basis, unsigned j) {
  Mat s(0, nvars);
  for (const auto& v : s_basis) s.append_row(v);
  const Mat u = nullspace(s);
  std::vector<HPoly> forms;
  for (std::size_t r = 0; r < u.rows(); ++r) forms.push_back(HPoly::linear_form(u.row_vec(r)));
  std::vector<HPoly> out;
  if (forms.empty()) {
    if (j == 0) out.push_back(HPoly::constant(nvars, 1));
    return out;
  }
  for (const auto& e : monomials(forms.size(), j)) {
    HPoly g = HPoly::constant(nvars, 1);
    for (std::size_t k = 0; k < forms.size(); ++k) g = g * power(forms[k], e[k]);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace zonoforge
