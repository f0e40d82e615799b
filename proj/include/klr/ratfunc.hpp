// Multivariate gcd and rational functions over Q.
//
// The gcd is a recursive primitive polynomial remainder sequence: pick the
// highest-index variable present, split off contents in the remaining
// variables, and run pseudo-division on primitive parts.

#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"

namespace klr {

namespace detail {

inline int top_variable(const MultiPoly& p) {
  for (int k = p.nvars() - 1; k >= 0; --k)
    if (p.degree_in(k) > 0) return k;
  return -1;
}

/// Coefficients of p as a polynomial in x_v; entry d holds the x_v^d part with x_v removed.
inline std::vector<MultiPoly> split(const MultiPoly& p, int v) {
  std::vector<MultiPoly> out(static_cast<size_t>(std::max(p.degree_in(v), 0) + 1), MultiPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    int d = mm[v];
    mm[v] = 0;
    out[static_cast<size_t>(d)].add_term(mm, c);
  }
  return out;
}

inline MultiPoly join(const std::vector<MultiPoly>& cs, int v, int nvars) {
  MultiPoly r(nvars);
  for (size_t d = 0; d < cs.size(); ++d) r += cs[d].mul_monomial(Monomial::var(v, static_cast<int>(d)));
  return r;
}

inline MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_coeff());
}

/// p scaled to integer coefficients with gcd 1.
inline MultiPoly numeric_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  return p * s;
}

}  // namespace detail

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

namespace detail {

inline MultiPoly content_in(const MultiPoly& p, int v) {
  auto cs = split(p, v);
  MultiPoly g(p.nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline std::vector<MultiPoly> trim(std::vector<MultiPoly> v) {
  while (v.size() > 1 && v.back().is_zero()) v.pop_back();
  return v;
}

/// Sparse pseudo-remainder of A by B in x_v.
inline std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> A, const std::vector<MultiPoly>& B) {
  A = trim(std::move(A));
  const MultiPoly& lb = B.back();
  size_t db = B.size() - 1;
  while (!(A.size() == 1 && A[0].is_zero()) && A.size() - 1 >= db) {
    MultiPoly la = A.back();
    size_t shift = A.size() - 1 - db;
    for (auto& c : A) c = c * lb;
    for (size_t d = 0; d < B.size(); ++d) A[d + shift] -= la * B[d];
    A = trim(std::move(A));
    if (A.size() == 1 && A[0].is_zero()) break;
    if (A.size() - 1 < db) break;
  }
  return A;
}

}  // namespace detail

/// Monic (grlex leading coefficient 1) gcd; gcd(0, 0) = 0.
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  int n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return detail::make_monic(b);
  if (b.is_zero()) return detail::make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::one(n);
  if (a.size() == 1 && b.size() == 1) {
    Monomial g;
    const Monomial& ma = a.leading_monomial();
    const Monomial& mb = b.leading_monomial();
    for (int k = 0; k < n; ++k) g[k] = static_cast<int16_t>(std::min(ma[k], mb[k]));
    return MultiPoly(n, g);
  }
  int va = detail::top_variable(a), vb = detail::top_variable(b);
  int v = std::max(va, vb);
  if (a.degree_in(v) == 0) return gcd(a, detail::content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(b, detail::content_in(a, v));

  MultiPoly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  MultiPoly c = gcd(ca, cb);
  auto A = detail::split(detail::numeric_primitive(exact_div(a, ca)), v);
  auto B = detail::split(detail::numeric_primitive(exact_div(b, cb)), v);
  if (A.size() < B.size()) std::swap(A, B);
  while (true) {
    auto R = detail::pseudo_rem(A, B);
    if (R.size() == 1 && R[0].is_zero()) break;
    MultiPoly r = detail::join(R, v, n);
    if (r.degree_in(v) == 0) {
      B = {MultiPoly::one(n)};
      break;
    }
    MultiPoly pr = detail::numeric_primitive(exact_div(r, detail::content_in(r, v)));
    A = std::move(B);
    B = detail::split(pr, v);
  }
  MultiPoly g = detail::join(B, v, n);
  return detail::make_monic(g * c);
}

/// Quotient num/den with coprime parts and a denominator whose leading coefficient is 1.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(MultiPoly::one(0)) {}
  explicit RatFunc(int nvars) : num_(nvars), den_(MultiPoly::one(nvars)) {}
  RatFunc(const MultiPoly& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(MultiPoly::one(p.nvars())) {}
  RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return std::max(num_.nvars(), den_.nvars()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
      return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MultiPoly g = gcd(a.den_, b.den_);
    MultiPoly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    int n = std::max(a.nvars(), b.nvars());
    if (a.is_zero() || b.is_zero()) return RatFunc(n);
    // Cross-cancel before multiplying.
    MultiPoly g1 = b.den_.is_constant() || a.num_.is_constant() ? MultiPoly::one(n) : gcd(a.num_, b.den_);
    MultiPoly g2 = a.den_.is_constant() || b.num_.is_constant() ? MultiPoly::one(n) : gcd(b.num_, a.den_);
    RatFunc r(n);
    r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    r.fix_sign();
    return r;
  }
  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r(nvars());
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Cross-multiplication test; agrees with == on normalized values.
  bool equals_by_cross(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

  RatFunc rename(const std::vector<int>& target) const {
    RatFunc r(nvars());
    r.num_ = num_.rename(target);
    r.den_ = den_.rename(target);
    r.fix_sign();
    return r;
  }

  std::string str(const std::string& var = "x") const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void fix_sign() {
    if (num_.is_zero()) {
      den_ = MultiPoly::one(nvars());
      return;
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      num_ *= Rational(1) / lc;
      den_ *= Rational(1) / lc;
    }
  }
  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::one(nvars());
      return;
    }
    if (!den_.is_constant()) {
      MultiPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    fix_sign();
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace klr
