// Sparse multivariate polynomials over exact rationals.
//
// A MultiPoly lives in k[x1..xn] for a fixed n (n <= kMaxVars). Terms are kept
// in a std::map keyed by exponent vectors and ordered graded-lexicographically
// with x1 > x2 > ... > xn, largest monomial first; zero coefficients are never
// stored.  Variables are 0-based internally and printed 1-based.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klr {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial. Unused trailing slots stay zero.
struct Monomial {
  std::array<int16_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  int operator[](int k) const { return e[static_cast<size_t>(k)]; }
  int16_t& operator[](int k) { return e[static_cast<size_t>(k)]; }
  bool operator==(const Monomial& o) const { return e == o.e; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (size_t k = 0; k < e.size(); ++k) r.e[k] = static_cast<int16_t>(e[k] + o.e[k]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] > o.e[k]) return false;
    return true;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (size_t k = 0; k < e.size(); ++k) r.e[k] = static_cast<int16_t>(e[k] - o.e[k]);
    return r;
  }
  static Monomial var(int k, int power = 1) {
    Monomial m;
    m[k] = static_cast<int16_t>(power);
    return m;
  }
};

/// Graded lex, larger first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) { check_nvars(); }
  MultiPoly(int nvars, const Rational& c) : nvars_(nvars) {
    check_nvars();
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(int nvars, const Monomial& m, const Rational& c = 1) : nvars_(nvars) {
    check_nvars();
    if (c != 0) terms_.emplace(m, c);
  }

  static MultiPoly constant(int nvars, const Rational& c) { return MultiPoly(nvars, c); }
  static MultiPoly one(int nvars) { return MultiPoly(nvars, Rational(1)); }
  static MultiPoly var(int nvars, int k) { return MultiPoly(nvars, Monomial::var(k)); }
  /// x_a - x_b
  static MultiPoly diff(int nvars, int a, int b) {
    MultiPoly p(nvars, Monomial::var(a));
    p.add_term(Monomial::var(b), Rational(-1));
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
  }
  int degree_in(int k) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[k]);
    return d;
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    merge_nvars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    merge_nvars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly mul_monomial(const Monomial& mono, const Rational& s = 1) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c * s);
    return r;
  }

  MultiPoly pow(int n) const {
    MultiPoly r = one(nvars_);
    MultiPoly b = *this;
    while (n > 0) {
      if (n & 1) r *= b;
      n >>= 1;
      if (n) b *= b;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Variable substitution x_k -> x_{target[k]}.
  MultiPoly rename(const std::vector<int>& target, int new_nvars = -1) const {
    MultiPoly r(new_nvars < 0 ? nvars_ : new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial mm;
      for (int k = 0; k < nvars_; ++k) mm[target[static_cast<size_t>(k)]] += m[k];
      r.add_term(mm, c);
    }
    return r;
  }

  /// Exchange x_l and x_{l+1} (0-based l).
  MultiPoly swap_adjacent(int l) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      std::swap(mm[l], mm[l + 1]);
      r.terms_.emplace(mm, c);
    }
    return r;
  }

  /// Substitute each variable by a polynomial (possibly in a different ring).
  MultiPoly substitute(const std::vector<MultiPoly>& images, int target_nvars) const {
    MultiPoly r(target_nvars);
    std::vector<std::vector<MultiPoly>> powers(static_cast<size_t>(nvars_));
    for (const auto& [m, c] : terms_) {
      MultiPoly t(target_nvars, c);
      for (int k = 0; k < nvars_; ++k) {
        int e = m[k];
        if (e == 0) continue;
        auto& pk = powers[static_cast<size_t>(k)];
        if (pk.empty()) pk.push_back(one(target_nvars));
        while (static_cast<int>(pk.size()) <= e) pk.push_back(pk.back() * images[static_cast<size_t>(k)]);
        t *= pk[static_cast<size_t>(e)];
      }
      r += t;
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int k = 0; k < nvars_; ++k)
        for (int p = 0; p < m[k]; ++p) t *= point[static_cast<size_t>(k)];
      s += t;
    }
    return s;
  }

  /// Homogeneous component of the given total degree.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  /// Canonical text: terms in decreasing grlex order, e.g. "x1^2 - 3/2*x1*x2 + 1".
  std::string str(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      bool neg = c < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (a == 1);
      bool has_vars = m.degree() > 0;
      if (!unit || !has_vars) {
        os << a.get_str();
        if (has_vars) os << "*";
      }
      bool first_var = true;
      for (int k = 0; k < nvars_; ++k) {
        if (m[k] == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << var << (k + 1);
        if (m[k] > 1) os << "^" << m[k];
      }
    }
    return os.str();
  }

 private:
  void check_nvars() const {
    if (nvars_ < 0 || nvars_ > kMaxVars) throw std::out_of_range("MultiPoly: too many variables");
  }
  void merge_nvars(const MultiPoly& o) { nvars_ = std::max(nvars_, o.nvars_); }

  int nvars_ = 0;
  TermMap terms_;
};

/// Multivariate division by a single divisor in grlex order. Returns {quotient, remainder}.
inline std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide: division by zero polynomial");
  int n = std::max(a.nvars(), b.nvars());
  MultiPoly q(n), r(n), p = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coeff();
  while (!p.is_zero()) {
    const Monomial lp = p.leading_monomial();
    const Rational cp = p.leading_coeff();
    if (lb.divides(lp)) {
      Monomial t = lp / lb;
      Rational c = cp / cb;
      q.add_term(t, c);
      p -= b.mul_monomial(t, c);
    } else {
      r.add_term(lp, cp);
      p.add_term(lp, -cp);
    }
  }
  return {q, r};
}

/// Exact quotient; throws std::logic_error when b does not divide a.
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: inexact division");
  return q;
}

inline bool divides(const MultiPoly& b, const MultiPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return divide(a, b).second.is_zero();
}

/// Divided difference (f - s_l f) / (x_l - x_{l+1}), 0-based l.
///
/// Computed monomial by monomial; x_l^a x_{l+1}^b with a > b maps to
/// sum_{k=0}^{a-b-1} x_l^{a-1-k} x_{l+1}^{b+k}.
inline MultiPoly demazure(const MultiPoly& f, int l) {
  MultiPoly r(f.nvars());
  if (l < 0 || l + 1 >= f.nvars()) throw std::out_of_range("demazure: position out of range");
  for (const auto& [m, c] : f.terms()) {
    int a = m[l], b = m[l + 1];
    if (a == b) continue;
    Rational sign = a > b ? Rational(1) : Rational(-1);
    int hi = std::max(a, b), lo = std::min(a, b);
    for (int k = 0; k < hi - lo; ++k) {
      Monomial mm = m;
      mm[l] = static_cast<int16_t>(hi - 1 - k);
      mm[l + 1] = static_cast<int16_t>(lo + k);
      r.add_term(mm, c * sign);
    }
  }
  return r;
}

/// All monomials in n variables of total degree exactly d, in grlex-descending order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      cur[k] = static_cast<int16_t>(left);
      out.push_back(cur);
      cur[k] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[k] = static_cast<int16_t>(e);
      self(self, k + 1, left - e);
    }
    cur[k] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto v = monomials_of_degree(n, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace klr
