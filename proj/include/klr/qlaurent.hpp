// Laurent polynomials in q with rational coefficients, quantum integers, and
// graded dimension series N(q) / (1 - q^2)^p.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace klr {

class QLaurent {
 public:
  using Coeffs = std::map<int, mpq_class>;

  QLaurent() = default;
  QLaurent(const mpq_class& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_[0] = c;
  }
  QLaurent(int c) : QLaurent(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)

  static QLaurent monomial(int e, const mpq_class& c = 1) {
    QLaurent r;
    if (c != 0) r.c_[e] = c;
    return r;
  }
  static QLaurent q() { return monomial(1); }

  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpq_class(0) : it->second;
  }
  int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  void add(int e, const mpq_class& v) {
    if (v == 0) return;
    auto& slot = c_[e];
    slot += v;
    if (slot == 0) c_.erase(e);
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) add(e, v);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) add(e, -v);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  QLaurent operator-() const {
    QLaurent r = *this;
    for (auto& [e, v] : r.c_) v = -v;
    return r;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, va] : a.c_)
      for (const auto& [eb, vb] : b.c_) r.add(ea + eb, va * vb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  bool operator==(const QLaurent& o) const { return c_ == o.c_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }
  bool operator<(const QLaurent& o) const { return c_ < o.c_; }

  QLaurent shift(int s) const {
    QLaurent r;
    for (const auto& [e, v] : c_) r.c_[e + s] = v;
    return r;
  }

  /// q -> q^{-1}.
  QLaurent bar() const {
    QLaurent r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
  }

  mpq_class at_one() const {
    mpq_class s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
  }

  bool is_integral() const {
    for (const auto& [e, v] : c_)
      if (v.get_den() != 1) return false;
    return true;
  }
  bool is_nonneg_integral() const {
    for (const auto& [e, v] : c_)
      if (v.get_den() != 1 || v < 0) return false;
    return true;
  }
  /// Single term +-q^k.
  bool is_unit() const { return c_.size() == 1 && abs(c_.begin()->second) == 1; }

  /// Exact division; throws when not divisible in Q[q, q^-1].
  QLaurent divide_exact(const QLaurent& d) const {
    if (d.is_zero()) throw std::domain_error("QLaurent: division by zero");
    QLaurent rem = *this, quo;
    int dl = d.max_exp();
    mpq_class dc = d.coeff(dl);
    int guard = 0;
    while (!rem.is_zero()) {
      int rl = rem.max_exp();
      if (rem.max_exp() - rem.min_exp() < d.max_exp() - d.min_exp() || ++guard > 10000)
        throw std::logic_error("QLaurent: inexact division");
      QLaurent t = monomial(rl - dl, rem.coeff(rl) / dc);
      quo += t;
      rem -= t * d;
    }
    return quo;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      int e = it->first;
      mpq_class v = it->second;
      bool neg = v < 0;
      mpq_class a = abs(v);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, v] : c_)
      j[std::to_string(e)] = v.get_den() == 1 && v.get_num().fits_slong_p() ? nlohmann::json(v.get_num().get_si())
                                                                           : nlohmann::json(v.get_str());
    return j;
  }

 private:
  Coeffs c_;
};

/// [m]_q = sum_{l=1}^m q^{m+1-2l}.
inline QLaurent qnum(int m) {
  if (m < 0) throw std::invalid_argument("qnum: negative argument");
  QLaurent r;
  for (int l = 1; l <= m; ++l) r.add(m + 1 - 2 * l, 1);
  return r;
}

inline QLaurent qfact(int m) {
  if (m < 0) throw std::invalid_argument("qfact: negative argument");
  QLaurent r = 1;
  for (int l = 1; l <= m; ++l) r *= qnum(l);
  return r;
}

/// [a]! = prod_l [a_l]!.
inline QLaurent qfact(const std::vector<int>& a) {
  QLaurent r = 1;
  for (int x : a) r *= qfact(x);
  return r;
}

/// N(q) / (1 - q^2)^p.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(QLaurent num, int pole) : num_(std::move(num)), pole_(pole) {
    if (pole < 0) throw std::invalid_argument("GradedSeries: negative pole order");
  }

  const QLaurent& numerator() const { return num_; }
  int pole() const { return pole_; }

  /// Multiply numerator by (1 - q^2)^k and raise the pole order by k.
  GradedSeries raised(int k) const {
    QLaurent f = 1, one_minus = QLaurent(1) - QLaurent::monomial(2);
    for (int t = 0; t < k; ++t) f *= one_minus;
    return {num_ * f, pole_ + k};
  }

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    int p = std::max(a.pole_, b.pole_);
    GradedSeries x = a.raised(p - a.pole_), y = b.raised(p - b.pole_);
    return {x.num_ + y.num_, p};
  }

  /// Coefficient of q^d in the Laurent expansion at q = 0.
  mpq_class coefficient(int d) const {
    if (pole_ == 0) return num_.coeff(d);
    mpq_class s = 0;
    for (const auto& [e, v] : num_.coeffs()) {
      int gap = d - e;
      if (gap < 0 || gap % 2) continue;
      int k = gap / 2;
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k + pole_ - 1), static_cast<unsigned long>(pole_ - 1));
      s += v * b;
    }
    return s;
  }

  std::vector<mpq_class> window(int lo, int hi) const {
    std::vector<mpq_class> out;
    for (int d = lo; d <= hi; ++d) out.push_back(coefficient(d));
    return out;
  }

  std::string str() const {
    std::string s = "(" + num_.str() + ")";
    if (pole_ > 0) s += "/(1-q^2)^" + std::to_string(pole_);
    return s;
  }

 private:
  QLaurent num_;
  int pole_ = 0;
};

inline bool series_eq_window(const GradedSeries& a, const GradedSeries& b, int lo, int hi) {
  for (int d = lo; d <= hi; ++d)
    if (a.coefficient(d) != b.coefficient(d)) return false;
  return true;
}

}  // namespace klr
