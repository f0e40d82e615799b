// Torus fixed-point model: Euler classes of weight multisets, localized classes
// in the psi-bases, convolution, and the comparison with the KLR operators.
//
// Characters chi_0..chi_{m-1} are the variables of a MultiPoly in m variables.
// The coloring of the characters is the base sequence c: chi_a has color c[a].
// A root or weight chi_a - chi_b is stored as the ordered pair (a, b).

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "report.hpp"
#include "ratfunc.hpp"

namespace klr {

/// Multiset of weights chi_a - chi_b.
class WeightMultiset {
 public:
  using Key = std::pair<int, int>;

  void add(int a, int b, int mult = 1) {
    if (mult <= 0) return;
    w_[{a, b}] += mult;
  }
  const std::map<Key, int>& items() const { return w_; }
  int size() const {
    int s = 0;
    for (const auto& [k, v] : w_) s += v;
    return s;
  }

  friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) {
    for (const auto& [k, v] : b.w_) a.w_[k] += v;
    return a;
  }
  /// Multiset intersection (minimum multiplicity).
  WeightMultiset intersect(const WeightMultiset& o) const {
    WeightMultiset r;
    for (const auto& [k, v] : w_) {
      auto it = o.w_.find(k);
      if (it != o.w_.end()) r.add(k.first, k.second, std::min(v, it->second));
    }
    return r;
  }
  /// Multiset difference (clamped at zero).
  WeightMultiset minus(const WeightMultiset& o) const {
    WeightMultiset r;
    for (const auto& [k, v] : w_) {
      auto it = o.w_.find(k);
      r.add(k.first, k.second, v - (it == o.w_.end() ? 0 : it->second));
    }
    return r;
  }
  WeightMultiset dual() const {
    WeightMultiset r;
    for (const auto& [k, v] : w_) r.add(k.second, k.first, v);
    return r;
  }
  bool operator==(const WeightMultiset& o) const { return w_ == o.w_; }

  /// Product of the weights with multiplicity.
  MultiPoly euler(int m) const {
    MultiPoly p = MultiPoly::one(m);
    for (const auto& [k, v] : w_) p *= MultiPoly::diff(m, k.first, k.second).pow(v);
    return p;
  }

 private:
  std::map<Key, int> w_;
};

using PermPair = std::pair<Perm, Perm>;

/// Coefficients on psi_{x,y}.
struct LocalClassZ {
  std::map<PermPair, RatFunc> c;

  void add(const Perm& x, const Perm& y, const RatFunc& v) {
    if (v.is_zero()) return;
    auto it = c.find({x, y});
    if (it == c.end()) {
      c.emplace(PermPair{x, y}, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
  LocalClassZ operator-(const LocalClassZ& o) const {
    LocalClassZ r = *this;
    for (const auto& [k, v] : o.c) r.add(k.first, k.second, -v);
    return r;
  }
  LocalClassZ operator+(const LocalClassZ& o) const {
    LocalClassZ r = *this;
    for (const auto& [k, v] : o.c) r.add(k.first, k.second, v);
    return r;
  }
  bool operator==(const LocalClassZ& o) const { return c == o.c; }
  bool is_zero() const { return c.empty(); }
};

/// Coefficients on psi_x.
struct LocalClassF {
  std::map<Perm, RatFunc> c;

  void add(const Perm& x, const RatFunc& v) {
    if (v.is_zero()) return;
    auto it = c.find(x);
    if (it == c.end()) {
      c.emplace(x, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
  LocalClassF operator+(const LocalClassF& o) const {
    LocalClassF r = *this;
    for (const auto& [k, v] : o.c) r.add(k, v);
    return r;
  }
  bool operator==(const LocalClassF& o) const { return c == o.c; }
  bool operator!=(const LocalClassF& o) const { return !(*this == o); }
};

class Localization {
 public:
  explicit Localization(const KLRAlgebra& alg) : alg_(alg), q_(alg.quiver()), m_(alg.m()), base_(alg.base()) {}

  const KLRAlgebra& algebra() const { return alg_; }
  int m() const { return m_; }
  const ColorSeq& base() const { return base_; }
  int color(int a) const { return base_[static_cast<size_t>(a)]; }

  /// i_w = base o w.
  ColorSeq seq_of(const Perm& w) const {
    ColorSeq s(static_cast<size_t>(m_));
    for (int k = 0; k < m_; ++k) s[static_cast<size_t>(k)] = color(w[static_cast<size_t>(k)]);
    return s;
  }
  /// All w with base o w = i.
  std::vector<Perm> fixed_points(const ColorSeq& i) const {
    std::vector<Perm> out;
    for (const auto& w : alg_.perms())
      if (seq_of(w) == i) out.push_back(w);
    return out;
  }

  // ---- weight multisets ---------------------------------------------------

  /// Weights of E_V lying in w(Delta+): chi_b - chi_a for an arrow c(a) -> c(b), w^{-1}(b) < w^{-1}(a).
  WeightMultiset e_weights(const Perm& w) const {
    Perm wi = inverse(w);
    WeightMultiset r;
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        if (a == b || wi[static_cast<size_t>(b)] >= wi[static_cast<size_t>(a)]) continue;
        r.add(b, a, q_.h(color(a), color(b)));
      }
    return r;
  }
  WeightMultiset e_weights(const Perm& w, const Perm& wp) const { return e_weights(w).intersect(e_weights(wp)); }

  /// Roots chi_{w(k)} - chi_{w(k')}, k < k', of equal color.
  WeightMultiset n_weights(const Perm& w) const {
    WeightMultiset r;
    for (int k = 0; k < m_; ++k)
      for (int kp = k + 1; kp < m_; ++kp) {
        int a = w[static_cast<size_t>(k)], b = w[static_cast<size_t>(kp)];
        if (color(a) == color(b)) r.add(a, b);
      }
    return r;
  }
  /// n_w modulo n_w intersected with n_{w'}.
  WeightMultiset m_weights(const Perm& w, const Perm& wp) const { return n_weights(w).minus(n_weights(wp)); }

  // ---- Euler classes -------------------------------------------------------

  const MultiPoly& lambda(const Perm& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lambda_.find(w);
    if (it == lambda_.end()) it = lambda_.emplace(w, (e_weights(w).dual() + n_weights(w)).euler(m_)).first;
    return it->second;
  }
  RatFunc lambda_inv(const Perm& w) const { return RatFunc(MultiPoly::one(m_), lambda(w)); }

  /// Lambda^s_{w, w'} for s = s_l and w' in {w, ws}.
  RatFunc lambda_s(int l, const Perm& w, const Perm& wp) const {
    Perm ws = right_mul_s(w, l);
    WeightMultiset base = e_weights(ws, w).dual() + n_weights(w);
    bool same_orbit = color(w[static_cast<size_t>(l)]) == color(w[static_cast<size_t>(l + 1)]);
    if (same_orbit) base = base + (wp == w ? m_weights(w, ws) : m_weights(ws, w));
    return RatFunc(MultiPoly::one(m_), base.euler(m_));
  }

  // ---- classes ---------------------------------------------------------------

  LocalClassZ class_Ze() const {
    LocalClassZ z;
    for (const auto& w : alg_.perms()) z.add(w, w, lambda_inv(w));
    return z;
  }
  LocalClassZ class_Zs(int l) const {
    if (l < 0 || l + 1 >= m_) throw std::out_of_range("class_Zs: position out of range");
    LocalClassZ z;
    for (const auto& w : alg_.perms()) {
      Perm ws = right_mul_s(w, l);
      z.add(w, w, lambda_s(l, w, w));
      z.add(w, ws, lambda_s(l, w, ws));
    }
    return z;
  }
  /// Product of [Z^{s_l}] along the canonical reduced word of w.
  LocalClassZ class_Zw(const Perm& w) const {
    LocalClassZ z = class_Ze();
    for (int l : alg_.canonical(w)) z = convolve(z, class_Zs(l));
    return z;
  }
  LocalClassZ idem_class(const ColorSeq& i) const {
    LocalClassZ z;
    for (const auto& w : fixed_points(i)) z.add(w, w, lambda_inv(w));
    return z;
  }
  LocalClassZ kappa_class(const ColorSeq& i, int k) const {
    LocalClassZ z;
    for (const auto& w : fixed_points(i))
      z.add(w, w, RatFunc(MultiPoly::var(m_, w[static_cast<size_t>(k)]), lambda(w)));
    return z;
  }
  /// 1_{s_l(i)} [Z^{s_l}] 1_i.
  LocalClassZ sigma_class(const ColorSeq& i, int l) const {
    return convolve(convolve(idem_class(swap_at(i, l)), class_Zs(l)), idem_class(i));
  }

  LocalClassZ convolve(const LocalClassZ& a, const LocalClassZ& b) const {
    std::map<Perm, std::vector<std::pair<Perm, const RatFunc*>>> rows;
    for (const auto& [k, v] : b.c) rows[k.first].push_back({k.second, &v});
    LocalClassZ out;
    for (const auto& [k, v] : a.c) {
      auto it = rows.find(k.second);
      if (it == rows.end()) continue;
      RatFunc av = v * RatFunc(lambda(k.second));
      for (const auto& [z, bv] : it->second) out.add(k.first, z, av * *bv);
    }
    return out;
  }
  LocalClassF act(const LocalClassZ& a, const LocalClassF& v) const {
    LocalClassF out;
    for (const auto& [k, av] : a.c) {
      auto it = v.c.find(k.second);
      if (it == v.c.end()) continue;
      out.add(k.first, av * RatFunc(lambda(k.second)) * it->second);
    }
    return out;
  }

  /// f in the i-component maps to sum_{w in S_i} w(f) Lambda_w^{-1} psi_w.
  LocalClassF embed_poly(const ColorSeq& i, const MultiPoly& f) const {
    LocalClassF out;
    if (f.is_zero()) return out;
    for (const auto& w : fixed_points(i)) out.add(w, RatFunc(f.rename(w), lambda(w)));
    return out;
  }
  LocalClassF embed(const PolyRep& v) const {
    LocalClassF out;
    for (const auto& [i, f] : v.comp) out = out + embed_poly(i, f);
    return out;
  }

 private:
  const KLRAlgebra& alg_;
  const Quiver& q_;
  int m_;
  ColorSeq base_;
  mutable std::mutex mu_;
  mutable std::map<Perm, MultiPoly> lambda_;
};

/// Compares the localized generator classes with the polynomial operators on every monomial.
inline Report crosscheck_operators(const KLRAlgebra& alg, int degree_bound) {
  Localization loc(alg);
  const Quiver& q = alg.quiver();
  int m = alg.m();
  Report rep;
  auto inputs = monomials_up_to(m, degree_bound);

  auto run = [&](const std::string& name, const LocalClassZ& cls, const KLRElement& gen) {
    CheckRecord rec{"crosscheck_operators", name, true, ""};
    for (const auto& j : alg.seqs()) {
      for (const auto& mono : inputs) {
        MultiPoly f(m, mono);
        LocalClassF lhs = loc.act(cls, loc.embed_poly(j, f));
        LocalClassF rhs = loc.embed(alg.apply(gen, PolyRep::single(j, f)));
        if (lhs != rhs) {
          rec.ok = false;
          rec.witness = "component " + seq_str(q, j) + ", input " + f.str();
          break;
        }
      }
      if (!rec.ok) break;
    }
    rep.records.push_back(rec);
  };

  for (const auto& i : alg.seqs()) {
    std::string s = seq_str(q, i);
    run("1" + s, loc.idem_class(i), alg.gen_idem(i));
    for (int k = 0; k < m; ++k) run("x" + std::to_string(k + 1) + s, loc.kappa_class(i, k), alg.gen_x(i, k));
    for (int l = 0; l + 1 < m; ++l)
      run("sigma" + std::to_string(l + 1) + s, loc.sigma_class(i, l), alg.gen_sigma(i, l));
  }
  return rep;
}

/// [Z^{s_l}] [Z^w] agrees with [Z^{s_l w}] up to strata strictly below s_l w, plus the
/// Euler-class multiset identities for length-additive products.
inline Report check_pbw_product(const KLRAlgebra& alg, int l, const Perm& w) {
  Localization loc(alg);
  Perm sw = left_mul_s(l, w);
  if (length(sw) != length(w) + 1) throw std::invalid_argument("check_pbw_product: l(s_l w) must equal l(w) + 1");
  Report rep;
  CheckRecord rec{"pbw_product", "s" + std::to_string(l + 1) + " * " + perm_str(w), true, ""};
  LocalClassZ diff = loc.convolve(loc.class_Zs(l), loc.class_Zw(w)) - loc.class_Zw(sw);
  for (const auto& [k, v] : diff.c) {
    Perm rel = compose(inverse(k.first), k.second);
    if (!bruhat_leq(rel, sw) || rel == sw) {
      rec.ok = false;
      rec.witness = "psi_{" + perm_str(k.first) + "," + perm_str(k.second) + "} = " + v.str("chi");
      break;
    }
  }
  rep.records.push_back(rec);
  return rep;
}

/// Both multiset identities for (w, x, y) with l(xy) = l(x) + l(y).
inline Report check_euler_identities(const Localization& loc, const Perm& w, const Perm& x, const Perm& y) {
  Report rep;
  Perm wx = compose(w, x), wxy = compose(wx, y);
  std::string inst = "w=" + perm_str(w) + " x=" + perm_str(x) + " y=" + perm_str(y);
  // eu(O^{xy}) eu(F at wx) = eu(O^x) eu(O^y) with eu(O^y at (x, xy)) = eu(n_x + m_{xy,x}).
  WeightMultiset lhs1 = loc.n_weights(w) + loc.m_weights(wxy, w) + loc.n_weights(wx);
  WeightMultiset rhs1 = loc.n_weights(w) + loc.m_weights(wx, w) + loc.n_weights(wx) + loc.m_weights(wxy, wx);
  rep.records.push_back({"euler_identity_O", inst, lhs1 == rhs1, lhs1 == rhs1 ? "" : "multisets differ"});
  WeightMultiset lhs2 = loc.e_weights(w, wxy).dual() + loc.e_weights(wx).dual();
  WeightMultiset rhs2 = loc.e_weights(w, wx).dual() + loc.e_weights(wx, wxy).dual();
  rep.records.push_back({"euler_identity_e", inst, lhs2 == rhs2, lhs2 == rhs2 ? "" : "multisets differ"});
  return rep;
}

}  // namespace klr
