// The KLR algebra R_nu: faithful polynomial representation, PBW normal form
// with a braid/quadratic rewriting system, gradings, and the center action.
//
// A KLRElement is a finite sum of terms f * sigma(i, w): sigma(i, w) is the
// product of the sigma generators along the canonical reduced word of w,
// starting at the source sequence i (the rightmost letter acts first), and f is
// a polynomial in the variables of the target sequence w(i).

#pragma once

#include <map>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "qlaurent.hpp"
#include "quiver.hpp"

namespace klr {

/// An element of F_V: one polynomial per sequence.
struct PolyRep {
  std::map<ColorSeq, MultiPoly> comp;

  static PolyRep single(const ColorSeq& i, MultiPoly f) {
    PolyRep r;
    if (!f.is_zero()) r.comp.emplace(i, std::move(f));
    return r;
  }
  void add(const ColorSeq& i, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto it = comp.find(i);
    if (it == comp.end()) {
      comp.emplace(i, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) comp.erase(it);
  }
  PolyRep& operator+=(const PolyRep& o) {
    for (const auto& [i, f] : o.comp) add(i, f);
    return *this;
  }
  PolyRep operator-(const PolyRep& o) const {
    PolyRep r = *this;
    for (const auto& [i, f] : o.comp) r.add(i, -f);
    return r;
  }
  bool is_zero() const { return comp.empty(); }
  bool operator==(const PolyRep& o) const { return comp == o.comp; }
  bool operator!=(const PolyRep& o) const { return !(*this == o); }
};

class KLRElement {
 public:
  using Key = std::pair<ColorSeq, Perm>;
  using Terms = std::map<Key, MultiPoly>;

  KLRElement() = default;

  static KLRElement term(const ColorSeq& i, const Perm& w, const MultiPoly& f) {
    KLRElement z;
    z.add(i, w, f);
    return z;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const ColorSeq& i, const Perm& w, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{i, w}, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  KLRElement& operator+=(const KLRElement& o) {
    for (const auto& [k, f] : o.terms_) add(k.first, k.second, f);
    return *this;
  }
  KLRElement& operator-=(const KLRElement& o) {
    for (const auto& [k, f] : o.terms_) add(k.first, k.second, -f);
    return *this;
  }
  friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
  friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
  KLRElement operator*(const Rational& s) const {
    KLRElement r;
    for (const auto& [k, f] : terms_) r.add(k.first, k.second, f * s);
    return r;
  }
  bool operator==(const KLRElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const KLRElement& o) const { return !(*this == o); }

  /// Multiply every coefficient by g (g in target variables).
  KLRElement times_poly(const MultiPoly& g) const {
    KLRElement r;
    for (const auto& [k, f] : terms_) r.add(k.first, k.second, g * f);
    return r;
  }

  int max_length() const {
    int l = -1;
    for (const auto& [k, f] : terms_) l = std::max(l, length(k.second));
    return l;
  }

 private:
  Terms terms_;
};

/// Symmetric polynomial in the torus characters chi_1..chi_m (base coloring i0).
class CenterElem {
 public:
  CenterElem(const ColorSeq& base, MultiPoly c) : base_(base), c_(std::move(c)) {
    for (const auto& w : stabilizer(base_))
      if (c_.rename(w) != c_) throw std::invalid_argument("CenterElem: polynomial is not invariant under the stabilizer");
  }
  const MultiPoly& poly() const { return c_; }
  const ColorSeq& base() const { return base_; }

  /// Restriction to the i-component: chi_{w(k)} -> x_i(k) for w with base o w = i.
  MultiPoly on_component(const ColorSeq& i) const {
    for (const auto& w : all_perms(static_cast<int>(i.size()))) {
      bool ok = true;
      for (size_t k = 0; k < i.size() && ok; ++k) ok = base_[static_cast<size_t>(w[k])] == i[k];
      if (ok) return c_.rename(inverse(w));
    }
    throw std::invalid_argument("CenterElem: sequence has different content");
  }

 private:
  ColorSeq base_;
  MultiPoly c_;
};

class KLRAlgebra {
 public:
  KLRAlgebra(Quiver q, DimVector nu) : q_(std::move(q)), nu_(std::move(nu)) {
    if (static_cast<int>(nu_.coords.size()) != q_.num_vertices())
      throw std::invalid_argument("KLRAlgebra: dimension vector does not match quiver");
    m_ = nu_.total();
    if (m_ < 1) throw std::invalid_argument("KLRAlgebra: empty dimension vector");
    if (m_ > kMaxVars) throw std::length_error("KLRAlgebra: |nu| too large");
    seqs_ = sequences(nu_);
    i0_ = seqs_.front();
    perms_ = all_perms(m_);
    for (const auto& w : perms_) canon_.emplace(w, canonical_word(w));
  }
  KLRAlgebra(const KLRAlgebra& o) : q_(o.q_), nu_(o.nu_), m_(o.m_), seqs_(o.seqs_), i0_(o.i0_), perms_(o.perms_), canon_(o.canon_) {}

  const Quiver& quiver() const { return q_; }
  const DimVector& nu() const { return nu_; }
  int m() const { return m_; }
  const std::vector<ColorSeq>& seqs() const { return seqs_; }
  const std::vector<Perm>& perms() const { return perms_; }
  const ColorSeq& base() const { return i0_; }
  const Word& canonical(const Perm& w) const { return canon_.at(w); }

  // ---- generators -------------------------------------------------------

  KLRElement gen_idem(const ColorSeq& i) const {
    check_seq(i);
    return KLRElement::term(i, identity_perm(m_), MultiPoly::one(m_));
  }
  KLRElement gen_x(const ColorSeq& i, int k) const {
    check_seq(i);
    if (k < 0 || k >= m_) throw std::out_of_range("gen_x: position out of range");
    return KLRElement::term(i, identity_perm(m_), MultiPoly::var(m_, k));
  }
  KLRElement gen_sigma(const ColorSeq& i, int l) const {
    check_seq(i);
    check_position(i, l);
    return KLRElement::term(i, simple_reflection(m_, l), MultiPoly::one(m_));
  }
  /// tau_i(l) = (-1)^{h_i(l)} sigma_i(l); h_i(l) = -1 when the two colors agree.
  KLRElement gen_tau(const ColorSeq& i, int l) const {
    int h = h_loc(q_, i, l);
    return gen_sigma(i, l) * Rational(h % 2 == 0 ? 1 : -1);
  }
  KLRElement unit() const {
    KLRElement z;
    for (const auto& i : seqs_) z += gen_idem(i);
    return z;
  }
  KLRElement pbw_basis(const ColorSeq& i, const Perm& w) const {
    check_seq(i);
    return KLRElement::term(i, w, MultiPoly::one(m_));
  }

  // ---- operators on F_V -------------------------------------------------

  /// sigma_j(l) on a polynomial in the j-component; returns (target, image).
  std::pair<ColorSeq, MultiPoly> sigma_apply(const ColorSeq& j, int l, const MultiPoly& f) const {
    int a = j[static_cast<size_t>(l)], b = j[static_cast<size_t>(l + 1)];
    if (a == b) return {j, demazure(f, l)};
    MultiPoly g = f.swap_adjacent(l);
    int h = q_.h(a, b);
    if (h > 0) g = MultiPoly::diff(m_, l + 1, l).pow(h) * g;
    return {swap_at(j, l), g};
  }

  /// Apply sigma(i, w) (canonical word) to f in the i-component.
  std::pair<ColorSeq, MultiPoly> apply_basis(const ColorSeq& i, const Perm& w, const MultiPoly& f) const {
    return apply_word(i, canonical(w), f);
  }
  std::pair<ColorSeq, MultiPoly> apply_word(const ColorSeq& i, const Word& word, MultiPoly f) const {
    ColorSeq j = i;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      auto [nj, g] = sigma_apply(j, *it, f);
      j = std::move(nj);
      f = std::move(g);
      if (f.is_zero()) break;
    }
    return {j, f};
  }

  PolyRep apply(const KLRElement& z, const PolyRep& v) const {
    PolyRep out;
    for (const auto& [key, coef] : z.terms()) {
      auto it = v.comp.find(key.first);
      if (it == v.comp.end()) continue;
      auto [j, g] = apply_basis(key.first, key.second, it->second);
      out.add(j, coef * g);
    }
    return out;
  }

  // ---- rewriting to PBW normal form -------------------------------------

  /// sigma(l) sigma(l) acting on the j-component is multiplication by this polynomial.
  MultiPoly quadratic(const ColorSeq& j, int l) const {
    int a = j[static_cast<size_t>(l)], b = j[static_cast<size_t>(l + 1)];
    if (a == b) return MultiPoly(m_);
    return MultiPoly::diff(m_, l + 1, l).pow(q_.h(b, a)) * MultiPoly::diff(m_, l, l + 1).pow(q_.h(a, b));
  }

  /// C with sigma(l+1)sigma(l)sigma(l+1) - sigma(l)sigma(l+1)sigma(l) = C on the j-component.
  MultiPoly braid_correction(const ColorSeq& j, int l) const {
    int a = j[static_cast<size_t>(l)], b = j[static_cast<size_t>(l + 1)], c = j[static_cast<size_t>(l + 2)];
    if (a != c || a == b) return MultiPoly(m_);
    int e = -q_.cartan(a, b);
    MultiPoly num = MultiPoly::diff(m_, l + 2, l + 1).pow(e) - MultiPoly::diff(m_, l, l + 1).pow(e);
    MultiPoly r = exact_div(num, MultiPoly::diff(m_, l + 2, l));
    return q_.h(b, a) % 2 == 0 ? -r : r;
  }

  /// Normal form of sigma(l) * z.
  KLRElement left_mul_sigma(int l, const KLRElement& z) const {
    KLRElement out;
    for (const auto& [key, f] : z.terms()) {
      const auto& [i, w] = key;
      ColorSeq j = perm_act(w, i);
      out += sigma_times_basis(l, i, w).times_poly(f.swap_adjacent(l));
      if (j[static_cast<size_t>(l)] == j[static_cast<size_t>(l + 1)]) out.add(i, w, demazure(f, l));
    }
    return out;
  }

  /// Normal form of sigma_word * 1_i for any word (rightmost letter first).
  KLRElement word_nf(const ColorSeq& i, const Word& word) const {
    KLRElement z = gen_idem(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      z = left_mul_sigma(*it, z);
      if (z.is_zero()) break;
    }
    return z;
  }

  KLRElement multiply(const KLRElement& a, const KLRElement& b) const {
    KLRElement out;
    std::map<ColorSeq, KLRElement> by_target;
    for (const auto& [key, f] : b.terms()) by_target[perm_act(key.second, key.first)].add(key.first, key.second, f);
    for (const auto& [key, f] : a.terms()) {
      auto it = by_target.find(key.first);
      if (it == by_target.end()) continue;
      KLRElement z = it->second;
      const Word& word = canonical(key.second);
      for (auto jt = word.rbegin(); jt != word.rend() && !z.is_zero(); ++jt) z = left_mul_sigma(*jt, z);
      out += z.times_poly(f);
    }
    return out;
  }

  // ---- gradings ---------------------------------------------------------

  /// Sum of a_j(l) along a word starting from i (rightmost letter first).
  int word_degree(const ColorSeq& i, const Word& word) const {
    int d = 0;
    ColorSeq j = i;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      d += a_loc(q_, j, *it);
      j = swap_at(j, *it);
    }
    return d;
  }
  int sigma_word_degree(const ColorSeq& i, const Perm& w) const { return word_degree(i, canonical(w)); }

  /// Degree of the unit of F_i, normalized so that F_{i0} starts in degree 0.
  int rep_offset(const ColorSeq& i) const { return dim_tilde_f(q_, i0_) - dim_tilde_f(q_, i); }
  int rep_degree(const ColorSeq& i, const Monomial& mono) const { return 2 * mono.degree() + rep_offset(i); }

  /// Degree of x^alpha * sigma(i, w).
  int term_degree(const ColorSeq& i, const Perm& w, const Monomial& mono) const {
    return 2 * mono.degree() + sigma_word_degree(i, w);
  }

  /// Degree if homogeneous, nullopt otherwise (zero counts as homogeneous of any degree: returns nullopt).
  std::optional<int> degree(const KLRElement& z) const {
    std::optional<int> d;
    for (const auto& [key, f] : z.terms())
      for (const auto& [mono, c] : f.terms()) {
        int t = term_degree(key.first, key.second, mono);
        if (d && *d != t) return std::nullopt;
        d = t;
      }
    return d;
  }

  /// sum_{w : w(i) = i'} q^{deg(i,w)} / (1 - q^2)^m.
  GradedSeries graded_dim_hom(const ColorSeq& i, const ColorSeq& ip) const {
    check_seq(i);
    check_seq(ip);
    QLaurent num;
    for (const auto& w : perms_)
      if (perm_act(w, i) == ip) num.add(sigma_word_degree(i, w), 1);
    return {num, m_};
  }

  // ---- center -----------------------------------------------------------

  CenterElem center(const MultiPoly& c) const { return CenterElem(i0_, c); }

  KLRElement center_act(const CenterElem& c, const KLRElement& z) const {
    KLRElement out;
    std::map<ColorSeq, MultiPoly> cache;
    for (const auto& [key, f] : z.terms()) {
      ColorSeq j = perm_act(key.second, key.first);
      auto it = cache.find(j);
      if (it == cache.end()) it = cache.emplace(j, c.on_component(j)).first;
      out.add(key.first, key.second, it->second * f);
    }
    return out;
  }
  KLRElement center_element(const CenterElem& c) const { return center_act(c, unit()); }

  // ---- serialization ----------------------------------------------------

  nlohmann::json to_json(const KLRElement& z) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, f] : z.terms()) {
      std::vector<int> one_line;
      for (int x : key.second) one_line.push_back(x + 1);
      arr.push_back({{"source", seq_str(q_, key.first)}, {"permutation", one_line}, {"coefficient", f.str()}});
    }
    return arr;
  }

  void check_seq(const ColorSeq& i) const {
    if (static_cast<int>(i.size()) != m_ || DimVector::of_sequence(i, q_.num_vertices()) != nu_)
      throw std::invalid_argument("sequence " + seq_str(q_, i) + " is not in I^nu");
  }

 private:
  using TKey = std::tuple<int, ColorSeq, Perm>;

  /// Normal form of sigma(l) * sigma(i, w).
  KLRElement sigma_times_basis(int l, const ColorSeq& i, const Perm& w) const {
    TKey key{l, i, w};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tcache_.find(key);
      if (it != tcache_.end()) return it->second;
    }
    KLRElement r;
    Perm u = left_mul_s(l, w);
    if (length(u) > length(w)) {
      Word word{l};
      const Word& cw = canonical(w);
      word.insert(word.end(), cw.begin(), cw.end());
      r = reduced_nf(i, word);
    } else {
      auto [word, corr] = start_with(i, canonical(w), l);
      Word rest(word.begin() + 1, word.end());
      ColorSeq j = perm_act(perm_of_word(m_, rest), i);
      MultiPoly qd = quadratic(j, l);
      if (!qd.is_zero()) r += reduced_nf(i, rest).times_poly(qd);
      r += left_mul_sigma(l, corr);
    }
    std::lock_guard<std::mutex> lock(mu_);
    tcache_.emplace(key, r);
    return r;
  }

  /// Normal form of sigma(word) * 1_i for a reduced word.
  KLRElement reduced_nf(const ColorSeq& i, const Word& word) const {
    Perm u = perm_of_word(m_, word);
    const Word& cw = canonical(u);
    if (word == cw) return pbw_basis(i, u);
    int d = cw.front();
    auto [moved, corr] = start_with(i, word, d);
    Word rest(moved.begin() + 1, moved.end());
    KLRElement tail = reduced_nf(i, rest);
    // sigma(d) * sigma(i, s_d u) is the basis element for u; lower terms still need rewriting.
    Perm su = left_mul_s(d, u);
    KLRElement lower = tail;
    lower.add(i, su, -MultiPoly::one(m_));
    KLRElement out = pbw_basis(i, u);
    out += left_mul_sigma(d, lower);
    out += corr;
    return out;
  }

  /// Rewrites a reduced word so that it begins with the left descent d.
  /// Returns (new word, correction) with sigma(word) 1_i = sigma(new word) 1_i + correction.
  std::pair<Word, KLRElement> start_with(const ColorSeq& i, const Word& word, int d) const {
    if (word.front() == d) return {word, KLRElement{}};
    int e = word.front();
    Word rest(word.begin() + 1, word.end());
    if (std::abs(d - e) >= 2) {
      auto [r1, c1] = start_with(i, rest, d);
      Word out{d, e};
      out.insert(out.end(), r1.begin() + 1, r1.end());
      return {out, left_mul_sigma(e, c1)};
    }
    auto [r1, c1] = start_with(i, rest, d);
    Word r2(r1.begin() + 1, r1.end());
    auto [r3, c2] = start_with(i, r2, e);
    Word tail(r3.begin() + 1, r3.end());
    KLRElement corr = left_mul_sigma(e, c1);
    corr += left_mul_sigma(e, left_mul_sigma(d, c2));
    // e d e -> d e d on the component reached by the tail.
    int lo = std::min(d, e);
    ColorSeq j = perm_act(perm_of_word(m_, tail), i);
    MultiPoly c = braid_correction(j, lo);
    if (!c.is_zero()) {
      KLRElement t = reduced_nf(i, tail).times_poly(c);
      // (lo+1, lo, lo+1) = (lo, lo+1, lo) + C
      if (e == lo + 1)
        corr += t;
      else
        corr -= t;
    }
    Word out{d, e, d};
    out.insert(out.end(), tail.begin(), tail.end());
    return {out, corr};
  }

  Quiver q_;
  DimVector nu_;
  int m_ = 0;
  std::vector<ColorSeq> seqs_;
  ColorSeq i0_;
  std::vector<Perm> perms_;
  std::map<Perm, Word> canon_;
  mutable std::mutex mu_;
  mutable std::map<TKey, KLRElement> tcache_;
};

}  // namespace klr
