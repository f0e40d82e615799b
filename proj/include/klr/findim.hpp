// The finite-dimensional quotient R0 = R / S+ R, its radical, simple graded
// modules, and decomposition of the projectives R_y into indecomposables.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "qlaurent.hpp"
#include "ratfunc.hpp"

namespace klr {

using SVec = std::vector<std::pair<int, mpq_class>>;

/// Finite-dimensional graded algebra given by structure constants.
struct FinGradedAlg {
  int dim = 0;
  std::vector<int> degree;
  std::vector<std::vector<SVec>> mult;  // mult[a][b] = b_a * b_b
  Vec unit;

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r(static_cast<size_t>(dim), 0);
    for (int a = 0; a < dim; ++a) {
      if (x[static_cast<size_t>(a)] == 0) continue;
      for (int b = 0; b < dim; ++b) {
        if (y[static_cast<size_t>(b)] == 0) continue;
        mpq_class s = x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)];
        for (const auto& [c, v] : mult[static_cast<size_t>(a)][static_cast<size_t>(b)]) r[static_cast<size_t>(c)] += s * v;
      }
    }
    return r;
  }
  Vec basis_vec(int a) const {
    Vec v(static_cast<size_t>(dim), 0);
    v[static_cast<size_t>(a)] = 1;
    return v;
  }
  /// tr(L_{b_a}) for every basis element.
  Vec traces() const {
    Vec t(static_cast<size_t>(dim), 0);
    for (int a = 0; a < dim; ++a)
      for (int c = 0; c < dim; ++c)
        for (const auto& [k, v] : mult[static_cast<size_t>(a)][static_cast<size_t>(c)])
          if (k == c) t[static_cast<size_t>(a)] += v;
    return t;
  }
  /// First failing triple, if any.
  std::optional<std::tuple<int, int, int>> check_associative() const {
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        Vec ab = mul(basis_vec(a), basis_vec(b));
        for (int c = 0; c < dim; ++c) {
          Vec lhs = mul(ab, basis_vec(c));
          Vec bc = mul(basis_vec(b), basis_vec(c));
          if (lhs != mul(basis_vec(a), bc)) return std::make_tuple(a, b, c);
        }
      }
    return std::nullopt;
  }
  bool check_grading() const {
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (const auto& [c, v] : mult[static_cast<size_t>(a)][static_cast<size_t>(b)])
          if (degree[static_cast<size_t>(c)] != degree[static_cast<size_t>(a)] + degree[static_cast<size_t>(b)]) return false;
    return true;
  }
};

/// Polynomials over Q in one variable, lowest coefficient first.
struct UPoly {
  std::vector<mpq_class> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  static UPoly monomial(int k) {
    UPoly p;
    p.c.assign(static_cast<size_t>(k + 1), 0);
    p.c.back() = 1;
    return p;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  /// Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    UPoly q, r = *this;
    r.trim();
    if (d.c.empty()) throw std::domain_error("UPoly: division by zero");
    if (r.deg() < d.deg()) return {q, r};
    q.c.assign(static_cast<size_t>(r.deg() - d.deg() + 1), 0);
    while (!r.c.empty() && r.deg() >= d.deg()) {
      int s = r.deg() - d.deg();
      mpq_class f = r.c.back() / d.c.back();
      q.c[static_cast<size_t>(s)] = f;
      for (size_t i = 0; i < d.c.size(); ++i) r.c[i + static_cast<size_t>(s)] -= f * d.c[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  mpq_class eval(const mpq_class& x) const {
    mpq_class s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  }
};

/// (u, v) with u a + v b = 1 for coprime a, b.
inline std::pair<UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0{{1}}, s1{}, t0{}, t1{{1}};
  while (!r1.c.empty()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.deg() != 0) throw std::logic_error("ext_gcd: inputs not coprime");
  mpq_class inv = 1 / r0.c[0];
  for (auto& x : s0.c) x *= inv;
  for (auto& x : t0.c) x *= inv;
  return {s0, t0};
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class("1000000000000")) throw std::runtime_error("rational_roots: coefficient too large");
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Distinct rational roots, ascending.
inline std::vector<mpq_class> rational_roots(UPoly p) {
  p.trim();
  std::vector<mpq_class> roots;
  if (p.deg() <= 0) return roots;
  size_t z = 0;
  while (z < p.c.size() && p.c[z] == 0) ++z;
  if (z > 0) roots.push_back(0);
  mpz_class l = 1;
  for (const auto& x : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (size_t k = z; k < p.c.size(); ++k) ic.push_back(mpz_class(p.c[k] * l));
  if (ic.size() > 1) {
    for (const auto& num : divisors(ic.front()))
      for (const auto& den : divisors(ic.back()))
        for (int sgn : {1, -1}) {
          mpq_class r(num * sgn, den);
          r.canonicalize();
          if (p.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// The quotient R0 with its basis (sequence, permutation, Artin monomial in target variables).
class R0Quotient {
 public:
  struct BasisElem {
    ColorSeq source;
    Perm w;
    Monomial beta;
  };

  explicit R0Quotient(const KLRAlgebra& alg, int cap = 4, bool with_products = true) : alg_(alg), m_(alg.m()) {
    if (m_ > cap) throw std::length_error("build_R0: |nu| exceeds cap");
    for (const auto& j : alg.seqs()) blocks_.emplace(j, make_blocks(j));
    for (const auto& i : alg.seqs())
      for (const auto& w : alg.perms()) {
        ColorSeq j = perm_act(w, i);
        for (const auto& beta : artin_monomials(j)) {
          index_.emplace(std::make_tuple(i, w, beta.e), static_cast<int>(basis_.size()));
          basis_.push_back({i, w, beta});
          A_.degree.push_back(alg.term_degree(i, w, beta));
        }
      }
    A_.dim = static_cast<int>(basis_.size());
    A_.unit = to_r0(alg.unit());
    if (with_products) build_products();
  }

  const KLRAlgebra& algebra() const { return alg_; }
  const FinGradedAlg& alg() const { return A_; }
  const std::vector<BasisElem>& basis() const { return basis_; }
  int dim() const { return A_.dim; }

  /// Artin monomials: in each color block the t-th position (from 0) has exponent at most t.
  std::vector<Monomial> artin_monomials(const ColorSeq& j) const {
    std::vector<Monomial> out{Monomial{}};
    for (const auto& blk : blocks_.at(j).positions) {
      std::vector<Monomial> next;
      std::vector<int> e(blk.size(), 0);
      while (true) {
        for (const auto& mono : out) {
          Monomial mm = mono;
          for (size_t t = 0; t < blk.size(); ++t) mm[blk[t]] = static_cast<int16_t>(e[t]);
          next.push_back(mm);
        }
        size_t t = 0;
        while (t < blk.size()) {
          if (e[t] < static_cast<int>(t)) {
            ++e[t];
            break;
          }
          e[t] = 0;
          ++t;
        }
        if (t == blk.size()) break;
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
  }

  /// Normal form of f modulo the symmetric polynomials of positive degree in each color block of j.
  MultiPoly reduce_poly(const ColorSeq& j, const MultiPoly& f) const {
    const Blocks& bl = blocks_.at(j);
    MultiPoly result(m_), work = f;
    while (!work.is_zero()) {
      Monomial mono = work.leading_monomial();
      mpq_class c = work.leading_coeff();
      work.add_term(mono, -c);
      bool reduced = false;
      for (size_t b = 0; b < bl.positions.size() && !reduced; ++b) {
        const auto& blk = bl.positions[b];
        for (size_t t = 0; t < blk.size(); ++t) {
          if (mono[blk[t]] < static_cast<int>(t) + 1) continue;
          // y_t^{t+1} = y_t^{t+1} - h_{t+1}(y_t, ..., y_n) modulo the ideal.
          Monomial rest = mono;
          rest[blk[t]] = static_cast<int16_t>(rest[blk[t]] - (t + 1));
          work += bl.tails[b][t].mul_monomial(rest, c);
          reduced = true;
          break;
        }
      }
      if (!reduced) result.add_term(mono, c);
    }
    return result;
  }

  Vec to_r0(const KLRElement& z) const {
    Vec v(static_cast<size_t>(A_.dim), 0);
    for (const auto& [key, f] : z.terms()) {
      ColorSeq j = perm_act(key.second, key.first);
      MultiPoly g = reduce_poly(j, f);
      for (const auto& [mono, c] : g.terms()) v[static_cast<size_t>(index_.at(std::make_tuple(key.first, key.second, mono.e)))] += c;
    }
    return v;
  }
  KLRElement to_klr(const Vec& v) const {
    KLRElement z;
    for (int a = 0; a < A_.dim; ++a)
      if (v[static_cast<size_t>(a)] != 0) {
        const auto& b = basis_[static_cast<size_t>(a)];
        z.add(b.source, b.w, MultiPoly(m_, b.beta, v[static_cast<size_t>(a)]));
      }
    return z;
  }
  KLRElement element(int a) const {
    const auto& b = basis_[static_cast<size_t>(a)];
    return KLRElement::term(b.source, b.w, MultiPoly(m_, b.beta));
  }

 private:
  struct Blocks {
    std::vector<std::vector<int>> positions;
    std::vector<std::vector<MultiPoly>> tails;  // tails[b][t] = y_t^{t+1} - h_{t+1}(y_t..y_n)
  };

  Blocks make_blocks(const ColorSeq& j) const {
    Blocks bl;
    std::map<int, std::vector<int>> by_color;
    for (int k = 0; k < m_; ++k) by_color[j[static_cast<size_t>(k)]].push_back(k);
    for (const auto& [c, pos] : by_color) {
      bl.positions.push_back(pos);
      std::vector<MultiPoly> tails;
      for (size_t t = 0; t < pos.size(); ++t) {
        int deg = static_cast<int>(t) + 1;
        std::vector<int> vars(pos.begin() + static_cast<long>(t), pos.end());
        MultiPoly h(m_);
        for (const auto& mono : monomials_of_degree(static_cast<int>(vars.size()), deg)) {
          Monomial mm;
          for (size_t v = 0; v < vars.size(); ++v) mm[vars[v]] = mono[static_cast<int>(v)];
          h.add_term(mm, 1);
        }
        tails.push_back(MultiPoly(m_, Monomial::var(pos[t], deg)) - h);
      }
      bl.tails.push_back(std::move(tails));
    }
    return bl;
  }

  void build_products() {
    int n = A_.dim;
    A_.mult.assign(static_cast<size_t>(n), std::vector<SVec>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a) {
      const auto& ba = basis_[static_cast<size_t>(a)];
      KLRElement za = element(a);
      for (int b = 0; b < n; ++b) {
        const auto& bb = basis_[static_cast<size_t>(b)];
        if (perm_act(bb.w, bb.source) != ba.source) continue;
        Vec v = to_r0(alg_.multiply(za, element(b)));
        SVec s;
        for (int c = 0; c < n; ++c)
          if (v[static_cast<size_t>(c)] != 0) s.emplace_back(c, v[static_cast<size_t>(c)]);
        A_.mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(s);
      }
    }
  }

  const KLRAlgebra& alg_;
  int m_;
  std::map<ColorSeq, Blocks> blocks_;
  std::vector<BasisElem> basis_;
  std::map<std::tuple<ColorSeq, Perm, std::array<int16_t, kMaxVars>>, int> index_;
  FinGradedAlg A_;
};

/// A simple graded module realized as a minimal left ideal B e of the semisimple quotient.
struct SimpleModule {
  std::string label;
  std::vector<Vec> basis;   // vectors in the coordinates of the semisimple quotient
  std::vector<int> degree;  // normalized degrees
  int shift = 0;            // added to intrinsic degrees to make the graded dimension bar-symmetric
  QLaurent grdim;
  std::map<ColorSeq, QLaurent> character;  // grdim(1_i L)
  Vec idempotent;                          // primitive idempotent e with L = B e
  Vec lifted;                              // an idempotent of R0 lifting e
  int multiplicity = 0;                    // number of copies of L in B (up to shift)
};

/// Multiplicities of indecomposable projectives, keyed by simple-module label.
struct KClass {
  DimVector nu;
  std::map<std::string, QLaurent> coeff;

  bool operator==(const KClass& o) const { return coeff == o.coeff; }
  bool operator!=(const KClass& o) const { return !(*this == o); }
  KClass& operator+=(const KClass& o) {
    for (const auto& [k, v] : o.coeff) {
      coeff[k] += v;
      if (coeff[k].is_zero()) coeff.erase(k);
    }
    return *this;
  }
  KClass scaled(const QLaurent& s) const {
    KClass r{nu, {}};
    for (const auto& [k, v] : coeff) {
      QLaurent t = v * s;
      if (!t.is_zero()) r.coeff[k] = t;
    }
    return r;
  }
  KClass operator-(const KClass& o) const {
    KClass r = *this;
    r += o.scaled(QLaurent(-1));
    return r;
  }
  bool is_zero() const { return coeff.empty(); }
  bool nonneg_integral() const {
    for (const auto& [k, v] : coeff)
      if (!v.is_nonneg_integral()) return false;
    return true;
  }
  std::string str() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : coeff) {
      if (!s.empty()) s += " + ";
      s += "(" + v.str() + ")[" + k + "]";
    }
    return s;
  }
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : coeff) j[k] = v.to_json();
    return j;
  }
};

/// Radical, simple modules and projective decompositions for one dimension vector.
class FiniteQuotient {
 public:
  explicit FiniteQuotient(const KLRAlgebra& alg, int cap = 4) : alg_(alg), r0_(alg, cap) {
    compute_radical();
    build_semisimple();
    find_simples();
  }

  const KLRAlgebra& algebra() const { return alg_; }
  const R0Quotient& r0() const { return r0_; }
  const std::vector<std::vector<Vec>>& radical_by_degree() const { return rad_by_deg_; }
  int radical_dim() const { return static_cast<int>(rad_rows_.size()); }
  int semisimple_dim() const { return static_cast<int>(comp_.size()); }
  const std::vector<SimpleModule>& simples() const { return simples_; }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& s : simples_) out.push_back(s.label);
    return out;
  }

  /// Radical of the degree-0 subalgebra (trace form of its own regular representation).
  int degree0_radical_dim() const {
    const auto& A = r0_.alg();
    std::vector<int> idx;
    for (int a = 0; a < A.dim; ++a)
      if (A.degree[static_cast<size_t>(a)] == 0) idx.push_back(a);
    size_t n = idx.size();
    std::map<int, size_t> pos;
    for (size_t k = 0; k < n; ++k) pos[idx[k]] = k;
    // trace of left multiplication by b_a on A_0
    Vec tr(static_cast<size_t>(A.dim), 0);
    for (int a = 0; a < A.dim; ++a)
      for (int c : idx)
        for (const auto& [k, v] : A.mult[static_cast<size_t>(a)][static_cast<size_t>(c)])
          if (k == c) tr[static_cast<size_t>(a)] += v;
    Mat T = zero_mat(n, n);
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        for (const auto& [k, v] : A.mult[static_cast<size_t>(idx[x])][static_cast<size_t>(idx[y])]) T[x][y] += v * tr[static_cast<size_t>(k)];
    return static_cast<int>(n - rank(T));
  }
  /// dim(J intersected with A_0).
  int radical_degree0_dim() const {
    const auto& A = r0_.alg();
    int n = 0;
    for (const auto& row : rad_rows_) {
      int d = 0;
      for (int a = 0; a < A.dim; ++a)
        if (row[static_cast<size_t>(a)] != 0) {
          d = A.degree[static_cast<size_t>(a)];
          break;
        }
      n += (d == 0);
    }
    return n;
  }

  /// Graded dimension of Hom(P_L, P_L') with both projectives normalized by their tops.
  QLaurent hom_grdim(const SimpleModule& L, const SimpleModule& Lp) const {
    const auto& A = r0_.alg();
    std::map<int, std::vector<Vec>> by_deg;
    for (int b = 0; b < A.dim; ++b) {
      Vec v = A.mul(A.mul(L.lifted, A.basis_vec(b)), Lp.lifted);
      if (!is_zero_vec(v)) by_deg[A.degree[static_cast<size_t>(b)] + Lp.shift - L.shift].push_back(v);
    }
    QLaurent r;
    Mat acc;
    for (auto& [d, vs] : by_deg) {
      size_t before = rank(acc);
      for (auto& v : vs) acc.push_back(v);
      r.add(d, static_cast<long>(rank(acc) - before));
    }
    return r;
  }

  /// The basic algebra End(sum of P_L) is non-negatively graded with degree-0 part spanned by the identities.
  bool basic_algebra_positive() const {
    for (const auto& L : simples_)
      for (const auto& Lp : simples_) {
        QLaurent h = hom_grdim(L, Lp);
        if (!h.is_zero() && h.min_exp() < 0) return false;
        if (h.coeff(0) != (L.label == Lp.label ? 1 : 0)) return false;
      }
    return true;
  }

  /// R0 regraded by a complete set of lifted primitive idempotents f_a:
  /// f_a x f_b gets degree deg x + shift(b) - shift(a).
  struct ExtGrading {
    int min_degree = 0;
    int deg0_dim = 0;
    int deg0_expected = 0;  // sum of squared multiplicities
    int deg0_radical = 0;
    bool ok() const { return min_degree >= 0 && deg0_dim == deg0_expected && deg0_radical == 0; }
  };
  ExtGrading ext_grading() const {
    const auto& A = r0_.alg();
    // Lift the orthogonal primitive idempotents one corner at a time.
    std::vector<Vec> f;
    Vec rest = A.unit;
    for (size_t a = 0; a + 1 < prim_.size(); ++a) {
      Vec pre(static_cast<size_t>(A.dim), 0);
      for (size_t k = 0; k < comp_.size(); ++k) pre[static_cast<size_t>(comp_[k])] = prim_[a][k];
      Vec fa = lift_in_corner(A.mul(A.mul(rest, pre), rest));
      for (size_t k = 0; k < rest.size(); ++k) rest[k] -= fa[k];
      f.push_back(fa);
    }
    f.push_back(rest);
    ExtGrading g;
    g.min_degree = 1 << 20;
    Mat D;
    auto sparse = [](const Vec& v) {
      SparseEchelon::SVec s;
      for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) s.emplace(static_cast<long>(k), v[k]);
      return s;
    };
    for (size_t a = 0; a < f.size(); ++a)
      for (size_t b = 0; b < f.size(); ++b) {
        int sa = prim_shift_[a], sb = prim_shift_[b];
        SparseEchelon acc;
        for (int t = 0; t < A.dim; ++t) {
          Vec v = A.mul(A.mul(f[a], A.basis_vec(t)), f[b]);
          if (is_zero_vec(v) || !acc.insert(sparse(v))) continue;
          int d = A.degree[static_cast<size_t>(t)] + sb - sa;
          g.min_degree = std::min(g.min_degree, d);
          if (d == 0) D.push_back(v);
        }
      }
    for (const auto& L : simples_) g.deg0_expected += L.multiplicity * L.multiplicity;
    size_t n = D.size();
    g.deg0_dim = static_cast<int>(n);
    // Coordinates in the basis D through an invertible n x n minor.
    Mat Dr = D;
    auto piv = rref(Dr);
    Mat S = zero_mat(n, n);
    for (size_t k = 0; k < n; ++k)
      for (size_t c = 0; c < n; ++c) S[k][c] = D[k][piv[c]];
    Mat Sinv = *invert(S);
    auto coords = [&](const Vec& v) {
      Vec c(n, 0);
      for (size_t l = 0; l < n; ++l)
        for (size_t r = 0; r < n; ++r) c[l] += v[piv[r]] * Sinv[r][l];
      Vec back(v.size(), 0);
      for (size_t k = 0; k < n; ++k)
        if (c[k] != 0)
          for (size_t r = 0; r < v.size(); ++r) back[r] += c[k] * D[k][r];
      if (back != v) throw std::logic_error("ext_grading: degree-0 part not closed under multiplication");
      return c;
    };
    // Structure constants, then the trace form tr(L_{D_k D_l}) of the regular representation.
    std::vector<std::vector<Vec>> C(n, std::vector<Vec>(n));
    for (size_t k = 0; k < n; ++k)
      for (size_t l = 0; l < n; ++l) C[k][l] = coords(A.mul(D[k], D[l]));
    Vec tr(n, 0);
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) tr[j] += C[j][l][l];
    Mat T = zero_mat(n, n);
    for (size_t k = 0; k < n; ++k)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) T[k][l] += C[k][l][j] * tr[j];
    g.deg0_radical = static_cast<int>(n - rank(T));
    return g;
  }

  /// B-coordinates of an element of R.
  Vec to_B(const KLRElement& z) const { return reduce(r0_.to_r0(z)); }

  /// grdim(1_y L) with the normalized grading of L, for an idempotent-like homogeneous degree-0 element.
  QLaurent image_grdim(const Vec& eB, const SimpleModule& L) const {
    std::map<int, std::vector<Vec>> by_deg;
    for (size_t k = 0; k < L.basis.size(); ++k) by_deg[L.degree[k]].push_back(mulB(eB, L.basis[k]));
    QLaurent r;
    for (auto& [d, vs] : by_deg) r.add(d, static_cast<long>(rank(vs)));
    return r;
  }

  /// Idempotent 1_y: longest-word sigma times the staircase monomial on every block.
  KLRElement divided_idempotent(const DivSeq& y) const {
    ColorSeq s = expand(y);
    int m = alg_.m();
    Perm w0 = identity_perm(m);
    Monomial delta;
    int start = 0;
    for (int a : y.powers) {
      for (int t = 0; t < a; ++t) {
        w0[static_cast<size_t>(start + t)] = start + a - 1 - t;
        delta[start + t] = static_cast<int16_t>(a - 1 - t);
      }
      start += a;
    }
    return alg_.multiply(alg_.pbw_basis(s, w0), KLRElement::term(s, identity_perm(m), MultiPoly(m, delta)));
  }

  /// [R_y] as a combination of indecomposable projectives (through simple modules).
  KClass decompose_projective(const DivSeq& y) const {
    check_y(y);
    Vec e = to_B(divided_idempotent(y));
    KClass k{alg_.nu(), {}};
    QLaurent shift = QLaurent::monomial(ell_powers(y.powers));
    for (const auto& L : simples_) {
      QLaurent g = image_grdim(e, L) * shift;
      if (!g.is_zero()) k.coeff[L.label] = g;
    }
    return k;
  }

  /// Same decomposition through graded block dimensions: grdim(1_y B_L) / sqrt(grdim B_L).
  KClass decompose_projective_trace(const DivSeq& y) const {
    check_y(y);
    Vec e = to_B(divided_idempotent(y));
    KClass k{alg_.nu(), {}};
    QLaurent shift = QLaurent::monomial(ell_powers(y.powers));
    for (size_t s = 0; s < simples_.size(); ++s) {
      const auto& blk = blocks_[s];
      QLaurent whole, part;
      std::map<int, std::vector<Vec>> by_deg;
      for (size_t t = 0; t < blk.size(); ++t) {
        whole.add(blk_deg_[s][t], 1);
        by_deg[blk_deg_[s][t]].push_back(mulB(e, blk[t]));
      }
      for (auto& [d, vs] : by_deg) part.add(d, static_cast<long>(rank(vs)));
      QLaurent root = laurent_sqrt(whole);
      QLaurent g = part.divide_exact(root) * shift;
      if (!g.is_zero()) k.coeff[simples_[s].label] = g;
    }
    return k;
  }

  /// Whether R_y has a simple top: its class is a single q^k [P_L].
  bool has_simple_top(const DivSeq& y) const {
    KClass k = decompose_projective(y);
    return k.coeff.size() == 1 && k.coeff.begin()->second.is_unit() && k.coeff.begin()->second.coeffs().begin()->second == 1;
  }

  /// Symmetric square root with positive leading coefficient.
  static QLaurent laurent_sqrt(const QLaurent& g) {
    if (g.is_zero()) return g;
    int top = g.max_exp(), bot = g.min_exp();
    if ((top - bot) % 2 || top % 2) throw std::runtime_error("laurent_sqrt: not a square");
    mpq_class lead = g.coeff(top);
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), lead.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), lead.get_den().get_mpz_t());
    mpq_class r0(rn, rd);
    if (r0 * r0 != lead) throw std::runtime_error("laurent_sqrt: leading coefficient not a square");
    int h = top / 2;
    QLaurent p = QLaurent::monomial(h, r0);
    for (int e = h - 1; e >= bot / 2; --e) {
      QLaurent rem = g - p * p;
      mpq_class c = rem.coeff(h + e) / (2 * r0);
      p.add(e, c);
    }
    if (p * p != g) throw std::runtime_error("laurent_sqrt: not a square");
    return p;
  }

  Vec mulB(const Vec& x, const Vec& y) const {
    size_t n = comp_.size();
    Vec r(n, 0);
    for (size_t a = 0; a < n; ++a) {
      if (x[a] == 0) continue;
      for (size_t b = 0; b < n; ++b) {
        if (y[b] == 0) continue;
        mpq_class s = x[a] * y[b];
        for (const auto& [c, v] : Bmult_[a][b]) r[static_cast<size_t>(c)] += s * v;
      }
    }
    return r;
  }

 private:
  void check_y(const DivSeq& y) const {
    if (y.weight(alg_.quiver().num_vertices()) != alg_.nu()) throw std::invalid_argument("decompose_projective: y has the wrong weight");
  }

  void compute_radical() {
    const auto& A = r0_.alg();
    Vec tr = A.traces();
    std::map<int, std::vector<int>> by_deg;
    for (int a = 0; a < A.dim; ++a) by_deg[A.degree[static_cast<size_t>(a)]].push_back(a);
    for (const auto& [d, idx] : by_deg) {
      auto it = by_deg.find(-d);
      Mat T;
      if (it != by_deg.end()) {
        T = zero_mat(it->second.size(), idx.size());
        for (size_t y = 0; y < it->second.size(); ++y)
          for (size_t x = 0; x < idx.size(); ++x)
            for (const auto& [k, v] : A.mult[static_cast<size_t>(idx[x])][static_cast<size_t>(it->second[y])])
              T[y][x] += v * tr[static_cast<size_t>(k)];
      }
      auto ns = nullspace(T, idx.size());
      std::vector<Vec> rows;
      for (const auto& v : ns) {
        Vec full(static_cast<size_t>(A.dim), 0);
        for (size_t x = 0; x < idx.size(); ++x) full[static_cast<size_t>(idx[x])] = v[x];
        rows.push_back(full);
      }
      if (!rows.empty()) {
        Mat R = rows;
        auto piv = rref(R);
        R.resize(piv.size());
        for (size_t r = 0; r < R.size(); ++r) {
          rad_rows_.push_back(R[r]);
          rad_piv_.push_back(static_cast<int>(piv[r]));
        }
        rad_by_deg_.push_back(R);
      }
    }
    std::vector<bool> is_piv(static_cast<size_t>(A.dim), false);
    for (int p : rad_piv_) is_piv[static_cast<size_t>(p)] = true;
    for (int a = 0; a < A.dim; ++a)
      if (!is_piv[static_cast<size_t>(a)]) comp_.push_back(a);
  }

  /// A-coordinates to B-coordinates (reduce modulo the radical).
  Vec reduce(Vec v) const {
    for (size_t r = 0; r < rad_rows_.size(); ++r) {
      mpq_class f = v[static_cast<size_t>(rad_piv_[r])];
      if (f == 0) continue;
      for (size_t a = 0; a < v.size(); ++a)
        if (rad_rows_[r][a] != 0) v[a] -= f * rad_rows_[r][a];
    }
    Vec out(comp_.size());
    for (size_t k = 0; k < comp_.size(); ++k) out[k] = v[static_cast<size_t>(comp_[k])];
    return out;
  }

  /// Lift an idempotent of B to R0 by iterating a -> 3a^2 - 2a^3.
  Vec lift_idempotent(const Vec& eB) const {
    const auto& A = r0_.alg();
    Vec a(static_cast<size_t>(A.dim), 0);
    for (size_t k = 0; k < comp_.size(); ++k) a[static_cast<size_t>(comp_[k])] = eB[k];
    return lift_in_corner(a);
  }
  Vec lift_in_corner(Vec a) const {
    const auto& A = r0_.alg();
    for (int it = 0; it < 64; ++it) {
      Vec a2 = A.mul(a, a);
      if (a2 == a) return a;
      Vec a3 = A.mul(a2, a);
      for (size_t k = 0; k < a.size(); ++k) a[k] = 3 * a2[k] - 2 * a3[k];
    }
    throw std::logic_error("lift_idempotent: no convergence");
  }

  void build_semisimple() {
    const auto& A = r0_.alg();
    size_t n = comp_.size();
    Bmult_.assign(n, std::vector<SVec>(n));
    Bdeg_.resize(n);
    for (size_t a = 0; a < n; ++a) {
      Bdeg_[a] = A.degree[static_cast<size_t>(comp_[a])];
      for (size_t b = 0; b < n; ++b) {
        Vec full(static_cast<size_t>(A.dim), 0);
        for (const auto& [c, v] : A.mult[static_cast<size_t>(comp_[a])][static_cast<size_t>(comp_[b])]) full[static_cast<size_t>(c)] = v;
        Vec red = reduce(full);
        SVec s;
        for (size_t c = 0; c < n; ++c)
          if (red[c] != 0) s.emplace_back(static_cast<int>(c), red[c]);
        Bmult_[a][b] = std::move(s);
      }
    }
  }

  Vec unitB(size_t k) const {
    Vec v(comp_.size(), 0);
    v[k] = 1;
    return v;
  }

  /// Independent vectors among e b e for degree-0 basis elements b.
  std::vector<Vec> corner0(const Vec& e) const {
    std::vector<Vec> out;
    Mat acc;
    for (size_t b = 0; b < comp_.size(); ++b) {
      if (Bdeg_[b] != 0) continue;
      Vec v = mulB(mulB(e, unitB(b)), e);
      if (is_zero_vec(v)) continue;
      Mat test = acc;
      test.push_back(v);
      if (rank(test) > acc.size()) {
        acc.push_back(v);
        out.push_back(v);
      }
    }
    return out;
  }

  /// Minimal polynomial of z in the corner algebra with identity e.
  UPoly minpoly(const Vec& z, const Vec& e) const {
    std::vector<Vec> pw{e};
    while (true) {
      Vec next = mulB(z, pw.back());
      // solve next = sum c_j pw[j]
      Mat M = zero_mat(next.size(), pw.size());
      for (size_t r = 0; r < next.size(); ++r)
        for (size_t j = 0; j < pw.size(); ++j) M[r][j] = pw[j][r];
      auto sol = solve(M, next);
      if (sol) {
        UPoly p;
        p.c.assign(pw.size() + 1, 0);
        for (size_t j = 0; j < pw.size(); ++j) p.c[j] = -(*sol)[j];
        p.c.back() = 1;
        return p;
      }
      pw.push_back(next);
      if (pw.size() > comp_.size() + 2) throw std::logic_error("minpoly: no dependency found");
    }
  }

  Vec eval_poly(const UPoly& p, const Vec& z, const Vec& e) const {
    Vec acc(comp_.size(), 0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
      acc = mulB(acc, z);
      for (size_t k = 0; k < acc.size(); ++k) acc[k] += *it * e[k];
    }
    return acc;
  }

  /// Proper idempotent e' in the corner of e, or nullopt when none was found.
  std::optional<Vec> split(const Vec& e, const std::vector<Vec>& C) const {
    auto is_nilpotent = [](const UPoly& p) {
      for (int k = 0; k < p.deg(); ++k)
        if (p.c[static_cast<size_t>(k)] != 0) return false;
      return true;
    };
    std::vector<Vec> cands = C;
    for (size_t a = 0; a < C.size(); ++a)
      for (size_t b = a + 1; b < C.size(); ++b) {
        Vec s = C[a];
        for (size_t k = 0; k < s.size(); ++k) s[k] += (b + 1) * C[b][k];
        cands.push_back(s);
      }
    for (const auto& c : cands) {
      UPoly mu = minpoly(c, e);
      if (mu.deg() <= 1) continue;
      auto roots = rational_roots(mu);
      if (roots.empty()) continue;
      Vec z = c;
      for (size_t k = 0; k < z.size(); ++k) z[k] -= roots.front() * e[k];
      UPoly mz = minpoly(z, e);
      if (is_nilpotent(mz)) {
        bool found = false;
        for (const auto& b : C) {
          Vec zb = mulB(z, b);
          UPoly mzb = minpoly(zb, e);
          if (!is_nilpotent(mzb)) {
            z = zb;
            mz = mzb;
            found = true;
            break;
          }
        }
        if (!found) continue;
      }
      int a = 0;
      while (mz.c[static_cast<size_t>(a)] == 0) ++a;
      if (a == 0) continue;
      UPoly ta = UPoly::monomial(a);
      UPoly g = mz.divmod(ta).first;
      if (g.deg() < 1) continue;
      auto [u, v] = ext_gcd(ta, g);
      UPoly p = (u * ta).divmod(mz).second;
      Vec ep = eval_poly(p, z, e);
      if (is_zero_vec(ep) || ep == e) continue;
      return ep;
    }
    return std::nullopt;
  }

  void find_simples() {
    // Start from the images of the sequence idempotents and refine.
    std::vector<Vec> todo, prim;
    for (const auto& i : alg_.seqs()) todo.push_back(to_B(alg_.gen_idem(i)));
    while (!todo.empty()) {
      Vec e = todo.back();
      todo.pop_back();
      auto C = corner0(e);
      if (C.size() == 1) {
        prim.push_back(e);
        continue;
      }
      auto ep = split(e, C);
      if (!ep) throw std::runtime_error("semisimple quotient does not split over the rationals (no idempotent found)");
      Vec rest = e;
      for (size_t k = 0; k < rest.size(); ++k) rest[k] -= (*ep)[k];
      todo.push_back(*ep);
      todo.push_back(rest);
    }
    // Group primitive idempotents by isomorphism: e ~ f iff e B f != 0.
    std::vector<int> cls(prim.size(), -1);
    std::vector<std::vector<size_t>> classes;
    for (size_t a = 0; a < prim.size(); ++a) {
      if (cls[a] >= 0) continue;
      cls[a] = static_cast<int>(classes.size());
      classes.push_back({a});
      for (size_t b = a + 1; b < prim.size(); ++b) {
        if (cls[b] >= 0) continue;
        bool linked = false;
        for (size_t t = 0; t < comp_.size() && !linked; ++t) linked = !is_zero_vec(mulB(mulB(prim[a], unitB(t)), prim[b]));
        if (linked) {
          cls[b] = cls[a];
          classes.back().push_back(b);
        }
      }
    }
    struct Found {
      SimpleModule mod;
      std::vector<Vec> block;
      std::vector<int> block_deg;
      std::string key;
    };
    std::vector<Found> found;
    for (const auto& members : classes) {
      Found f;
      const Vec& e = prim[members.front()];
      f.mod.idempotent = e;
      f.mod.multiplicity = static_cast<int>(members.size());
      if (mulB(mulB(e, e), e) != e) throw std::logic_error("primitive idempotent check failed");
      // L = B e with homogeneous basis b_t e.
      Mat acc;
      std::vector<int> degs;
      for (size_t t = 0; t < comp_.size(); ++t) {
        Vec v = mulB(unitB(t), e);
        if (is_zero_vec(v)) continue;
        Mat test = acc;
        test.push_back(v);
        if (rank(test) > acc.size()) {
          acc.push_back(v);
          degs.push_back(Bdeg_[t]);
        }
      }
      // eBe must be one-dimensional for a split simple block.
      Mat ebe;
      for (size_t t = 0; t < comp_.size(); ++t) ebe.push_back(mulB(mulB(e, unitB(t)), e));
      if (rank(ebe) != 1) throw std::runtime_error("endomorphism ring of a simple module is not the ground field");
      int lo = *std::min_element(degs.begin(), degs.end()), hi = *std::max_element(degs.begin(), degs.end());
      if ((lo + hi) % 2) throw std::runtime_error("simple module has no bar-symmetric grading shift");
      f.mod.shift = -(lo + hi) / 2;
      f.mod.basis = acc;
      for (int d : degs) {
        f.mod.degree.push_back(d + f.mod.shift);
        f.mod.grdim.add(d + f.mod.shift, 1);
      }
      if (f.mod.grdim.bar() != f.mod.grdim) throw std::runtime_error("simple module graded dimension is not bar-symmetric");
      for (const auto& i : alg_.seqs()) {
        QLaurent g = image_grdim(to_B(alg_.gen_idem(i)), f.mod);
        if (!g.is_zero()) f.mod.character[i] = g;
      }
      // Block B e B, with degrees.
      Mat bacc;
      for (size_t s = 0; s < comp_.size(); ++s)
        for (size_t t = 0; t < acc.size(); ++t) {
          Vec v = mulB(mulB(acc[t], e), unitB(s));
          if (is_zero_vec(v)) continue;
          Mat test = bacc;
          test.push_back(v);
          if (rank(test) > bacc.size()) {
            bacc.push_back(v);
            f.block_deg.push_back(f.mod.degree[t] - f.mod.shift + Bdeg_[s]);
          }
        }
      f.block = bacc;
      const Quiver& q = alg_.quiver();
      for (const auto& [i, g] : f.mod.character) f.key += seq_str(q, i) + ":" + g.str() + ";";
      found.push_back(std::move(f));
    }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.key < b.key; });
    for (auto& f : found) f.mod.lifted = lift_idempotent(f.mod.idempotent);
    prim_ = prim;
    for (const auto& e : prim) {
      // e B e_L is one-dimensional and homogeneous; its degree is the relative shift.
      int which = -1, d = 0;
      for (size_t k = 0; k < found.size() && which < 0; ++k)
        for (size_t t = 0; t < comp_.size() && which < 0; ++t)
          if (!is_zero_vec(mulB(mulB(e, unitB(t)), found[k].mod.idempotent))) {
            which = static_cast<int>(k);
            d = Bdeg_[t];
          }
      prim_simple_.push_back(which);
      prim_shift_.push_back(found[static_cast<size_t>(which)].mod.shift + d);
    }
    for (size_t k = 0; k < found.size(); ++k) {
      found[k].mod.label = "L" + std::to_string(k + 1);
      simples_.push_back(found[k].mod);
      blocks_.push_back(found[k].block);
      blk_deg_.push_back(found[k].block_deg);
    }
  }

  const KLRAlgebra& alg_;
  R0Quotient r0_;
  std::vector<Vec> rad_rows_;
  std::vector<int> rad_piv_;
  std::vector<std::vector<Vec>> rad_by_deg_;
  std::vector<int> comp_;
  std::vector<std::vector<SVec>> Bmult_;
  std::vector<int> Bdeg_;
  std::vector<SimpleModule> simples_;
  std::vector<Vec> prim_;
  std::vector<int> prim_simple_;
  std::vector<int> prim_shift_;
  std::vector<std::vector<Vec>> blocks_;
  std::vector<std::vector<int>> blk_deg_;
};

}  // namespace klr
