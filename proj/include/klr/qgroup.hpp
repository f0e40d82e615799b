// Word space of the free algebra on theta_i, its symmetric form, the quantum
// Serre relations, and the comparison of K(R) with f.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "findim.hpp"
#include "ratfunc.hpp"
#include "report.hpp"

namespace klr {

/// Laurent polynomial in q as a rational function in one variable.
inline RatFunc to_ratfunc(const QLaurent& f) {
  if (f.is_zero()) return RatFunc(1);
  int lo = f.min_exp();
  MultiPoly num(1);
  for (const auto& [e, c] : f.coeffs()) num.add_term(Monomial::var(0, e - lo), c);
  if (lo >= 0) return RatFunc(num.mul_monomial(Monomial::var(0, lo)));
  return RatFunc(num, MultiPoly(1, Monomial::var(0, -lo)));
}

/// Inverse of to_ratfunc; nullopt unless the denominator is a power of q.
inline std::optional<QLaurent> to_laurent(const RatFunc& f) {
  if (f.is_zero()) return QLaurent();
  const MultiPoly& d = f.den();
  if (d.size() != 1) return std::nullopt;
  int k = d.leading_monomial()[0];
  mpq_class dc = d.leading_coeff();
  QLaurent r;
  for (const auto& [m, c] : f.num().terms()) r.add(m[0] - k, c / dc);
  return r;
}

/// Element of the word space: a Q(q)-combination of words theta_{i_1} ... theta_{i_m}.
using WordVec = std::map<ColorSeq, RatFunc>;

inline void add_to(WordVec& v, const ColorSeq& w, const RatFunc& c) {
  auto it = v.find(w);
  if (it == v.end()) {
    if (!c.is_zero()) v.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

/// theta_y = theta_{i_1}^{(a_1)} ... expanded into words.
inline WordVec theta_expansion(const DivSeq& y) {
  WordVec v;
  add_to(v, expand(y), to_ratfunc(QLaurent(1)) / to_ratfunc(qfact(y.powers)));
  return v;
}

/// Concatenation product of word-space elements.
inline WordVec concat(const WordVec& a, const WordVec& b) {
  WordVec r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      ColorSeq w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_to(r, w, ca * cb);
    }
  return r;
}

/// sum_p (-1)^p theta_i^{(p)} theta_j theta_i^{(a-p)} with a = 1 - cartan(i, j).
inline WordVec serre_element(const Quiver& q, int i, int j) {
  if (i == j) throw std::invalid_argument("serre_element: needs two distinct vertices");
  int a = 1 - q.cartan(i, j);
  WordVec v;
  for (int p = 0; p <= a; ++p) {
    DivSeq y;
    if (p > 0) {
      y.colors.push_back(i);
      y.powers.push_back(p);
    }
    y.colors.push_back(j);
    y.powers.push_back(1);
    if (a - p > 0) {
      y.colors.push_back(i);
      y.powers.push_back(a - p);
    }
    for (const auto& [w, c] : theta_expansion(y)) add_to(v, w, (p % 2 ? -c : c));
  }
  return v;
}

/// Weight of a nonzero homogeneous word-space element.
inline DimVector word_weight(const Quiver& q, const WordVec& v) {
  if (v.empty()) throw std::invalid_argument("word_weight: zero element");
  return DimVector::of_sequence(v.begin()->first, q.num_vertices());
}

/// Gram matrix entry: sum over w with w(i) = j of q^{-sum over inversions of i_a . i_b}.
inline QLaurent form_entry(const Quiver& q, const ColorSeq& i, const ColorSeq& j) {
  QLaurent r;
  int m = static_cast<int>(i.size());
  for (const auto& w : all_perms(m)) {
    if (perm_act(w, i) != j) continue;
    int e = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)]) e -= q.cartan(i[static_cast<size_t>(a)], i[static_cast<size_t>(b)]);
    r.add(e, 1);
  }
  return r;
}

/// Gram matrix on the words of weight nu, in the order of sequences(nu).
inline std::vector<std::vector<QLaurent>> form_gram(const Quiver& q, const DimVector& nu) {
  auto seqs = sequences(nu);
  std::vector<std::vector<QLaurent>> g(seqs.size(), std::vector<QLaurent>(seqs.size()));
  for (size_t a = 0; a < seqs.size(); ++a)
    for (size_t b = 0; b < seqs.size(); ++b) g[a][b] = form_entry(q, seqs[a], seqs[b]);
  return g;
}

inline std::vector<std::vector<RatFunc>> to_ratfunc_matrix(const std::vector<std::vector<QLaurent>>& m) {
  std::vector<std::vector<RatFunc>> r;
  for (const auto& row : m) {
    std::vector<RatFunc> rr;
    for (const auto& x : row) rr.push_back(to_ratfunc(x));
    r.push_back(rr);
  }
  return r;
}

/// dim f_nu = rank over Q(q) of the Gram matrix.
inline int f_dim(const Quiver& q, const DimVector& nu) {
  if (nu.total() == 0) return 1;
  return static_cast<int>(rank_over(to_ratfunc_matrix(form_gram(q, nu))));
}

/// Whether v lies in the radical of the form.
inline bool in_radical(const Quiver& q, const WordVec& v) {
  if (v.empty()) return true;
  DimVector nu = word_weight(q, v);
  for (const auto& j : sequences(nu)) {
    RatFunc s(1);
    for (const auto& [i, c] : v) s += c * to_ratfunc(form_entry(q, i, j));
    if (!s.is_zero()) return false;
  }
  return true;
}

/// Classes in K of the algebras R_nu, with cached finite quotients.
class KRing {
 public:
  explicit KRing(Quiver q, int cap = 4) : q_(std::move(q)), cap_(cap) {}

  const Quiver& quiver() const { return q_; }

  const FiniteQuotient& quotient(const DimVector& nu) {
    auto it = cache_.find(nu.coords);
    if (it != cache_.end()) return *it->second.fq;
    Entry e;
    e.alg = std::make_unique<KLRAlgebra>(q_, nu);
    e.fq = std::make_unique<FiniteQuotient>(*e.alg, cap_);
    return *cache_.emplace(nu.coords, std::move(e)).first->second.fq;
  }

  /// [R_y] in the basis of indecomposable projectives.
  KClass gamma(const DivSeq& y) {
    DimVector nu = y.weight(q_.num_vertices());
    if (nu.total() == 0) return unit_class(nu);
    return quotient(nu).decompose_projective(y);
  }

  /// Image of a word-space element; coefficients are rational functions in q.
  std::map<std::string, RatFunc> gamma_words(const WordVec& v) {
    std::map<std::string, RatFunc> r;
    for (const auto& [w, c] : v) {
      KClass k = gamma(DivSeq::trivial(w));
      for (const auto& [label, g] : k.coeff) {
        auto& slot = r.try_emplace(label, RatFunc(1)).first->second;
        slot += c * to_ratfunc(g);
      }
    }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
  }

  /// Product in K: write each factor through classes of words and concatenate.
  KClass product(const KClass& a, const KClass& b) {
    if (a.nu.total() == 0) return b.scaled(unit_coeff(a));
    if (b.nu.total() == 0) return a.scaled(unit_coeff(b));
    auto ca = word_coords(a), cb = word_coords(b);
    std::map<std::string, RatFunc> acc;
    for (const auto& [wa, xa] : ca)
      for (const auto& [wb, xb] : cb) {
        ColorSeq w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        KClass k = gamma(DivSeq::trivial(w));
        for (const auto& [label, g] : k.coeff) {
          auto& slot = acc.try_emplace(label, RatFunc(1)).first->second;
          slot += xa * xb * to_ratfunc(g);
        }
      }
    KClass r{a.nu + b.nu, {}};
    for (const auto& [label, f] : acc) {
      auto l = to_laurent(f);
      if (!l) throw std::runtime_error("kring_product: coefficient is not a Laurent polynomial");
      if (!l->is_zero()) r.coeff[label] = *l;
    }
    return r;
  }

  /// Kernel of words -> K agrees with the radical of the form (ranks of G, M and [G | M] coincide).
  struct KernelCheck {
    int rank_form = 0, rank_gamma = 0, rank_joint = 0;
    bool ok() const { return rank_form == rank_gamma && rank_gamma == rank_joint; }
  };
  KernelCheck kernel_check(const DimVector& nu) {
    auto seqs = sequences(nu);
    auto G = to_ratfunc_matrix(form_gram(q_, nu));
    auto labels = quotient(nu).labels();
    std::vector<std::vector<RatFunc>> M, J = G;
    for (size_t a = 0; a < seqs.size(); ++a) {
      KClass k = gamma(DivSeq::trivial(seqs[a]));
      std::vector<RatFunc> row;
      for (const auto& l : labels) {
        auto it = k.coeff.find(l);
        row.push_back(it == k.coeff.end() ? RatFunc(1) : to_ratfunc(it->second));
      }
      M.push_back(row);
      J[a].insert(J[a].end(), row.begin(), row.end());
    }
    return {static_cast<int>(rank_over(G)), static_cast<int>(rank_over(M)), static_cast<int>(rank_over(J))};
  }

 private:
  struct Entry {
    std::unique_ptr<KLRAlgebra> alg;
    std::unique_ptr<FiniteQuotient> fq;
  };

  static KClass unit_class(const DimVector& nu) { return KClass{nu, {{"1", QLaurent(1)}}}; }
  static QLaurent unit_coeff(const KClass& k) {
    auto it = k.coeff.find("1");
    return it == k.coeff.end() ? QLaurent() : it->second;
  }

  /// Coordinates of a class with respect to classes of a maximal independent set of words.
  std::map<ColorSeq, RatFunc> word_coords(const KClass& k) {
    const auto& fq = quotient(k.nu);
    auto labels = fq.labels();
    std::vector<ColorSeq> chosen;
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& w : sequences(k.nu)) {
      KClass c = fq.decompose_projective(DivSeq::trivial(w));
      std::vector<RatFunc> row;
      for (const auto& l : labels) {
        auto it = c.coeff.find(l);
        row.push_back(it == c.coeff.end() ? RatFunc(1) : to_ratfunc(it->second));
      }
      auto test = rows;
      test.push_back(row);
      if (rank_over(test) > rows.size()) {
        rows.push_back(row);
        chosen.push_back(w);
      }
      if (rows.size() == labels.size()) break;
    }
    if (rows.size() != labels.size()) throw std::runtime_error("kring_product: classes of words do not span");
    RatFunc zero(1), one = to_ratfunc(QLaurent(1));
    auto inv = invert_over(rows, zero, one);
    if (!inv) throw std::logic_error("kring_product: singular transition matrix");
    // k = x * rows  =>  x = k * inv
    std::map<ColorSeq, RatFunc> x;
    for (size_t s = 0; s < chosen.size(); ++s) {
      RatFunc v(1);
      for (size_t l = 0; l < labels.size(); ++l) {
        auto it = k.coeff.find(labels[l]);
        if (it != k.coeff.end()) v += to_ratfunc(it->second) * (*inv)[l][s];
      }
      if (!v.is_zero()) x.emplace(chosen[s], v);
    }
    return x;
  }

  Quiver q_;
  int cap_;
  std::map<std::vector<int>, Entry> cache_;
};

/// Padded Serre elements lie in the radical of the form; any command relying on the form runs this first.
inline Report check_form_convention(const Quiver& q) {
  Report r;
  for (int i = 0; i < q.num_vertices(); ++i)
    for (int j = 0; j < q.num_vertices(); ++j) {
      if (i == j) continue;
      WordVec s = serre_element(q, i, j);
      std::string inst = q.name(i) + "," + q.name(j);
      r.records.push_back({"serre_in_radical", inst, in_radical(q, s), ""});
      for (int k = 0; k < q.num_vertices(); ++k) {
        WordVec pad;
        add_to(pad, {k}, to_ratfunc(QLaurent(1)));
        r.records.push_back({"serre_in_radical_left", inst + " pad " + q.name(k), in_radical(q, concat(pad, s)), ""});
        r.records.push_back({"serre_in_radical_right", inst + " pad " + q.name(k), in_radical(q, concat(s, pad)), ""});
      }
    }
  return r;
}

/// Determinant by expansion along the first row; the matrices here are at most a few rows.
inline QLaurent laurent_det(const std::vector<std::vector<QLaurent>>& a) {
  size_t n = a.size();
  if (n == 0) return QLaurent(1);
  QLaurent d;
  for (size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<QLaurent>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<QLaurent> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    QLaurent t = a[0][c] * laurent_det(minor);
    if (c % 2) d -= t;
    else d += t;
  }
  return d;
}

/// Units of Z[q, q^-1]: a single term with coefficient +-1.
inline bool is_laurent_unit(const QLaurent& f) {
  return f.coeffs().size() == 1 && abs(f.coeffs().begin()->second) == 1;
}

/// Comparison of the indecomposable projectives with f_nu.
struct BasisComparison {
  int num_simples = 0;
  int f_dimension = 0;
  bool integral = true;
  bool positive = true;
  std::vector<std::string> unimodular;    // y whose classes form a Z[q,q^-1]-basis; empty if none
  std::map<std::string, KClass> classes;  // DivSeq string -> decomposition

  bool ok() const { return num_simples == f_dimension && integral && positive && !unimodular.empty(); }
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["num_indecomposables"] = num_simples;
    j["f_dim"] = f_dimension;
    j["integral"] = integral;
    j["positive"] = positive;
    j["unimodular_selection"] = unimodular;
    j["ok"] = ok();
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : classes) c[k] = v.to_json();
    j["classes"] = c;
    return j;
  }
};

inline BasisComparison compare_bases(KRing& kr, const DimVector& nu) {
  BasisComparison b;
  const auto& fq = kr.quotient(nu);
  b.num_simples = static_cast<int>(fq.simples().size());
  b.f_dimension = f_dim(kr.quiver(), nu);
  for (const auto& y : divided_sequences(nu)) {
    KClass k = fq.decompose_projective(y);
    for (const auto& [l, g] : k.coeff) {
      if (!g.is_integral()) b.integral = false;
      if (!g.is_nonneg_integral()) b.positive = false;
    }
    b.classes.emplace(y.str(kr.quiver()), k);
  }
  if (b.num_simples != b.f_dimension) return b;
  // First (lexicographic) selection of f_dim monomials with a unit transition determinant.
  auto ys = divided_sequences(nu);
  auto labels = fq.labels();
  size_t n = labels.size();
  std::vector<size_t> pick(n);
  auto search = [&](auto&& self, size_t depth, size_t from) -> bool {
    if (depth == n) {
      std::vector<std::vector<QLaurent>> M;
      for (size_t r = 0; r < n; ++r) {
        const KClass& k = b.classes.at(ys[pick[r]].str(kr.quiver()));
        std::vector<QLaurent> row;
        for (const auto& l : labels) {
          auto it = k.coeff.find(l);
          row.push_back(it == k.coeff.end() ? QLaurent() : it->second);
        }
        M.push_back(row);
      }
      return is_laurent_unit(laurent_det(M));
    }
    for (size_t t = from; t < ys.size(); ++t) {
      pick[depth] = t;
      if (self(self, depth + 1, t + 1)) return true;
    }
    return false;
  };
  if (search(search, 0, 0))
    for (size_t r = 0; r < n; ++r) b.unimodular.push_back(ys[pick[r]].str(kr.quiver()));
  return b;
}

/// sum_p (-1)^p [R_{(i^p, j, i^{a-p})}] in K; zero when the Serre relation holds.
inline KClass serre_class(KRing& kr, int i, int j) {
  const Quiver& q = kr.quiver();
  int a = 1 - q.cartan(i, j);
  KClass total;
  for (int p = 0; p <= a; ++p) {
    DivSeq y;
    if (p > 0) {
      y.colors.push_back(i);
      y.powers.push_back(p);
    }
    y.colors.push_back(j);
    y.powers.push_back(1);
    if (a - p > 0) {
      y.colors.push_back(i);
      y.powers.push_back(a - p);
    }
    KClass k = kr.gamma(y);
    total.nu = k.nu;
    total += k.scaled(QLaurent(p % 2 ? -1 : 1));
  }
  return total;
}

}  // namespace klr
