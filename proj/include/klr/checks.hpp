// Operator-level verification of the KLR algebra: the defining presentation,
// faithfulness of multiply, PBW freeness, homogeneity of the grading, and the
// graded dimension formula against a brute-force rank count.

#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace klr {

inline std::string nu_instance(const KLRAlgebra& alg) { return alg.nu().str(alg.quiver()); }

/// Q_{i,l}(u, v) = (-1)^{h_i(l)} (u - v)^{a_i(l)} for distinct colors, 0 otherwise.
inline MultiPoly q_poly(const KLRAlgebra& alg, const ColorSeq& i, int l, int u, int v) {
  int m = alg.m();
  if (i[static_cast<size_t>(l)] == i[static_cast<size_t>(l + 1)]) return MultiPoly(m);
  const Quiver& q = alg.quiver();
  MultiPoly d = MultiPoly::diff(m, u, v).pow(a_loc(q, i, l));
  return h_loc(q, i, l) % 2 ? -d : d;
}

/// Every defining relation evaluated as an operator identity on all monomials up to degree_bound.
inline Report check_presentation(const KLRAlgebra& alg, int degree_bound) {
  const Quiver& q = alg.quiver();
  int m = alg.m();
  Report rep;
  auto inputs = monomials_up_to(m, degree_bound);
  auto tau = [&](const ColorSeq& i, int l) { return alg.gen_tau(i, l); };
  auto op = [&](const KLRElement& z, const PolyRep& v) { return alg.apply(z, v); };

  // Runs test(v) on every input v = f in component j (all components, or only i).
  auto run = [&](const std::string& name, const std::string& inst, const std::vector<ColorSeq>& comps, auto&& test) {
    CheckRecord rec{name, inst, true, ""};
    for (const auto& j : comps) {
      for (const auto& mono : inputs) {
        PolyRep v = PolyRep::single(j, MultiPoly(m, mono));
        if (!test(v)) {
          rec.ok = false;
          rec.witness = "component " + seq_str(q, j) + ", input " + MultiPoly(m, mono).str();
          break;
        }
      }
      if (!rec.ok) break;
    }
    rep.records.push_back(rec);
  };

  const auto& seqs = alg.seqs();
  for (const auto& i : seqs) {
    std::string s = seq_str(q, i);
    KLRElement one_i = alg.gen_idem(i);
    for (const auto& ip : seqs)
      run("idempotents", s + "*" + seq_str(q, ip), seqs, [&](const PolyRep& v) {
        PolyRep lhs = op(one_i, op(alg.gen_idem(ip), v));
        return i == ip ? lhs == op(one_i, v) : lhs.is_zero();
      });
    for (int k = 0; k < m; ++k) {
      KLRElement xk = alg.gen_x(i, k);
      run("kappa_support", s + " k=" + std::to_string(k + 1), seqs,
          [&](const PolyRep& v) { return op(xk, v) == op(one_i, op(xk, op(one_i, v))); });
      for (const auto& ip : seqs)
        for (int kp = 0; kp < m; ++kp) {
          KLRElement y = alg.gen_x(ip, kp);
          run("kappa_commute", s + " k=" + std::to_string(k + 1) + " " + seq_str(q, ip) + " k'=" + std::to_string(kp + 1), {i},
              [&](const PolyRep& v) { return op(xk, op(y, v)) == op(y, op(xk, v)); });
        }
    }
    for (int l = 0; l + 1 < m; ++l) {
      std::string ls = s + " l=" + std::to_string(l + 1);
      ColorSeq si = swap_at(i, l);
      KLRElement t = tau(i, l);
      run("tau_support", ls, seqs, [&](const PolyRep& v) { return op(t, v) == op(alg.gen_idem(si), op(t, op(one_i, v))); });

      MultiPoly Q = q_poly(alg, i, l, l, l + 1);
      KLRElement back = tau(si, l);
      run("quadratic", ls, {i}, [&](const PolyRep& v) {
        PolyRep lhs = op(back, op(t, v));
        PolyRep rhs;
        for (const auto& [j, f] : v.comp) rhs.add(j, Q * f);
        return lhs == rhs;
      });

      for (int lp = 0; lp + 1 < m; ++lp) {
        if (std::abs(l - lp) <= 1) continue;
        KLRElement a1 = tau(si, lp), b1 = tau(swap_at(i, lp), l), b2 = tau(i, lp);
        run("distant_commute", ls + " l'=" + std::to_string(lp + 1), {i},
            [&](const PolyRep& v) { return op(a1, op(t, v)) == op(b1, op(b2, v)); });
      }

      if (l + 2 < m) {
        // tau(l+1) tau(l) tau(l+1) - tau(l) tau(l+1) tau(l) on the i-component.
        ColorSeq i1 = swap_at(i, l + 1), i2 = swap_at(i1, l);
        ColorSeq j1 = swap_at(i, l), j2 = swap_at(j1, l + 1);
        KLRElement p1 = tau(i, l + 1), p2 = tau(i1, l), p3 = tau(i2, l + 1);
        KLRElement r1 = tau(i, l), r2 = tau(j1, l + 1), r3 = tau(j2, l);
        MultiPoly corr(m);
        if (i[static_cast<size_t>(l)] == i[static_cast<size_t>(l + 2)]) {
          MultiPoly num = q_poly(alg, i, l, l + 2, l + 1) - q_poly(alg, i, l, l, l + 1);
          corr = exact_div(num, MultiPoly::diff(m, l + 2, l));
        }
        run("braid", ls, {i}, [&](const PolyRep& v) {
          PolyRep lhs = op(p3, op(p2, op(p1, v))) - op(r3, op(r2, op(r1, v)));
          PolyRep rhs;
          for (const auto& [j, f] : v.comp) rhs.add(j, corr * f);
          return lhs == rhs;
        });
      }

      for (int k = 0; k < m; ++k) {
        int sk = k == l ? l + 1 : (k == l + 1 ? l : k);
        KLRElement xk = alg.gen_x(i, k), xs = alg.gen_x(si, sk);
        int c = 0;
        if (si == i && k == l) c = -1;
        if (si == i && k == l + 1) c = 1;
        run("tau_kappa", ls + " k=" + std::to_string(k + 1), {i}, [&](const PolyRep& v) {
          PolyRep lhs = op(t, op(xk, v)) - op(xs, op(t, v));
          PolyRep rhs;
          for (const auto& [j, f] : v.comp) rhs.add(j, f * Rational(c));
          return lhs == rhs;
        });
      }
    }
  }
  return rep;
}

/// Random homogeneous element: 1 to 3 PBW terms of a common degree with small integer coefficients.
inline KLRElement random_homogeneous(const KLRAlgebra& alg, std::mt19937& rng, int max_poly_degree = 2) {
  int m = alg.m();
  struct Term {
    ColorSeq i;
    Perm w;
    Monomial a;
  };
  std::map<int, std::vector<Term>> by_deg;
  auto monos = monomials_up_to(m, max_poly_degree);
  for (const auto& i : alg.seqs())
    for (const auto& w : alg.perms())
      for (const auto& a : monos) by_deg[alg.term_degree(i, w, a)].push_back({i, w, a});
  std::vector<int> degs;
  for (const auto& [d, v] : by_deg) degs.push_back(d);
  int d = degs[std::uniform_int_distribution<size_t>(0, degs.size() - 1)(rng)];
  const auto& pool = by_deg[d];
  int nterms = std::uniform_int_distribution<int>(1, 3)(rng);
  std::uniform_int_distribution<int> coef(-3, 3);
  KLRElement z;
  for (int t = 0; t < nterms; ++t) {
    const Term& tm = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    z.add(tm.i, tm.w, MultiPoly(m, tm.a, c));
  }
  if (z.is_zero()) z.add(pool.front().i, pool.front().w, MultiPoly(m, pool.front().a));
  return z;
}

/// apply(multiply(a, b), f) = apply(a, apply(b, f)) and degree additivity on random homogeneous pairs.
inline Report check_faithfulness(const KLRAlgebra& alg, int pairs, int degree_bound, unsigned seed) {
  std::mt19937 rng(seed);
  const Quiver& q = alg.quiver();
  int m = alg.m();
  auto inputs = monomials_up_to(m, degree_bound);
  Report rep;
  for (int p = 0; p < pairs; ++p) {
    KLRElement a = random_homogeneous(alg, rng), b = random_homogeneous(alg, rng);
    KLRElement ab = alg.multiply(a, b);
    CheckRecord rec{"faithfulness", nu_instance(alg) + " pair " + std::to_string(p), true, ""};
    auto da = alg.degree(a), db = alg.degree(b), dab = alg.degree(ab);
    if (!ab.is_zero() && (!dab || *dab != *da + *db)) {
      rec.ok = false;
      rec.witness = "product not homogeneous of the expected degree";
    }
    for (const auto& j : alg.seqs()) {
      if (!rec.ok) break;
      for (const auto& mono : inputs) {
        PolyRep v = PolyRep::single(j, MultiPoly(m, mono));
        if (alg.apply(ab, v) != alg.apply(a, alg.apply(b, v))) {
          rec.ok = false;
          rec.witness = "component " + seq_str(q, j) + ", input " + MultiPoly(m, mono).str();
          break;
        }
      }
    }
    rep.records.push_back(rec);
  }
  return rep;
}

namespace detail {

inline long mono_code(const Monomial& mono) {
  long c = 0;
  for (int k = kMaxVars - 1; k >= 0; --k) c = c * 64 + mono[k];
  return c;
}

/// Operator F_i -> F_{i'} recorded by its values on all monomials of degree <= l(w0).
/// Operators are linear over symmetric polynomials and F_i is free over them on
/// monomials of that degree range, so this record is injective.
inline SparseEchelon::SVec operator_record(const KLRAlgebra& alg, const KLRElement& z, const ColorSeq& i) {
  int m = alg.m();
  SparseEchelon::SVec rec;
  auto inputs = monomials_up_to(m, ell(m));
  for (size_t k = 0; k < inputs.size(); ++k) {
    PolyRep out = alg.apply(z, PolyRep::single(i, MultiPoly(m, inputs[k])));
    for (const auto& [j, g] : out.comp)
      for (const auto& [mono, c] : g.terms()) rec[static_cast<long>(k) * (1L << 50) + mono_code(mono)] += c;
  }
  for (auto it = rec.begin(); it != rec.end();) it = it->second == 0 ? rec.erase(it) : std::next(it);
  return rec;
}

}  // namespace detail

/// The PBW family x^a sigma(i, w) is linearly independent degree by degree on [lo, hi].
inline Report check_pbw_freeness(const KLRAlgebra& alg, int lo, int hi) {
  const Quiver& q = alg.quiver();
  int m = alg.m();
  Report rep;
  for (const auto& i : alg.seqs())
    for (const auto& ip : alg.seqs())
      for (int d = lo; d <= hi; ++d) {
        SparseEchelon ech;
        size_t count = 0;
        bool ok = true;
        for (const auto& w : alg.perms()) {
          if (perm_act(w, i) != ip) continue;
          int rest = d - alg.sigma_word_degree(i, w);
          if (rest < 0 || rest % 2) continue;
          for (const auto& a : monomials_of_degree(m, rest / 2)) {
            ++count;
            if (!ech.insert(detail::operator_record(alg, KLRElement::term(i, w, MultiPoly(m, a)), i))) ok = false;
          }
        }
        if (count == 0) continue;
        rep.records.push_back({"pbw_freeness", seq_str(q, i) + "->" + seq_str(q, ip) + " deg " + std::to_string(d), ok,
                               ok ? "" : "rank " + std::to_string(ech.rank()) + " < " + std::to_string(count)});
      }
  return rep;
}

/// Brute-force dimension of the degree-d operators from F_i to F_{i'}: rank of x^a times all
/// generator words (reduced or not) of length <= l(w0) + 1.
inline long operator_space_dim(const KLRAlgebra& alg, const ColorSeq& i, const ColorSeq& ip, int d) {
  int m = alg.m();
  int maxlen = ell(m) + 1;
  SparseEchelon ech;
  std::vector<Word> words{{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int l = 0; l + 1 < m; ++l) {
          Word x = w;
          x.insert(x.begin(), l);
          next.push_back(x);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& word : words) {
    ColorSeq j = i;
    for (auto it = word.rbegin(); it != word.rend(); ++it) j = swap_at(j, *it);
    if (j != ip) continue;
    int rest = d - alg.word_degree(i, word);
    if (rest < 0 || rest % 2) continue;
    for (const auto& a : monomials_of_degree(m, rest / 2)) {
      SparseEchelon::SVec rec;
      auto inputs = monomials_up_to(m, ell(m));
      for (size_t k = 0; k < inputs.size(); ++k) {
        auto [tgt, g] = alg.apply_word(i, word, MultiPoly(m, inputs[k]));
        g = g.mul_monomial(a);
        for (const auto& [mono, c] : g.terms()) rec[static_cast<long>(k) * (1L << 50) + detail::mono_code(mono)] += c;
      }
      for (auto it = rec.begin(); it != rec.end();) it = it->second == 0 ? rec.erase(it) : std::next(it);
      ech.insert(rec);
    }
  }
  return static_cast<long>(ech.rank());
}

/// graded_dim_hom closed formula against operator_space_dim on [lo, hi].
inline Report check_graded_dim(const KLRAlgebra& alg, int lo, int hi) {
  const Quiver& q = alg.quiver();
  Report rep;
  for (const auto& i : alg.seqs())
    for (const auto& ip : alg.seqs()) {
      GradedSeries s = alg.graded_dim_hom(i, ip);
      CheckRecord rec{"graded_dim_hom", seq_str(q, i) + "->" + seq_str(q, ip), true, ""};
      for (int d = lo; d <= hi; ++d) {
        mpq_class formula = s.coefficient(d);
        long brute = operator_space_dim(alg, i, ip, d);
        if (formula != brute) {
          rec.ok = false;
          rec.witness = "degree " + std::to_string(d) + ": formula " + formula.get_str() + ", operators " + std::to_string(brute);
          break;
        }
      }
      rep.records.push_back(rec);
    }
  return rep;
}

/// Every generator shifts the polynomial grading by exactly 0, 2 or a_i(l).
inline Report check_homogeneity(const KLRAlgebra& alg, int degree_bound) {
  const Quiver& q = alg.quiver();
  int m = alg.m();
  Report rep;
  auto inputs = monomials_up_to(m, degree_bound);
  auto run = [&](const std::string& inst, const ColorSeq& i, const KLRElement& z, int shift) {
    CheckRecord rec{"homogeneity", inst, true, ""};
    for (const auto& mono : inputs) {
      int din = alg.rep_degree(i, mono);
      PolyRep out = alg.apply(z, PolyRep::single(i, MultiPoly(m, mono)));
      for (const auto& [j, g] : out.comp)
        for (const auto& [mo, c] : g.terms())
          if (alg.rep_degree(j, mo) != din + shift) {
            rec.ok = false;
            rec.witness = "input " + MultiPoly(m, mono).str() + " output term " + MultiPoly(m, mo).str();
          }
      if (!rec.ok) break;
    }
    rep.records.push_back(rec);
  };
  for (const auto& i : alg.seqs()) {
    std::string s = seq_str(q, i);
    run("1" + s, i, alg.gen_idem(i), 0);
    for (int k = 0; k < m; ++k) run("x" + std::to_string(k + 1) + s, i, alg.gen_x(i, k), 2);
    for (int l = 0; l + 1 < m; ++l) run("sigma" + std::to_string(l + 1) + s, i, alg.gen_sigma(i, l), a_loc(q, i, l));
  }
  return rep;
}

/// The degree of sigma along a reduced word does not depend on the reduced word, for l(w) <= max_length.
inline Report check_reduced_word_degree(const KLRAlgebra& alg, int max_length) {
  const Quiver& q = alg.quiver();
  Report rep;
  for (const auto& w : alg.perms()) {
    if (length(w) > max_length) continue;
    auto words = reduced_words(w);
    for (const auto& i : alg.seqs()) {
      int d0 = alg.word_degree(i, words.front());
      CheckRecord rec{"reduced_word_degree", seq_str(q, i) + " w=" + perm_str(w), true, ""};
      for (const auto& word : words)
        if (alg.word_degree(i, word) != d0) {
          rec.ok = false;
          rec.witness = "two reduced words give different degrees";
          break;
        }
      rep.records.push_back(rec);
    }
  }
  return rep;
}

}  // namespace klr
