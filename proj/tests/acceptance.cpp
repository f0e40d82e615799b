// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "klr/klr.hpp"

using namespace klr;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (ok) note << "first failure: " << what << "; ";
    ok = false;
  }
};

std::string label(const Instance& inst) { return inst.quiver + " " + inst.nu.str(inst.q); }

std::vector<Instance> small_instances() { return catalog_instances(3); }

Instance a2(std::vector<int> nu) { return {"A2", catalog_quiver("A2"), DimVector(std::move(nu))}; }

void criterion_presentation(Outcome& o) {
  auto insts = small_instances();
  insts.push_back(a2({2, 2}));
  int n = 0;
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    Report r = check_presentation(A, 6);
    n += static_cast<int>(r.records.size());
    if (!r.ok()) o.fail(label(inst) + " " + r.first_failure());
  }
  o.note << insts.size() << " instances (|nu|<=3, A2 2i+j, A2 2i+2j), " << n << " relation families, degree<=6";
}

void criterion_faithfulness(Outcome& o) {
  auto insts = small_instances();
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    Report f = check_faithfulness(A, 200, 6, 1);
    if (!f.ok()) o.fail(label(inst) + " faithfulness " + f.first_failure());
    Report p = check_pbw_freeness(A, -6, 6);
    if (!p.ok()) o.fail(label(inst) + " pbw " + p.first_failure());
  }
  o.note << insts.size() << " instances, 200 pairs each, PBW window [-6,6]";
}

void criterion_grading(Outcome& o) {
  auto insts = catalog_instances(4);
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    if (inst.nu.total() <= 3) {
      Report h = check_homogeneity(A, 6);
      if (!h.ok()) o.fail(label(inst) + " homogeneity " + h.first_failure());
    }
    Report w = check_reduced_word_degree(A, 4);
    if (!w.ok()) o.fail(label(inst) + " reduced words " + w.first_failure());
  }
  o.note << "homogeneity on |nu|<=3, reduced-word independence for l(w)<=4 on |nu|<=4";
}

void criterion_localization(Outcome& o) {
  auto insts = small_instances();
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    Report r = crosscheck_operators(A, 6);
    if (!r.ok()) o.fail(label(inst) + " " + r.first_failure());
  }
  o.note << insts.size() << " instances, all generators, monomials of degree<=6";
}

void criterion_pbw_products(Outcome& o) {
  auto insts = small_instances();
  long pairs = 0, triples = 0;
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    Localization loc(A);
    for (const auto& w : A.perms()) {
      for (int l = 0; l + 1 < A.m(); ++l) {
        if (length(left_mul_s(l, w)) != length(w) + 1) continue;
        ++pairs;
        Report r = check_pbw_product(A, l, w);
        if (!r.ok()) o.fail(label(inst) + " " + r.first_failure());
      }
      for (const auto& x : A.perms())
        for (const auto& y : A.perms()) {
          if (length(compose(x, y)) != length(x) + length(y)) continue;
          ++triples;
          Report r = check_euler_identities(loc, w, x, y);
          if (!r.ok()) o.fail(label(inst) + " " + r.first_failure());
        }
    }
  }
  o.note << pairs << " length-additive (s_l, w) pairs, " << triples << " Euler-identity triples";
}

void criterion_finite_quotient(Outcome& o) {
  auto insts = small_instances();
  std::ostringstream intrinsic;
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    long f = 1;
    for (int k = 2; k <= inst.nu.total(); ++k) f *= k;
    FiniteQuotient fq(A);
    if (fq.r0().dim() != f * f) o.fail(label(inst) + " dim R0 = " + std::to_string(fq.r0().dim()));
    auto g = fq.ext_grading();
    if (!g.ok()) o.fail(label(inst) + " degree-0 part (Ext grading) not semisimple");
    int j0 = fq.degree0_radical_dim();
    if (j0 != 0) intrinsic << " " << label(inst) << ":" << j0;
  }
  for (int m = 1; m <= 3; ++m) {
    KLRAlgebra A(catalog_quiver("A1"), DimVector({m}));
    FiniteQuotient fq(A);
    if (fq.simples().size() != 1) o.fail("nil-Hecke m=" + std::to_string(m) + " simples");
    KClass word = fq.decompose_projective(DivSeq::trivial(ColorSeq(static_cast<size_t>(m), 0)));
    KClass div = fq.decompose_projective(DivSeq{{0}, {m}});
    if (word != div.scaled(qfact(m))) o.fail("nil-Hecke m=" + std::to_string(m) + " [R_{i^m}] != [m]![R_(i,m)]");
  }
  o.note << "dim (m!)^2 and semisimple degree-0 part in the Ext grading on " << insts.size()
         << " instances; nil-Hecke m<=3; intrinsic-grading degree-0 radical dims:"
         << (intrinsic.str().empty() ? " none" : intrinsic.str());
}

void criterion_serre(Outcome& o) {
  {
    KRing kr(catalog_quiver("A2"));
    const Quiver& q = kr.quiver();
    KClass lhs = kr.gamma(DivSeq::parse(q, "i^2,j"));
    lhs += kr.gamma(DivSeq::parse(q, "j,i^2"));
    KClass rhs = kr.gamma(DivSeq::parse(q, "i,j,i"));
    if (lhs != rhs) o.fail("A2 2i+j: " + lhs.str() + " vs " + rhs.str());
    if (!serre_class(kr, 1, 0).is_zero()) o.fail("A2 i+2j (j,i) Serre class nonzero");
    // Independent route: block-trace decomposition.
    const auto& fq = kr.quotient(DimVector({2, 1}));
    KClass l2 = fq.decompose_projective_trace(DivSeq::parse(q, "i^2,j"));
    l2 += fq.decompose_projective_trace(DivSeq::parse(q, "j,i^2"));
    if (l2 != fq.decompose_projective_trace(DivSeq::parse(q, "i,j,i"))) o.fail("A2 2i+j trace route");
  }
  {
    KRing kr(catalog_quiver("A1xA1"));
    const Quiver& q = kr.quiver();
    if (kr.gamma(DivSeq::parse(q, "i,j")) != kr.gamma(DivSeq::parse(q, "j,i"))) o.fail("A1xA1 i+j: [R_ij] != [R_ji]");
    if (!serre_class(kr, 0, 1).is_zero()) o.fail("A1xA1 i+j Serre class nonzero");
  }
  o.note << "A2 2i+j (both decomposition routes), A1xA1 i+j";
}

void criterion_basis_count(Outcome& o) {
  auto insts = small_instances();
  for (const auto& inst : insts) {
    KRing kr(inst.q);
    BasisComparison b = compare_bases(kr, inst.nu);
    if (b.num_simples != b.f_dimension)
      o.fail(label(inst) + " simples " + std::to_string(b.num_simples) + " f_dim " + std::to_string(b.f_dimension));
    if (!b.integral || !b.positive) o.fail(label(inst) + " multiplicities not in N[q,q^-1]");
  }
  o.note << insts.size() << " instances (A2 2i+j included)";
}

void criterion_graded_dim(Outcome& o) {
  auto insts = small_instances();
  for (const auto& inst : insts) {
    KLRAlgebra A(inst.q, inst.nu);
    Report r = check_graded_dim(A, -6, 6);
    if (!r.ok()) o.fail(label(inst) + " " + r.first_failure());
  }
  o.note << insts.size() << " instances, all (i, i') pairs, window [-6,6]";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"presentation", criterion_presentation},
      {"faithfulness_pbw", criterion_faithfulness},
      {"grading", criterion_grading},
      {"localization_agreement", criterion_localization},
      {"pbw_products_euler_identities", criterion_pbw_products},
      {"finite_quotient", criterion_finite_quotient},
      {"categorified_serre", criterion_serre},
      {"indecomposables_vs_f_dim", criterion_basis_count},
      {"graded_dim_vs_brute_force", criterion_graded_dim},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("%s criterion %zu %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
