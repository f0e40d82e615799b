#include <gtest/gtest.h>

#include "klr/catalog.hpp"
#include "klr/qgroup.hpp"

using namespace klr;

namespace {

RatFunc rf(const QLaurent& f) { return to_ratfunc(f); }

}  // namespace

TEST(SerreElement, ShapeForA2) {
  Quiver q = catalog_quiver("A2");
  WordVec s = serre_element(q, 0, 1);
  ASSERT_EQ(s.size(), 3u);
  RatFunc half = rf(QLaurent(1)) / rf(qnum(2));
  EXPECT_EQ(s.at({1, 0, 0}), half);
  EXPECT_EQ(s.at({0, 0, 1}), half);
  EXPECT_EQ(s.at({0, 1, 0}), -rf(QLaurent(1)));
  EXPECT_THROW(serre_element(q, 0, 0), std::invalid_argument);
}

TEST(SerreElement, ShapeWithoutArrows) {
  WordVec s = serre_element(catalog_quiver("A1xA1"), 0, 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at({0, 1}), -rf(QLaurent(1)));
  EXPECT_EQ(s.at({1, 0}), rf(QLaurent(1)));
}

TEST(SerreElement, KroneckerHasFourWords) {
  WordVec s = serre_element(catalog_quiver("K2"), 0, 1);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(word_weight(catalog_quiver("K2"), s).coords, (std::vector<int>{3, 1}));
}

TEST(Form, EntriesAndSymmetry) {
  Quiver q = catalog_quiver("A1");
  EXPECT_EQ(form_entry(q, {0, 0}, {0, 0}), QLaurent(1) + QLaurent::monomial(-2));
  Quiver a2 = catalog_quiver("A2");
  EXPECT_EQ(form_entry(a2, {0, 1}, {1, 0}), QLaurent::q());
  for (const auto& inst : catalog_instances(3)) {
    auto g = form_gram(inst.q, inst.nu);
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = 0; b < g.size(); ++b) EXPECT_EQ(g[a][b], g[b][a]);
  }
}

TEST(Form, FDimensions) {
  EXPECT_EQ(f_dim(catalog_quiver("A1"), DimVector({3})), 1);
  EXPECT_EQ(f_dim(catalog_quiver("A2"), DimVector({1, 1})), 2);
  EXPECT_EQ(f_dim(catalog_quiver("A2"), DimVector({2, 1})), 2);
  EXPECT_EQ(f_dim(catalog_quiver("A1xA1"), DimVector({1, 1})), 1);
  EXPECT_EQ(f_dim(catalog_quiver("K2"), DimVector({2, 1})), 3);
  EXPECT_EQ(f_dim(catalog_quiver("A3"), DimVector({1, 1, 1})), 4);
  EXPECT_EQ(f_dim(catalog_quiver("A2"), DimVector({0, 0})), 1);
}

TEST(Form, SerreElementsInRadical) {
  for (const auto& name : catalog_names()) {
    Quiver q = catalog_quiver(name);
    if (q.num_vertices() < 2) continue;
    EXPECT_TRUE(check_form_convention(q).ok()) << name;
  }
}

TEST(Form, NonRadicalControl) {
  Quiver q = catalog_quiver("A2");
  WordVec v;
  add_to(v, {0, 1, 0}, rf(QLaurent(1)));
  EXPECT_FALSE(in_radical(q, v));
  // Wrong sign on the middle term.
  WordVec s = serre_element(q, 0, 1);
  s[{0, 1, 0}] = rf(QLaurent(1));
  EXPECT_FALSE(in_radical(q, s));
}

TEST(SerreClass, VanishesInK) {
  KRing a2(catalog_quiver("A2"));
  EXPECT_TRUE(serre_class(a2, 0, 1).is_zero());
  EXPECT_TRUE(serre_class(a2, 1, 0).is_zero());
  KRing d(catalog_quiver("A1xA1"));
  EXPECT_TRUE(serre_class(d, 0, 1).is_zero());
}

TEST(SerreClass, ImageOfSerreWordsVanishes) {
  KRing a2(catalog_quiver("A2"));
  EXPECT_TRUE(a2.gamma_words(serre_element(a2.quiver(), 0, 1)).empty());
}

TEST(KernelCheck, MatchesRadical) {
  for (const auto& inst : catalog_instances(3)) {
    KRing kr(inst.q);
    auto k = kr.kernel_check(inst.nu);
    EXPECT_TRUE(k.ok()) << inst.quiver << " " << inst.nu.str(inst.q) << " " << k.rank_form << "/" << k.rank_gamma << "/"
                        << k.rank_joint;
    EXPECT_EQ(k.rank_form, f_dim(inst.q, inst.nu));
  }
}

TEST(CompareBases, AllSmallInstances) {
  for (const auto& inst : catalog_instances(3)) {
    KRing kr(inst.q);
    BasisComparison b = compare_bases(kr, inst.nu);
    EXPECT_TRUE(b.ok()) << inst.quiver << " " << inst.nu.str(inst.q);
    EXPECT_EQ(b.unimodular.size(), static_cast<size_t>(b.f_dimension));
  }
}

TEST(CompareBases, ThetaIntegrality) {
  // [a]! theta_i^{(a)} is the word i^a, so its class is [a]! times an integral positive class.
  KRing kr(catalog_quiver("A1"));
  for (int a = 1; a <= 3; ++a) {
    KClass div = kr.gamma(DivSeq{{0}, {a}});
    EXPECT_TRUE(div.nonneg_integral());
    EXPECT_EQ(kr.gamma(DivSeq::trivial(ColorSeq(static_cast<size_t>(a), 0))), div.scaled(qfact(a)));
  }
}

TEST(Laurent, DeterminantAndUnits) {
  std::vector<std::vector<QLaurent>> m{{QLaurent(1), qnum(2)}, {QLaurent(0), QLaurent::q()}};
  EXPECT_EQ(laurent_det(m), QLaurent::q());
  EXPECT_TRUE(is_laurent_unit(QLaurent::monomial(-3)));
  EXPECT_TRUE(is_laurent_unit(-QLaurent(1)));
  EXPECT_FALSE(is_laurent_unit(qnum(2)));
  EXPECT_FALSE(is_laurent_unit(QLaurent(2)));
}

TEST(Gamma, MultiplicativeOnConcatenations) {
  for (const auto& name : catalog_names()) {
    KRing kr(catalog_quiver(name));
    const Quiver& q = kr.quiver();
    std::vector<DivSeq> ys;
    for (const auto& nu : instances_up_to(q, 2))
      for (const auto& y : divided_sequences(nu)) ys.push_back(y);
    for (const auto& a : ys)
      for (const auto& b : ys) {
        if (a.total() + b.total() > 3) continue;
        DivSeq ab = a;
        ab.colors.insert(ab.colors.end(), b.colors.begin(), b.colors.end());
        ab.powers.insert(ab.powers.end(), b.powers.begin(), b.powers.end());
        ASSERT_EQ(kr.product(kr.gamma(a), kr.gamma(b)), kr.gamma(ab)) << name << " " << a.str(q) << " " << b.str(q);
      }
  }
}
