#include <gtest/gtest.h>

#include "klr/catalog.hpp"

using namespace klr;

namespace {

Quiver a2() { return catalog_quiver("A2"); }

}  // namespace

TEST(Quiver, CartanValues) {
  EXPECT_EQ(a2().cartan(0, 1), -1);
  EXPECT_EQ(catalog_quiver("K2").cartan(0, 1), -2);
  EXPECT_EQ(catalog_quiver("A1xA1").cartan(0, 1), 0);
  for (const auto& name : catalog_names()) {
    Quiver q = catalog_quiver(name);
    for (int i = 0; i < q.num_vertices(); ++i) {
      EXPECT_EQ(q.cartan(i, i), 2);
      for (int j = 0; j < q.num_vertices(); ++j) EXPECT_EQ(q.cartan(i, j), q.cartan(j, i));
    }
  }
}

TEST(Quiver, RejectsLoopsAndBadJson) {
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["i"],"arrows":[["i","i"]]})")),
               std::invalid_argument);
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":"i"})")), std::invalid_argument);
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["i","i"]})")), std::invalid_argument);
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["i"],"arrows":[["i","x"]]})")),
               std::invalid_argument);
  EXPECT_THROW(a2().cartan(0, 5), std::out_of_range);
}

TEST(Quiver, JsonRoundTrip) {
  for (const auto& name : catalog_names()) {
    Quiver q = catalog_quiver(name);
    Quiver back = Quiver::from_json(q.to_json());
    for (int i = 0; i < q.num_vertices(); ++i)
      for (int j = 0; j < q.num_vertices(); ++j) EXPECT_EQ(q.h(i, j), back.h(i, j));
  }
}

TEST(Quiver, CatalogFilesMatchBuiltins) {
  for (const auto& name : catalog_names()) {
    Quiver file = Quiver::load(std::string(KLR_SOURCE_DIR) + "/catalog/" + name + ".json");
    EXPECT_EQ(file.to_json(), catalog_quiver(name).to_json()) << name;
  }
}

TEST(DimVector, ParseForms) {
  Quiver q = a2();
  EXPECT_EQ(DimVector::parse(q, R"({"i":2,"j":1})").coords, (std::vector<int>{2, 1}));
  EXPECT_EQ(DimVector::parse(q, "i:2,j").coords, (std::vector<int>{2, 1}));
  EXPECT_EQ(DimVector::parse(q, "i:2,j").str(q), "2i+j");
  EXPECT_THROW(DimVector::parse(q, "x:1"), std::invalid_argument);
  EXPECT_THROW(DimVector::parse(q, R"({"i":-1})"), std::invalid_argument);
}

TEST(Sequences, TwoColorsOneTwo) {
  // I = {i, j}, nu = i + 2j has exactly the three sequences (i,j,j), (j,i,j), (j,j,i).
  Quiver q = a2();
  auto s = sequences(DimVector({1, 2}));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(seq_str(q, s[0]), "(i,j,j)");
  EXPECT_EQ(seq_str(q, s[1]), "(j,i,j)");
  EXPECT_EQ(seq_str(q, s[2]), "(j,j,i)");
}

TEST(Perm, ActionExamples) {
  ColorSeq ijj{0, 1, 1};
  EXPECT_EQ(perm_act(simple_reflection(3, 0), ijj), (ColorSeq{1, 0, 1}));
  EXPECT_EQ(perm_act(identity_perm(3), ijj), ijj);
  Perm t = perm_of_word(3, {0, 1, 0});
  EXPECT_EQ(perm_act(t, ijj), (ColorSeq{1, 1, 0}));
}

TEST(Perm, ActionIsLeftAction) {
  ColorSeq i{0, 1, 2, 1};
  for (const auto& u : all_perms(4))
    for (const auto& v : all_perms(4)) ASSERT_EQ(perm_act(compose(u, v), i), perm_act(u, perm_act(v, i)));
}

TEST(Perm, LengthAndReducedWords) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& w : all_perms(m)) {
      Word c = canonical_word(w);
      EXPECT_EQ(static_cast<int>(c.size()), length(w));
      EXPECT_EQ(perm_of_word(m, c), w);
      auto all = reduced_words(w);
      ASSERT_FALSE(all.empty());
      EXPECT_EQ(all.front(), c);  // lexicographically least
      for (const auto& r : all) EXPECT_EQ(perm_of_word(m, r), w);
      EXPECT_EQ(length(inverse(w)), length(w));
    }
  EXPECT_EQ(length(longest_perm(4)), 6);
}

TEST(Perm, LengthSubadditive) {
  for (const auto& u : all_perms(4))
    for (const auto& v : all_perms(4)) EXPECT_LE(length(compose(u, v)), length(u) + length(v));
}

TEST(Perm, StabilizerIsParabolic) {
  ColorSeq i{0, 0, 1};
  auto st = stabilizer(i);
  EXPECT_EQ(st.size(), 2u);
  for (const auto& w : st) EXPECT_EQ(perm_act(w, i), i);
}

TEST(Perm, BruhatOrder) {
  Perm e = identity_perm(3), w0 = longest_perm(3);
  for (const auto& w : all_perms(3)) {
    EXPECT_TRUE(bruhat_leq(e, w));
    EXPECT_TRUE(bruhat_leq(w, w0));
  }
  EXPECT_FALSE(bruhat_leq(simple_reflection(3, 0), simple_reflection(3, 1)));
}

TEST(LocalDegrees, Examples) {
  Quiver q = a2();
  EXPECT_EQ(h_loc(q, {0, 0}, 0), -1);
  EXPECT_EQ(a_loc(q, {0, 0}, 0), -2);
  EXPECT_EQ(h_loc(q, {0, 1}, 0), 1);
  EXPECT_EQ(a_loc(q, {0, 1}, 0), 1);
  Quiver d = catalog_quiver("A1xA1");
  EXPECT_EQ(h_loc(d, {0, 1}, 0), 0);
  EXPECT_EQ(a_loc(d, {0, 1}, 0), 0);
  EXPECT_THROW(h_loc(q, {0, 1}, 1), std::out_of_range);
}

TEST(LocalDegrees, TwoClausesAgree) {
  for (const auto& inst : catalog_instances(4)) {
    for (const auto& i : sequences(inst.nu))
      for (int l = 0; l + 1 < inst.nu.total(); ++l)
        ASSERT_EQ(a_loc(inst.q, i, l), h_loc(inst.q, i, l) + h_loc(inst.q, swap_at(i, l), l))
            << inst.quiver << " " << seq_str(inst.q, i);
  }
}

TEST(DimTildeF, Examples) {
  EXPECT_EQ(dim_tilde_f(catalog_quiver("A1"), {0, 0}), 1);
  Quiver q = a2();
  EXPECT_EQ(dim_tilde_f(q, {0, 1}), 0);
  EXPECT_EQ(dim_tilde_f(q, {1, 0}) - dim_tilde_f(q, {0, 1}), 1);
}

TEST(DimTildeF, Recursion) {
  // d_{s_l(i)} = d_i - h_{s_l(i)}(l) + h_i(l) for multiplicity-free steps.
  for (const auto& inst : catalog_instances(4))
    for (const auto& i : sequences(inst.nu))
      for (int l = 0; l + 1 < inst.nu.total(); ++l) {
        if (i[static_cast<size_t>(l)] == i[static_cast<size_t>(l + 1)]) continue;
        ColorSeq s = swap_at(i, l);
        ASSERT_EQ(dim_tilde_f(inst.q, s), dim_tilde_f(inst.q, i) - h_loc(inst.q, s, l) + h_loc(inst.q, i, l));
      }
}

TEST(DivSeq, Expand) {
  EXPECT_EQ(expand(DivSeq{{0}, {3}}), (ColorSeq{0, 0, 0}));
  EXPECT_EQ(expand(DivSeq{{0, 1}, {2, 1}}), (ColorSeq{0, 0, 1}));
  EXPECT_EQ(expand(DivSeq{{0, 1, 0}, {1, 1, 1}}), (ColorSeq{0, 1, 0}));
  for (const auto& s : sequences(DimVector({2, 1}))) EXPECT_EQ(expand(DivSeq::trivial(s)), s);
}

TEST(DivSeq, ParseAndEnumerate) {
  Quiver q = a2();
  DivSeq y = DivSeq::parse(q, "i^2,j");
  EXPECT_EQ(y.str(q), "(i^2,j)");
  EXPECT_EQ(y.total(), 3);
  auto ys = divided_sequences(DimVector({2, 1}));
  EXPECT_EQ(ys.size(), 5u);
  for (const auto& z : ys) {
    EXPECT_EQ(z.weight(2).coords, (std::vector<int>{2, 1}));
    EXPECT_EQ(static_cast<int>(expand(z).size()), z.total());
  }
  EXPECT_THROW(divided_sequences(DimVector({7, 0})), std::length_error);
}
