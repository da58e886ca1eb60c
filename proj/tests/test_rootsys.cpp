#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace pgit;

namespace {

std::vector<std::string> test_types() {
  std::vector<std::string> t;
  for (int l = 1; l <= 8; ++l) t.push_back("A" + std::to_string(l));
  for (int l = 3; l <= 6; ++l) t.push_back("B" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) t.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 7; ++l) t.push_back("D" + std::to_string(l));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2", "A1xA1", "A3xG2", "B3xA2"}) t.push_back(s);
  return t;
}

}  // namespace

TEST(CartanType, ParsesCompositeTypes) {
  auto t = CartanType::parse("A3xG2");
  ASSERT_EQ(t.components().size(), 2u);
  EXPECT_EQ(t.rank(), 5u);
  EXPECT_EQ(t.to_string(), "A3xG2");
}

TEST(CartanType, CanonicalizesB2ToC2) { EXPECT_EQ(CartanType::parse("B2").to_string(), "C2"); }

TEST(CartanType, RejectsInvalidRanks) {
  for (const char* s : {"B1", "C1", "D3", "E5", "E9", "F3", "G3", "A0", "", "A", "Ax", "A2x", "a2", "Q2"})
    EXPECT_THROW(CartanType::parse(s), ValidationError) << s;
}

TEST(CartanType, ParseErrorNamesPosition) {
  try {
    CartanType::parse("A2xQ3");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Weight, ParsesCommaSeparatedIntegers) {
  EXPECT_EQ(parse_weight("3,1"), (IntVector{3, 1}));
  EXPECT_EQ(parse_weight("-2, 0,5"), (IntVector{-2, 0, 5}));
  EXPECT_THROW(parse_weight("3,,1"), ValidationError);
  EXPECT_THROW(parse_weight("3,a"), ValidationError);
}

TEST(RootSystem, PositiveRootCountsOfExamples) {
  EXPECT_EQ(build_root_system(CartanType::parse("A2")).num_positive_roots(), 3u);
  EXPECT_EQ(build_root_system(CartanType::parse("C2")).num_positive_roots(), 4u);
  EXPECT_EQ(build_root_system(CartanType::parse("B3")).num_positive_roots(), 9u);
}

TEST(RootSystem, StructuralInvariantsForAllTestTypes) {
  for (const auto& name : test_types()) {
    SCOPED_TRACE(name);
    auto t = CartanType::parse(name);
    auto rs = build_root_system(t);
    const std::size_t n = rs.rank();
    const auto& A = rs.cartan();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) EXPECT_EQ(A(i, j), 2);
        else EXPECT_LE(A(i, j), 0);
        EXPECT_EQ(A(i, j) == 0, A(j, i) == 0);
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += Rational(A(i, k)) * rs.cartan_inv()(k, j);
        EXPECT_EQ(s, Rational(i == j ? 1 : 0));
        EXPECT_GE(rs.cartan_inv()(i, j), 0);
      }
    EXPECT_EQ(rs.num_positive_roots(), static_cast<std::size_t>(t.classical_num_positive_roots()));
    EXPECT_EQ(rs.positive_coroots().size(), rs.num_positive_roots());
    EXPECT_EQ(rs.rho().coords, IntVector(n, 1));
  }
}

TEST(RootSystem, ConventionColumnIsSimpleRootWeight) {
  auto rs = build_root_system(CartanType::parse("C2"));
  EXPECT_EQ(rs.simple_root_weight(0), (IntVector{2, -1}));
  EXPECT_EQ(rs.simple_root_weight(1), (IntVector{-2, 2}));
}

TEST(RootSystem, PairCoroot) {
  auto a2 = build_root_system(CartanType::parse("A2"));
  EXPECT_EQ(pair_coroot(a2, Weight{1, 1}, IntVector{1, 0}), 1);
  EXPECT_EQ(pair_coroot(a2, Weight{1, 1}, IntVector{1, 1}), 2);
  EXPECT_THROW(pair_coroot(a2, Weight{1, 1, 1}, IntVector{1, 0}), ValidationError);
  // The highest coroot of C2 is alpha1v + 2 alpha2v.
  auto c2 = build_root_system(CartanType::parse("C2"));
  Int best = 0, top = 0;
  for (const auto& cv : c2.positive_coroots()) {
    best = std::max(best, pair_coroot(c2, Weight{0, 1}, cv));
    top = std::max(top, pair_coroot(c2, Weight{1, 0}, cv));
  }
  EXPECT_EQ(best, 2);
  EXPECT_EQ(top, 1);
}

TEST(RootSystem, ReflectSimpleExamples) {
  auto a2 = build_root_system(CartanType::parse("A2"));
  auto c2 = build_root_system(CartanType::parse("C2"));
  EXPECT_EQ(reflect_simple(a2, Weight{1, 0}, 0), (Weight{-1, 1}));
  EXPECT_EQ(reflect_simple(c2, Weight{0, 1}, 1), (Weight{2, -1}));
  EXPECT_EQ(reflect_simple(c2, Weight{0, 1}, 0), (Weight{0, 1}));
  EXPECT_THROW(reflect_simple(c2, Weight{0, 1}, 2), ValidationError);
}

TEST(RootSystem, ReflectSimpleIsInvolutionFixingExactlyTheWall) {
  oracle::WeightGen g(11);
  for (const char* name : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    auto rs = build_root_system(CartanType::parse(name));
    for (int k = 0; k < 50; ++k) {
      Weight l = g.dominant(rs.rank(), 6);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        l.coords[i] -= g.uniform(0, 6);
        Weight r = reflect_simple(rs, l, i);
        EXPECT_EQ(reflect_simple(rs, r, i), l);
        EXPECT_EQ(r == l, l[i] == 0);
      }
    }
  }
}

TEST(RootSystem, WeylDimensionExamples) {
  auto a2 = build_root_system(CartanType::parse("A2"));
  auto c2 = build_root_system(CartanType::parse("C2"));
  EXPECT_EQ(weyl_dimension(a2, Weight{0, 0}), 1);
  EXPECT_EQ(weyl_dimension(a2, Weight{1, 1}), 8);
  EXPECT_EQ(weyl_dimension(c2, Weight{1, 0}), 4);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("G2")), Weight{1, 0}), 7);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("G2")), Weight{0, 1}), 14);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("E8")), Weight{0, 0, 0, 0, 0, 0, 0, 1}), 248);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("F4")), Weight{0, 0, 0, 1}), 26);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("E6")), Weight{1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dimension(build_root_system(CartanType::parse("E7")), Weight{0, 0, 0, 0, 0, 0, 1}), 56);
  EXPECT_THROW(weyl_dimension(a2, Weight{-1, 0}), HypothesisError);
}

TEST(RootSystem, WeylDimensionIsOneOnlyAtZero) {
  oracle::WeightGen g(5);
  for (const char* name : {"A3", "B3", "G2", "C3"}) {
    auto rs = build_root_system(CartanType::parse(name));
    for (int k = 0; k < 100; ++k) {
      Weight l = g.dominant(rs.rank(), 4);
      BigInt d = weyl_dimension(rs, l);
      EXPECT_GE(d, 1);
      EXPECT_EQ(d == 1, l.is_zero());
    }
  }
}
