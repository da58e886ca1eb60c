#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace pgit;

namespace {

std::set<std::string> words(const FlagSetting& st, const std::vector<ElementId>& ids) {
  std::set<std::string> s;
  for (auto id : ids) s.insert(format_word(st.weyl[id].word));
  return s;
}

/// iota(w lambda) by applying the reduced word of w one simple reflection at a time.
Int value_by_reflections(const FlagSetting& st, ElementId w, const Weight& lambda) {
  Weight x = lambda;
  const auto& word = st.weyl[w].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_simple(st.rs, x, static_cast<std::size_t>(*it));
  return st.pe.restrict(x);
}

FlagSetting setting(const char* name) { return make_setting(CartanType::parse(name)); }

}  // namespace

TEST(Partition, A2Example) {
  auto st = setting("A2");
  auto p = partition_weyl(st, Weight{1, 1});
  EXPECT_EQ(words(st, p.plus), (std::set<std::string>{"e", "s1", "s2"}));
  EXPECT_TRUE(p.zero.empty());
  EXPECT_EQ(words(st, p.minus), (std::set<std::string>{"s1.s2", "s2.s1", "s1.s2.s1"}));
  std::multiset<Int> vals(p.values.begin(), p.values.end());
  EXPECT_EQ(vals, (std::multiset<Int>{4, 2, 2, -2, -2, -4}));
}

TEST(Partition, ValuesMatchReflectionChains) {
  oracle::WeightGen g(23);
  for (const char* name : {"A2", "C2", "G2", "A3", "B3"}) {
    auto st = setting(name);
    for (int k = 0; k < 10; ++k) {
      Weight l = g.strict(st.rs.rank(), 9);
      auto p = partition_weyl(st, l);
      for (const auto& w : st.weyl.elements()) EXPECT_EQ(p.values[w.id], value_by_reflections(st, w.id, l)) << name;
    }
  }
}

TEST(Partition, C2WallRay) {
  auto st = setting("C2");
  EXPECT_EQ(words(st, partition_weyl(st, Weight{2, 1}).zero), (std::set<std::string>{"s1.s2", "s2.s1"}));
  auto p = partition_weyl(st, Weight{3, 1});
  EXPECT_TRUE(p.zero.empty());
  EXPECT_EQ(p.plus.size(), 4u);
}

TEST(Partition, RejectsNonStrictlyDominantNamingCoordinate) {
  auto st = setting("C2");
  try {
    partition_weyl(st, Weight{1, 0});
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("coordinate 2"), std::string::npos);
  }
  EXPECT_THROW(partition_weyl(st, Weight{0, 0}), HypothesisError);
  EXPECT_THROW(partition_weyl(st, Weight{1, 1, 1}), ValidationError);
}

TEST(Strata, A2Example) {
  auto st = setting("A2");
  oracle::WeightGen g(2);
  for (int k = 0; k < 20; ++k) {
    auto r = strata_report(st, partition_weyl(st, g.strict(2, 50)));
    std::multiset<int> dims;
    for (const auto& s : r.strata) dims.insert(s.dim);
    EXPECT_EQ(dims, (std::multiset<int>{1, 2, 2}));
    EXPECT_EQ(r.dim_unstable, 2);
    EXPECT_EQ(r.codim_unstable, 1);
  }
}

TEST(Strata, C2Examples) {
  auto st = setting("C2");
  auto r = strata_report(st, partition_weyl(st, Weight{3, 1}));
  EXPECT_EQ(r.codim_unstable, 1);
  int len2 = 0;
  for (const auto& s : r.strata)
    if (s.length == 2) {
      ++len2;
      EXPECT_EQ(s.dim, 3);
    }
  EXPECT_EQ(len2, 1);
  auto w = strata_report(st, partition_weyl(st, Weight{2, 1}));
  EXPECT_EQ(w.codim_unstable, 2);
  EXPECT_EQ(w.dim_unstable, 2);
  EXPECT_TRUE(w.movable);
}

TEST(Strata, SortedCanonically) {
  auto st = setting("B3");
  auto r = strata_report(st, partition_weyl(st, Weight{1, 2, 3}));
  for (std::size_t k = 1; k < r.strata.size(); ++k) EXPECT_LT(r.strata[k - 1].element, r.strata[k].element);
}

TEST(Eigencone, Examples) {
  auto a1a1 = setting("A1xA1");
  EXPECT_TRUE(semistable_nonempty(a1a1, Weight{1, 1}));
  EXPECT_FALSE(semistable_nonempty(a1a1, Weight{2, 1}));
  auto a1 = setting("A1");
  EXPECT_TRUE(semistable_nonempty(a1, Weight{0}));
  for (Int k = 1; k <= 10; ++k) EXPECT_FALSE(semistable_nonempty(a1, Weight{k}));
  auto b3 = setting("B3");
  oracle::WeightGen g(8);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(semistable_nonempty(b3, g.dominant(3, 10)));
  EXPECT_THROW(semistable_nonempty(b3, Weight{-1, 0, 0}), HypothesisError);
}

TEST(Eigencone, A1xA1MatchesTensorOracle) {
  auto st = setting("A1xA1");
  for (Int a = 0; a <= 12; ++a)
    for (Int b = 0; b <= 12; ++b)
      EXPECT_EQ(semistable_nonempty(st, Weight{a, b}), oracle::sl2_tensor_invariants(a, b) > 0) << a << "," << b;
  auto r = strata_report(st, partition_weyl(st, Weight{1, 1}));
  EXPECT_TRUE(r.a1xa1_special_case);
}

TEST(Eigencone, AgreesWithCodimensionOnStrictlyDominantWeights) {
  oracle::WeightGen g(31);
  for (const char* name : {"A1xA1", "A1xA2", "A1xC2", "A1xG2", "A1xA1xA1", "A2", "C2", "A3"}) {
    auto st = setting(name);
    for (int k = 0; k < 60; ++k) {
      Weight l = g.strict(st.rs.rank(), 8);
      auto r = strata_report(st, partition_weyl(st, l));
      EXPECT_EQ(r.semistable_nonempty, semistable_nonempty(st, l)) << name << " " << l.to_string();
    }
  }
}

TEST(Movability, Examples) {
  EXPECT_TRUE(is_movable(setting("A3"), Weight{1, 1, 1}).movable);
  EXPECT_TRUE(is_movable(setting("C2"), Weight{2, 1}).movable);
  auto st = setting("C2");
  auto r = is_movable(st, Weight{1, 1});
  EXPECT_FALSE(r.movable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(st.weyl[r.witness->element].length, 2);
  EXPECT_LT(r.witness->value, 0);
}

TEST(Movability, PairCriterionAgreesOffA3) {
  oracle::WeightGen g(41);
  for (const char* name : {"A2", "C2", "G2", "B3", "C3", "D4", "A1xA2", "A1xC2", "A2xA2", "A1xA1", "A1xB3", "A2xC2"}) {
    auto st = setting(name);
    for (int k = 0; k < 80; ++k) {
      Weight l = g.strict(st.rs.rank(), 12);
      auto r = is_movable(st, l);
      EXPECT_TRUE(r.criterion_agrees) << name << " " << l.to_string();
      EXPECT_EQ(r.movable, !r.witness.has_value());
    }
  }
}

TEST(Movability, A3EndNodeCounterexample) {
  auto st = setting("A3");
  auto r = is_movable(st, Weight{5, 9, 47});
  EXPECT_FALSE(r.movable);
  EXPECT_TRUE(r.criterion_movable);
  EXPECT_FALSE(r.criterion_agrees);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->word, "s2.s3");
  EXPECT_EQ(r.witness->value, -14);
}

TEST(Signature, Examples) {
  auto a2 = setting("A2");
  auto fa2 = hyperplane_family(a2);
  EXPECT_EQ(git_signature(a2, fa2, Weight{1, 1}).signature, git_signature(a2, fa2, Weight{5, 2}).signature);
  auto c2 = setting("C2");
  auto fc2 = hyperplane_family(c2);
  EXPECT_NE(git_signature(c2, fc2, Weight{3, 1}).signature, git_signature(c2, fc2, Weight{1, 1}).signature);
  EXPECT_EQ(git_signature(c2, fc2, Weight{2, 1}).kind, ClassKind::WallFace);
  EXPECT_EQ(git_signature(c2, fc2, Weight{3, 1}).kind, ClassKind::Chamber);
  auto a1a1 = setting("A1xA1");
  EXPECT_EQ(git_signature(a1a1, hyperplane_family(a1a1), Weight{2, 2}).kind, ClassKind::LowDimUndetermined);
  EXPECT_THROW(git_signature(a1a1, hyperplane_family(a1a1), Weight{2, 1}), HypothesisError);
}

TEST(Census, Examples) {
  auto chk = [](const char* name, int two, int dim) {
    auto c = orbit_census(setting(name));
    EXPECT_EQ(c.num_curves, 1);
    EXPECT_EQ(c.num_two_dim, two);
    EXPECT_EQ(c.dim_x, dim);
  };
  chk("A2", 2, 3);
  chk("C2", 3, 4);
  chk("A3", 11, 6);
  EXPECT_THROW(orbit_census(setting("A1")), HypothesisError);
  EXPECT_THROW(orbit_census(setting("A1xA1")), HypothesisError);
}

TEST(GitProperties, BruhatMonotonicity) {
  oracle::WeightGen g(101);
  for (const char* name : {"A2", "C2", "A3", "G2", "B3"}) {
    auto st = setting(name);
    for (int k = 0; k < 20; ++k) {
      auto p = partition_weyl(st, g.strict(st.rs.rank(), 15));
      for (const auto& w : st.weyl.elements())
        for (ElementId u : st.weyl.covers(w.id)) EXPECT_GT(p.values[u], p.values[w.id]) << name;
    }
  }
}

TEST(GitProperties, SmallLengthPositivity) {
  oracle::WeightGen g(202);
  for (const char* name : {"A2", "C2", "B3", "A3", "D4", "G2"}) {
    auto st = setting(name);
    const bool len2 = std::string(name) != "A2" && std::string(name) != "C2" && std::string(name) != "A3";
    for (int k = 0; k < 100; ++k) {
      auto p = partition_weyl(st, g.strict(st.rs.rank(), 20));
      for (const auto& w : st.weyl.elements()) {
        if (w.length <= 1 || (len2 && w.length == 2)) { EXPECT_GT(p.values[w.id], 0) << name << " " << format_word(w.word); }
      }
    }
  }
}

TEST(GitProperties, DimensionSumAndLongestElementFlip) {
  oracle::WeightGen g(303);
  for (const char* name : {"A2", "C2", "G2", "A3", "B3", "C3", "A1xA2", "A1xA1"}) {
    auto st = setting(name);
    const ElementId w0 = st.weyl.longest();
    for (int k = 0; k < 40; ++k) {
      auto p = partition_weyl(st, g.strict(st.rs.rank(), 12));
      auto r = strata_report(st, p);
      ASSERT_TRUE(r.codim_unstable.has_value());
      EXPECT_EQ(r.dim_unstable + *r.codim_unstable, st.dim_x()) << name;
      std::set<ElementId> flipped, minus(p.minus.begin(), p.minus.end()), zero(p.zero.begin(), p.zero.end()), fz;
      for (auto w : p.plus) flipped.insert(st.weyl.multiply(w0, w));
      for (auto w : p.zero) fz.insert(st.weyl.multiply(w0, w));
      EXPECT_EQ(flipped, minus);
      EXPECT_EQ(fz, zero);
      EXPECT_EQ(p.plus.size() + p.zero.size() + p.minus.size(), st.weyl.order());
      EXPECT_GT(p.values[st.weyl.identity()], 0);
    }
  }
}

TEST(GitProperties, A3LengthTwoSigns) {
  // s2 s3 lambda(h0) = 3 l1 + 2 l2 - l3 and s2 s1 lambda(h0) = 3 l3 + 2 l2 - l1.
  auto st = setting("A3");
  const ElementId s23 = st.weyl.from_word({1, 2}), s21 = st.weyl.from_word({1, 0});
  for (Int a = 1; a <= 12; ++a)
    for (Int b = 1; b <= 12; ++b)
      for (Int c = 1; c <= 40; ++c) {
        auto p = partition_weyl(st, Weight{a, b, c});
        EXPECT_EQ(p.values[s23], 3 * a + 2 * b - c);
        EXPECT_EQ(p.values[s21], 3 * c + 2 * b - a);
        const bool low = 3 * a + 2 * b < c || 3 * c + 2 * b < a;
        EXPECT_EQ(*strata_report(st, p).codim_unstable < 2, low) << a << "," << b << "," << c;
      }
}

TEST(GitProperties, UnstableCodimensionAtLeastTwoForLargeFactors) {
  oracle::WeightGen g(404);
  for (const char* name : {"A4", "B3", "C3", "G2", "D4", "A4xG2"}) {
    auto st = setting(name);
    bool large = true;
    for (const auto& c : st.rs.type().components()) large = large && c.classical_num_positive_roots() >= 5;
    for (int k = 0; k < 200; ++k) {
      auto r = strata_report(st, partition_weyl(st, g.strict(st.rs.rank(), 30)));
      if (large) { EXPECT_GE(*r.codim_unstable, 2) << name; }
    }
  }
}
