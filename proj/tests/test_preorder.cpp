#include <gtest/gtest.h>

#include <random>

#include "ordinal/ordinal.hpp"

using namespace ordinal;

namespace {

Preorder mixed_example() {
  RelationStructure s({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}});
  return Preorder::reflexivize(transitive_closure(s));
}

Preorder random_preorder(std::size_t n, std::mt19937& rng) {
  return Preorder::reflexivize(random_closed_structure(n, rng, 0.25));
}

}  // namespace

TEST(Preorder, Validation) {
  EXPECT_THROW(Preorder(RelationStructure({"a"}, {})), NotReflexive);
  EXPECT_THROW(Preorder(RelationStructure({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}})),
               NotTransitive);
  auto p = Preorder::reflexivize(chain({"a", "b"}).relation());
  EXPECT_TRUE(p.normalized());
  EXPECT_FALSE(Preorder::reflexivize(p.relation()).normalized());
}

TEST(Quotient, MixedExample) {
  auto q = quotient(mixed_example());
  ASSERT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(q.classes[0], make_set(3, {0, 1}));
  EXPECT_EQ(q.classes[1], make_set(3, {2}));
  EXPECT_EQ(q.class_order.names(), (std::vector<std::string>{"a", "c"}));
  EXPECT_TRUE(q.class_order.less("a", "c"));
  EXPECT_EQ(q.projection, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Quotient, AntisymmetricGivesSingletons) {
  auto pre = Preorder::reflexivize(RelationStructure({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}));
  auto q = quotient(pre);
  EXPECT_EQ(q.classes.size(), 3u);
  EXPECT_EQ(q.class_order, strict_part(pre));
}

TEST(Quotient, TotalSymmetric) {
  std::vector<NamePair> all;
  for (auto x : {"a", "b", "c"})
    for (auto y : {"a", "b", "c"}) all.emplace_back(x, y);
  Preorder p(RelationStructure({"a", "b", "c"}, all));
  auto q = quotient(p);
  EXPECT_EQ(q.classes.size(), 1u);
  EXPECT_EQ(q.class_order.relation().pair_count(), 0u);
  EXPECT_EQ(strict_part(p).relation().pair_count(), 0u);
}

TEST(StrictPart, Examples) {
  EXPECT_EQ(strict_part(Preorder::reflexivize(chain({"a", "b"}).relation())), chain({"a", "b"}));
  EXPECT_EQ(strict_part(mixed_example()), Poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
}

TEST(Quotient, ExchangeLawAndHomomorphism) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto pre = random_preorder(6, rng);
    const auto& r = pre.relation();
    auto strict = strict_part(pre);
    auto q = quotient(pre);
    for (Index a = 0; a < 6; ++a)
      for (Index b = 0; b < 6; ++b) {
        const bool same = r.has(a, b) && r.has(b, a);
        EXPECT_EQ(same, q.projection[a] == q.projection[b]);
        if (strict.less(a, b)) {
          EXPECT_TRUE(q.class_order.less(q.projection[a], q.projection[b]));
          for (Index c = 0; c < 6; ++c)
            if (q.projection[c] == q.projection[a]) EXPECT_TRUE(strict.less(c, b));
        }
      }
    // class order equals the strict part restricted to representatives
    ElementSet reps(6);
    for (auto i : q.representatives) reps.set(i);
    EXPECT_EQ(q.class_order, strict.induced(reps));
  }
}

TEST(Quotient, ClassesMeetCompleteLinesInIntervals) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto pre = random_preorder(6, rng);
    const auto& r = pre.relation();
    auto q = quotient(pre);
    // complete lines of (M <=): maximal pairwise comparable sets, by brute force
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      auto comparable = [&](std::uint32_t m) {
        for (Index a = 0; a < 6; ++a)
          for (Index b = 0; b < 6; ++b)
            if ((m >> a & 1U) && (m >> b & 1U) && !r.has(a, b) && !r.has(b, a)) return false;
        return true;
      };
      if (!comparable(mask)) continue;
      bool maximal = true;
      for (Index x = 0; x < 6; ++x)
        if (!(mask >> x & 1U) && comparable(mask | 1U << x)) maximal = false;
      if (!maximal) continue;
      for (const auto& cls : q.classes) {
        // x between two members of cls on the line must be in cls
        for (Index a = 0; a < 6; ++a)
          for (Index b = 0; b < 6; ++b)
            for (Index x = 0; x < 6; ++x) {
              if (!cls.test(a) || !cls.test(b) || !(mask >> a & 1U) || !(mask >> b & 1U) || !(mask >> x & 1U)) continue;
              if (r.has(a, x) && r.has(x, b)) EXPECT_TRUE(cls.test(x));
            }
      }
    }
  }
}
