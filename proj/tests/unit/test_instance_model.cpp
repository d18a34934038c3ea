#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "preorder/bit_matrix.hpp"
#include "preorder/generator.hpp"
#include "preorder/instance.hpp"
#include "preorder/instance_io.hpp"
#include "preorder/relation.hpp"
#include "support.hpp"

namespace preorder {
namespace {

using testing::worked_instance;
using testing::worked_solution;

TEST(BitMatrix, SetGetCountAndTranspose) {
  BitMatrix m(70);
  m.set(0, 69);
  m.set(69, 0);
  m.set(3, 64);
  EXPECT_TRUE(m.get(0, 69));
  EXPECT_FALSE(m.get(69, 1));
  EXPECT_EQ(m.count(), 3u);
  const BitMatrix t = m.transposed();
  EXPECT_TRUE(t.get(64, 3));
  EXPECT_FALSE(t.get(3, 64));
  m.reset(0, 69);
  EXPECT_EQ(m.count(), 2u);
}

TEST(BitMatrix, SetAlgebra) {
  BitMatrix a(5);
  BitMatrix b(5);
  a.set(1, 2);
  b.set(1, 2);
  b.set(3, 4);
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  BitMatrix c = b;
  c.subtract(a);
  EXPECT_EQ(c.count(), 1u);
  EXPECT_TRUE(c.get(3, 4));
  a |= c;
  EXPECT_EQ(a, b);
}

TEST(Relation, TransitiveClosureExamples) {
  EXPECT_EQ(transitive_closure(std::vector<Pair>{{0, 1}, {1, 2}}, 3), (std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(transitive_closure(std::vector<Pair>{}, 3).empty());
  EXPECT_EQ(transitive_closure(std::vector<Pair>{{0, 1}, {1, 0}}, 2), (std::vector<Pair>{{0, 1}, {1, 0}}));
}

TEST(Relation, ClosureMatchesNaiveFixpoint) {
  Random rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(9);
    Relation x(n);
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        if (p != q && rng.uniform() < 0.2) x.set(p, q, true);
      }
    }
    Relation naive = x;
    for (bool changed = true; changed;) {
      changed = false;
      for (Element p = 0; p < n; ++p) {
        for (Element q = 0; q < n; ++q) {
          for (Element r = 0; r < n; ++r) {
            if (p != r && naive.reaches(p, q) && naive.reaches(q, r) && !naive.get(p, r)) {
              naive.set(p, r, true);
              changed = true;
            }
          }
        }
      }
    }
    const Relation closed = transitive_closure(x);
    EXPECT_EQ(closed, naive);
    EXPECT_TRUE(closed.is_transitive());
  }
}

TEST(Instance, EvaluateWorkedExample) {
  const Instance inst = worked_instance();
  EXPECT_EQ(evaluate(inst, Relation(5)), 0.0);
  EXPECT_EQ(evaluate(inst, worked_solution()), 10.0);
  double total = 0.0;
  for (double v : inst.values()) total += v;
  EXPECT_EQ(evaluate(inst, Relation::complete(5)), total);
}

TEST(Instance, PositiveNegativeParts) {
  Instance inst(2);
  inst.set_value(0, 1, -3.0);
  inst.set_value(1, 0, 2.0);
  EXPECT_EQ(inst.negative(0, 1), 3.0);
  EXPECT_EQ(inst.positive(0, 1), 0.0);
  EXPECT_EQ(inst.positive(1, 0), 2.0);
  EXPECT_EQ(inst.absolute_mass(), 5.0);
  EXPECT_DOUBLE_EQ(inst.tolerance(), 5e-9);
  EXPECT_THROW(inst.set_value(0, 0, 1.0), DataError);
}

TEST(Generator, ZeroDensityGivesEmptyTruth) {
  GeneratorConfig cfg{5, 0.0, 0.5, 7, std::nullopt};
  const auto [inst, truth] = generate_synthetic(cfg);
  EXPECT_EQ(truth.arc_count(), 0u);
  double mean = 0.0;
  for (Element p = 0; p < 5; ++p) {
    for (Element q = 0; q < 5; ++q) {
      if (p != q) mean += inst.value(p, q) / 20.0;
    }
  }
  EXPECT_NEAR(mean, -0.5, 0.15);
}

TEST(Generator, FullDensityGivesCompleteTruth) {
  GeneratorConfig cfg{3, 1.0, 0.3, 1, std::nullopt};
  EXPECT_EQ(generate_synthetic(cfg).second, Relation::complete(3));
}

TEST(Generator, MomentsAtAlphaZero) {
  GeneratorConfig cfg{40, 0.5, 0.0, 99, std::nullopt};
  const auto [inst, truth] = generate_synthetic(cfg);
  EXPECT_TRUE(truth.is_transitive());
  EXPECT_GE(truth.arc_count(), 780u);
  double sum = 0.0;
  double sq = 0.0;
  std::size_t count = 0;
  for (Element p = 0; p < 40; ++p) {
    for (Element q = 0; q < 40; ++q) {
      if (!truth.get(p, q)) continue;
      sum += inst.value(p, q);
      sq += inst.value(p, q) * inst.value(p, q);
      ++count;
    }
  }
  const double mean = sum / count;
  EXPECT_NEAR(mean, 1.0, 0.01);
  EXPECT_NEAR(std::sqrt(sq / count - mean * mean), 0.1, 0.01);
}

TEST(Generator, Deterministic) {
  GeneratorConfig cfg{12, 0.4, 0.25, 5, 17};
  EXPECT_EQ(generate_synthetic(cfg), generate_synthetic(cfg));
  GeneratorConfig other = cfg;
  other.value_seed = 18;
  const auto a = generate_synthetic(cfg);
  const auto b = generate_synthetic(other);
  EXPECT_EQ(a.second, b.second);
  EXPECT_NE(a.first, b.first);
}

TEST(Generator, RejectsBadConfig) {
  EXPECT_THROW(generate_synthetic({0, 0.5, 0.5, 1, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(generate_synthetic({4, 1.5, 0.5, 1, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(generate_synthetic({4, 0.5, -0.1, 1, std::nullopt}), std::invalid_argument);
}

TEST(Random, BelowStaysInRange) {
  Random rng(3);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(rng.below(7), 7u);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(EgoNetwork, Values) {
  const Instance two = ingest_ego_network({{"a", "b"}}, {"a", "b"});
  EXPECT_EQ(two.value(0, 1), 1.0);
  EXPECT_EQ(two.value(1, 0), -1.0);
  const Instance empty = ingest_ego_network({}, {"a", "b", "c"});
  for (Element p = 0; p < 3; ++p) {
    for (Element q = 0; q < 3; ++q) {
      if (p != q) { EXPECT_EQ(empty.value(p, q), -1.0); }
    }
  }
  EXPECT_EQ(ingest_ego_network({{"a", "b"}, {"a", "b"}}, {"a", "b"}), two);
  EXPECT_THROW(ingest_ego_network({{"a", "z"}}, {"a", "b"}), DataError);
  EXPECT_THROW(ingest_ego_network({}, {}), DataError);
}

TEST(RestrictInstance, KeepsValues) {
  const Instance inst = worked_instance();
  const Instance sub = restrict_instance(inst, {1, 3, 4});
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.value(0, 1), inst.value(1, 3));
  EXPECT_EQ(sub.value(2, 1), inst.value(4, 3));
}

TEST(InstanceIo, DefaultsAndRoundTrip) {
  std::istringstream in("n=2\np,q,c\n0,1,2.0\n");
  const Instance inst = read_instance(in);
  EXPECT_EQ(inst.value(0, 1), 2.0);
  EXPECT_EQ(inst.value(1, 0), 0.0);

  GeneratorConfig cfg{40, 0.5, 0.5, 3, std::nullopt};
  const Instance big = generate_synthetic(cfg).first;
  std::stringstream buf;
  write_instance(buf, big);
  EXPECT_EQ(read_instance(buf), big);
}

TEST(InstanceIo, Errors) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
  };
  EXPECT_THROW(parse("n=2\np,q,c\n0,0,5\n"), DataError);
  EXPECT_THROW(parse("n=2\np,q,c\n0,2,5\n"), DataError);
  EXPECT_THROW(parse("n=2\np,q,c\n0,1,x\n"), DataError);
  EXPECT_THROW(parse("n=2\np,q,c\n0,1,1\n0,1,2\n"), DataError);
  EXPECT_THROW(parse("p,q,c\n0,1,1\n"), DataError);
  try {
    parse("n=2\np,q,c\n0,1,1\n1,0,nan\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(InstanceIo, PartialRoundTrip) {
  PartialAssignment x(3);
  x.fix(0, 1, true);
  x.fix(2, 0, false);
  std::stringstream buf;
  write_partial(buf, x);
  const PartialAssignment y = read_partial(buf);
  EXPECT_TRUE(y.is_one(0, 1));
  EXPECT_TRUE(y.is_zero(2, 0));
  EXPECT_FALSE(y.is_decided(1, 2));
}

TEST(EdgeList, ParsesAndCollectsNodes) {
  std::istringstream in("# comment\nb a\n\na c\n");
  const auto edges = read_edge_list(in);
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edge_list_nodes(edges), (std::vector<std::string>{"a", "b", "c"}));
  std::istringstream bad("a b c\n");
  EXPECT_THROW(read_edge_list(bad), DataError);
}

}  // namespace
}  // namespace preorder
