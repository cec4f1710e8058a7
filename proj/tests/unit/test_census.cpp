#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "sfc/census.hpp"
#include "sfc/enumeration.hpp"
#include "sfc/error.hpp"
#include "sfc/spinecodec.hpp"

namespace sfc {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an sfc::Error";
  return ErrorKind::IoError;
}

std::uint64_t count_enumerated(const Graph& g, std::uint64_t cap = kDefaultTreeCap) {
  std::uint64_t c = 0;
  std::set<std::vector<Edge>> distinct;
  enumerate_spanning_trees(g, cap, [&](const Tree& t) {
    ++c;
    if (c <= 5000) EXPECT_TRUE(distinct.insert(t.sorted_edges()).second);
  });
  return c;
}

TEST(Kirchhoff, Examples) {
  EXPECT_EQ(kirchhoff_count(complete_graph(5)), 125);
  EXPECT_EQ(kirchhoff_count(cycle_graph(7)), 7);
  EXPECT_EQ(kirchhoff_count(petersen_graph()), oracle::deletion_contraction_count(petersen_graph()));
  EXPECT_EQ(kirchhoff_count(petersen_graph()), 2000);
}

TEST(Kirchhoff, AgreesWithDeletionContraction) {
  std::vector<Graph> graphs{complete_bipartite(2, 3), complete_bipartite(3, 3), hypercube_graph(3),
                            complete_graph(6), random_regular(10, 3, 4).graph, random_regular(9, 4, 8).graph};
  for (const Graph& g : graphs) EXPECT_EQ(kirchhoff_count(g), oracle::deletion_contraction_count(g));
}

TEST(Kirchhoff, CayleyUpToThirty) {
  for (int n = 1; n <= 30; ++n) {
    BigInt expected = n == 1 ? BigInt(1) : pow(BigInt(n), static_cast<unsigned long>(n - 2));
    EXPECT_EQ(kirchhoff_count(complete_graph(n)), expected) << n;
  }
}

TEST(Kirchhoff, DisconnectedIsZero) {
  EXPECT_EQ(kirchhoff_count(disjoint_union(complete_graph(4), complete_graph(4))), 0);
  EXPECT_EQ(kirchhoff_count(disjoint_union(complete_graph(1), cycle_graph(5))), 0);
  EXPECT_EQ(kirchhoff_count(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})), 0);
}

TEST(Kirchhoff, TooLarge) { EXPECT_EQ(kind_of([] { kirchhoff_count(cycle_graph(20), 10); }), ErrorKind::TooLarge); }

TEST(Enumerate, Examples) {
  std::uint64_t c5 = 0;
  enumerate_spanning_trees(cycle_graph(5), 100, [&](const Tree& t) {
    ++c5;
    EXPECT_EQ(degree_stats(t).max_degree, 2);
  });
  EXPECT_EQ(c5, 5u);
  EXPECT_EQ(count_enumerated(complete_graph(4)), 16u);
  EXPECT_EQ(BigInt(static_cast<unsigned long>(count_enumerated(complete_bipartite(2, 3)))),
            kirchhoff_count(complete_bipartite(2, 3)));
}

TEST(Enumerate, CountsMatchDeterminantOnTestSet) {
  std::vector<Graph> graphs{petersen_graph(), complete_bipartite(2, 3), hypercube_graph(3),
                            random_regular(12, 3, 1).graph, random_regular(10, 4, 2).graph};
  for (int n = 2; n <= 7; ++n) graphs.push_back(complete_graph(n));
  for (int n = 3; n <= 12; ++n) graphs.push_back(cycle_graph(n));
  for (const Graph& g : graphs) {
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count_enumerated(g))), kirchhoff_count(g)) << g.size();
  }
}

TEST(Enumerate, SpansEveryVertexOfTheHost) {
  Graph g = petersen_graph();
  enumerate_spanning_trees(g, kDefaultTreeCap, [&](const Tree& t) {
    ASSERT_EQ(t.size(), g.size());
    for (auto [u, v] : t.edges()) ASSERT_TRUE(g.has_edge(u, v));
  });
}

TEST(Enumerate, OverCapAndDisconnected) {
  try {
    enumerate_spanning_trees(complete_graph(6), 1000, [](const Tree&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OverCap);
    EXPECT_NE(std::string(e.what()).find("1296"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] {
              enumerate_spanning_trees(disjoint_union(complete_graph(3), complete_graph(3)), 100, [](const Tree&) {});
            }),
            ErrorKind::Disconnected);
}

TEST(Census, CompleteGraphK4) {
  SpanningTreeCensus c = unlabelled_census(complete_graph(4), kDefaultTreeCap);
  EXPECT_EQ(c.labelled_count, 16);
  EXPECT_EQ(c.distinct_unlabelled, 2u);
  std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
  std::vector<Edge> s3{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(c.classes.at(canon_free(Tree::from_edges(4, p4))), 12);
  EXPECT_EQ(c.classes.at(canon_free(Tree::from_edges(4, s3))), 4);
}

TEST(Census, CyclesHaveOneClass) {
  for (int n = 3; n <= 12; ++n) {
    SpanningTreeCensus c = unlabelled_census(cycle_graph(n), kDefaultTreeCap);
    EXPECT_EQ(c.distinct_unlabelled, 1u);
    EXPECT_EQ(c.labelled_count, n);
  }
}

TEST(Census, CompleteGraphClassesMatchFreeCounts) {
  CountTable t = free_counts(8);
  for (int n = 2; n <= 7; ++n) {
    SpanningTreeCensus c = unlabelled_census(complete_graph(n), kDefaultTreeCap);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(c.distinct_unlabelled)), t.free(n)) << n;
  }
}

TEST(Census, ClassSumAndIsomorphismClosureOnK6) {
  Graph g = complete_graph(6);
  SpanningTreeCensus c = unlabelled_census(g, kDefaultTreeCap);
  BigInt total = 0;
  for (auto& [code, m] : c.classes) total += m;
  EXPECT_EQ(total, c.labelled_count);

  std::map<CanonCode, std::vector<Tree>> members;
  enumerate_spanning_trees(g, kDefaultTreeCap, [&](const Tree& t) {
    auto& bucket = members[canon_free(t)];
    if (bucket.size() < 4) bucket.push_back(t);
  });
  std::vector<Tree> reps;
  for (auto& [code, trees] : members) {
    for (std::size_t i = 1; i < trees.size(); ++i) EXPECT_TRUE(oracle::brute_isomorphic(trees[0], trees[i]));
    reps.push_back(trees[0]);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(oracle::brute_isomorphic(reps[i], reps[j]));
  }
}

TEST(Census, ThreadCountDoesNotChangeResult) {
  Graph g = random_regular(12, 4, 3).graph;
  SpanningTreeCensus one = unlabelled_census(g, kDefaultTreeCap);
  SpanningTreeCensus four = unlabelled_census(g, kDefaultTreeCap, std::nullopt, 4);
  EXPECT_EQ(one.classes, four.classes);
  EXPECT_EQ(one.labelled_count, four.labelled_count);
}

TEST(Census, BoundReports) {
  SpanningTreeCensus c = unlabelled_census(petersen_graph(), kDefaultTreeCap, Rational(1, 2));
  EXPECT_EQ(c.lee.threshold, 2);
  EXPECT_TRUE(c.lee.pass);
  ASSERT_TRUE(c.main);
  EXPECT_EQ(c.main->base, make_rational(2456, 1000));
  // 2.456^10 = 7985.16..., so the threshold is 7986 (4 digits).
  EXPECT_EQ(c.main->threshold, 7986);
  EXPECT_EQ(c.main->threshold_digits, 4u);
  EXPECT_EQ(c.main->pass, c.distinct_unlabelled >= 7986);

  SpanningTreeCensus k3 = unlabelled_census(complete_graph(3), kDefaultTreeCap, Rational(2));
  ASSERT_TRUE(k3.main);
  EXPECT_EQ(k3.main->threshold, 1);  // 0.956^3 < 1
  EXPECT_TRUE(k3.main->pass);
}

TEST(Census, EnvironmentOverridesTreeCap) {
  ::setenv("SFC_CAP_TREES", "123", 1);
  EXPECT_EQ(default_tree_cap(), 123u);
  ::unsetenv("SFC_CAP_TREES");
  EXPECT_EQ(default_tree_cap(), kDefaultTreeCap);
}

}  // namespace
}  // namespace sfc
