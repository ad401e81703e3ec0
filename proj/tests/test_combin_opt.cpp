#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "umw/combin_opt.hpp"
#include "umw/errors.hpp"

using namespace umw;

namespace {

std::vector<double> random_weights(std::mt19937_64& rng, int n, int max_value = 9) {
  std::vector<double> w(n);
  for (double& x : w) x = static_cast<double>(rng() % static_cast<std::uint64_t>(max_value + 1));
  return w;
}

}  // namespace

TEST_SUITE("combin_opt") {

TEST_CASE("NodeWeights validation") {
  CHECK_THROWS_AS(NodeWeights({1.0, -0.5}), ValidationError);
  CHECK_THROWS_AS(NodeWeights({std::numeric_limits<double>::infinity()}), ValidationError);
  CHECK_THROWS_AS(mcds_exact(topology::star(2), NodeWeights({1.0})), DimensionMismatch);
}

TEST_CASE("mcds_exact examples") {
  CHECK(mcds_exact(topology::star(3), NodeWeights({4, 1, 2, 3})) == NodeSet{0});

  // Node 3 is dominated only by 2, and 2 is reached only through 1: the one minimal CDS is {0,1,2}.
  NetworkGraph path4 = topology::path(4);
  auto all = oracle::minimal_cds(oracle::adjacency(path4));
  REQUIRE(all.size() == 1);
  CHECK(all.front() == oracle::Set{0, 1, 2});
  CHECK(mcds_exact(path4, NodeWeights({0, 5, 1, 0})) == NodeSet{0, 1, 2});

  NetworkGraph grid = topology::grid(3, 3);
  CHECK(mcds_exact(grid, NodeWeights::zeros(9)) == enumerate_minimal_cds(grid).front());
  CHECK(mcds_exact(grid, NodeWeights::zeros(9)) == NodeSet{0, 1, 2, 3, 5, 6});
}

TEST_CASE("mcds_exact matches brute force") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    NetworkGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8));
    auto w = random_weights(rng, g.node_count(), 3);  // small range forces ties
    NodeSet got = mcds_exact(g, NodeWeights(w));
    CHECK(oracle::to_set(got) == oracle::min_weight_cds(oracle::adjacency(g), w));
  }
}

TEST_CASE("mcds_greedy is feasible and never beats the optimum") {
  CHECK(mcds_greedy(topology::star(4), NodeWeights::zeros(5)) == NodeSet{0});
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    NetworkGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    NodeWeights w(random_weights(rng, g.node_count()));
    NodeSet greedy = mcds_greedy(g, w);
    CHECK(is_cds(g, greedy));
    CHECK(w.sum(greedy) >= w.sum(mcds_exact(g, w)) - 1e-12);
  }
}

TEST_CASE("mcds_greedy avoids a single heavy node when it can") {
  std::mt19937_64 rng(1234);
  int avoidable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    NetworkGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8));
    auto w = random_weights(rng, g.node_count());
    NodeId heavy = 1 + static_cast<NodeId>(rng() % static_cast<std::uint64_t>(g.node_count() - 1));
    w[heavy] = 1e6;
    // Feasible without `heavy` iff some minimal CDS skips it.
    bool can_avoid = false;
    for (NodeSet d : enumerate_minimal_cds(g)) can_avoid = can_avoid || !d.contains(heavy);
    NodeSet got = mcds_greedy(g, NodeWeights(w));
    if (can_avoid) {
      ++avoidable;
      CHECK_FALSE(got.contains(heavy));
    }
  }
  CHECK(avoidable > 50);
}

TEST_CASE("mwis_exact examples") {
  CHECK(mwis_exact(ConflictGraph(3), NodeWeights({1, 2, 3})) == NodeSet{0, 1, 2});
  CHECK(mwis_exact(ConflictGraph(3), NodeWeights({0, 2, 3})) == NodeSet{1, 2});
  CHECK(mwis_exact(ConflictGraph::complete(3), NodeWeights({1, 5, 2})) == NodeSet{1});
  CHECK(mwis_exact(ConflictGraph::complete(3), NodeWeights::zeros(3)).empty());
  // Tie between {0,2} (1+1) and {1} (2): lexicographically {0,2} wins.
  ConflictGraph path(3, {{0, 1}, {1, 2}});
  CHECK(mwis_exact(path, NodeWeights({1, 2, 1})) == NodeSet{0, 2});
  CHECK(mwis_exact(path, NodeWeights({1, 2, 1}), NodeSet{1, 2}) == NodeSet{1});
  CHECK_THROWS_AS(mwis_exact(ConflictGraph(17), NodeWeights::zeros(17)), LimitExceeded);
}

TEST_CASE("mwis_exact matches brute force on random conflict graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 15);
    ConflictGraph cg = oracle::random_conflicts(rng, n, 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    auto w = random_weights(rng, n, 4);
    NodeSet got = mwis_exact(cg, NodeWeights(w));
    CHECK(cg.is_independent(got));
    CHECK(oracle::to_set(got) == oracle::max_weight_is(oracle::matrix(cg), w));
  }
}

TEST_CASE("mwis_greedy") {
  CHECK(mwis_greedy(ConflictGraph(3), NodeWeights({1, 0, 3})) == NodeSet{0, 2});
  CHECK(mwis_greedy(ConflictGraph::complete(4), NodeWeights({1, 5, 2, 5})) == NodeSet{1});
  std::mt19937_64 rng(8);
  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 15);
    ConflictGraph cg = oracle::random_conflicts(rng, n, 0.3);
    NodeWeights w(random_weights(rng, n));
    NodeSet g = mwis_greedy(cg, w), e = mwis_exact(cg, w);
    CHECK(cg.is_independent(g));
    CHECK(w.sum(g) <= w.sum(e) + 1e-12);
    if (w.sum(e) > 0) worst = std::min(worst, w.sum(g) / w.sum(e));
  }
  MESSAGE("worst greedy/exact MWIS weight ratio: " << worst);
}

TEST_CASE("argmin and argmax are scale invariant and deterministic") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    NetworkGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7));
    ConflictGraph cg = build_conflict_graph(g, InterferenceModel::primary());
    auto w = random_weights(rng, g.node_count(), 3);
    auto scaled = w;
    for (double& x : scaled) x *= 7.0;
    CHECK(mcds_exact(g, NodeWeights(w)) == mcds_exact(g, NodeWeights(scaled)));
    CHECK(mwis_exact(cg, NodeWeights(w)) == mwis_exact(cg, NodeWeights(scaled)));
    CHECK(mcds_exact(g, NodeWeights(w)) == mcds_exact(g, NodeWeights(w)));
  }
}

TEST_CASE("CdsCatalog agrees with mcds_exact") {
  NetworkGraph g = topology::grid(3, 3);
  CdsCatalog cat(g);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    NodeWeights w(random_weights(rng, 9, 3));
    CHECK(cat.argmin(w) == mcds_exact(g, w));
  }
}

}  // TEST_SUITE
