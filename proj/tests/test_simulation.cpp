#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "umw/errors.hpp"
#include "umw/capacity.hpp"
#include "umw/simulation.hpp"

using namespace umw;

TEST_SUITE("simulation") {

TEST_CASE("ltf_pick") {
  NodeBuffer b;
  b.push({1, 4, 3});
  b.push({2, 4, 1});
  auto first = ltf_pick(b, 1);
  REQUIRE(first.size() == 1);
  CHECK(first[0].packet_id == 2);
  CHECK(b.size() == 1);

  NodeBuffer empty;
  CHECK(ltf_pick(empty, 2).empty());

  NodeBuffer ties;
  ties.push({7, 0, 2});
  ties.push({4, 0, 2});
  ties.push({9, 0, 0});
  auto two = ltf_pick(ties, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].packet_id == 9);
  CHECK(two[1].packet_id == 4);
  CHECK(ltf_pick(ties, 0).empty());
}

TEST_CASE("config validation") {
  NetworkGraph g = topology::star(3);
  ConflictGraph cg(4);
  SimConfig bad;
  bad.p_on = 1.5;
  CHECK_THROWS_AS(simulate(g, cg, bad), ConfigError);
  bad = {};
  bad.lambda = -1;
  CHECK_THROWS_AS(simulate(g, cg, bad), ConfigError);
  bad = {};
  bad.horizon = 0;
  CHECK_THROWS_AS(simulate(g, cg, bad), ConfigError);
}

TEST_CASE("zero arrivals produce an empty trace") {
  NetworkGraph g = topology::star(3);
  SimConfig cfg;
  cfg.horizon = 50;
  Trace t = simulate(g, ConflictGraph(4), cfg);
  CHECK(t.horizon() == 50);
  CHECK(t.total_delivered() == 0);
  CHECK(t.packets.empty());
  CHECK_FALSE(t.mean_delay().has_value());
  for (const auto& s : t.slots) {
    CHECK(s.sum_pq == 0);
    CHECK(s.max_vq == 0.0);
    CHECK(s.schedule.empty());
  }
}

TEST_CASE("single packet on the star is delivered after one transmission") {
  NetworkGraph g = topology::star(3);
  SimConfig cfg;
  cfg.horizon = 5;
  cfg.scripted_arrivals = {0, 1};
  Trace t = simulate(g, ConflictGraph(4), cfg);
  REQUIRE(t.packets.size() == 1);
  CHECK(t.packets[0].arrival_slot == 1);
  REQUIRE(t.packets[0].delivered_slot.has_value());
  CHECK(*t.packets[0].delivered_slot == 2);
  CHECK(*t.packets[0].delay() == 1);
  CHECK(t.slots[1].sum_pq == 1);
  CHECK(t.slots[2].sum_pq == 0);
  CHECK(t.slots[2].schedule == NodeSet{0});
  CHECK(t.slots[4].delivered == 1);
}

TEST_CASE("identical configuration gives identical traces") {
  NetworkGraph g = topology::grid(3, 3);
  ConflictGraph cg = build_conflict_graph(g, InterferenceModel::primary());
  SimConfig cfg;
  cfg.lambda = 0.3;
  cfg.horizon = 3000;
  cfg.seed = 42;
  cfg.p_on = 0.7;
  Trace a = simulate(g, cg, cfg), b = simulate(g, cg, cfg);
  REQUIRE(a.slots.size() == b.slots.size());
  for (std::size_t k = 0; k < a.slots.size(); ++k) {
    CHECK(a.slots[k].sum_pq == b.slots[k].sum_pq);
    CHECK(a.slots[k].max_vq == b.slots[k].max_vq);
    CHECK(a.slots[k].schedule == b.slots[k].schedule);
  }
  CHECK(a.packets.size() == b.packets.size());
  cfg.seed = 43;
  Trace c = simulate(g, cg, cfg);
  CHECK(c.packets.size() != a.packets.size());
}

TEST_CASE("hyperedge, route and LTF invariants hold on every transmission") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 12; ++trial) {
    NetworkGraph g = trial == 0 ? topology::grid(3, 3) : oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7));
    ConflictGraph cg = build_conflict_graph(g, trial % 2 ? InterferenceModel::none() : InterferenceModel::primary());
    SimConfig cfg;
    cfg.lambda = 0.5 * std::max(0.05, std::min(1.0, broadcast_capacity(g, cg).lambda_star));
    cfg.horizon = 1500;
    cfg.seed = trial;
    cfg.p_on = trial % 3 == 0 ? 0.6 : 1.0;
    cfg.route_solver = trial % 4 == 1 ? Solver::Greedy : Solver::Exact;

    std::set<std::pair<NodeId, PacketId>> transmitted;
    std::map<PacketId, NodeSet> holders;
    bool ok = true;
    Trace t = simulate(g, cg, cfg, [&](const TransmissionEvent& e) {
      ok = ok && e.receivers == g.out_neighbors(e.sender);
      ok = ok && transmitted.insert({e.sender, e.packet_id}).second;
      ok = ok && e.enqueued.is_subset_of(e.route) && e.route.contains(e.sender);
      ok = ok && e.transmit_count <= g.node_count() - 1;
      ok = ok && !holders[e.packet_id].intersects(e.enqueued);
      holders[e.packet_id] |= e.enqueued;
    });
    CHECK(ok);
    CHECK(t.sandwich_holds());
    for (std::size_t k = 1; k < t.slots.size(); ++k) CHECK(t.slots[k].delivered >= t.slots[k - 1].delivered);
  }
}

TEST_CASE("arrival processes have the requested mean") {
  SimRng rng(1);
  const int draws = 200000;
  double poisson = 0, batch = 0;
  for (int k = 0; k < draws; ++k) {
    poisson += rng.poisson(2.7);
    batch += rng.bernoulli_batch(2.7);
  }
  CHECK(poisson / draws == doctest::Approx(2.7).epsilon(0.01));
  CHECK(batch / draws == doctest::Approx(2.7).epsilon(0.01));
  SimRng big(2);
  double sum = 0;
  for (int k = 0; k < 20000; ++k) sum += big.poisson(75.0);
  CHECK(sum / 20000 == doctest::Approx(75.0).epsilon(0.01));
}

TEST_CASE("availability gates transmissions") {
  NetworkGraph g = topology::star(3);
  SimConfig cfg;
  cfg.lambda = 0.5;
  cfg.horizon = 500;
  cfg.p_on = 0.0;
  Trace t = simulate(g, ConflictGraph(4), cfg);
  for (const auto& s : t.slots) CHECK(s.schedule.empty());
  CHECK(t.total_delivered() == 0);
  CHECK(t.slots.back().sum_pq == t.slots.back().arrivals);
}

TEST_CASE("measure_saturation") {
  NetworkGraph g = topology::grid(3, 3);
  ConflictGraph cg = build_conflict_graph(g, InterferenceModel::primary());
  SimConfig base;
  base.horizon = 20000;
  base.seed = 100;
  auto rows = measure_saturation(g, cg, base, {0.0, 0.3, 0.4}, 2);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].mean_delay.has_value());
  CHECK(rows[0].throughput == 0.0);
  CHECK(rows[0].stable);
  CHECK(rows[1].stable);
  CHECK(rows[1].throughput == doctest::Approx(0.3).epsilon(0.05));
  CHECK_FALSE(rows[2].stable);
  CHECK(rows[2].throughput < 0.4);
  CHECK_THROWS_AS(measure_saturation(g, cg, base, {}, 1), ConfigError);

  auto parallel = measure_saturation(g, cg, base, {0.0, 0.3, 0.4}, 2, kDefaultStabilityThreshold, 3);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(parallel[k].lambda == rows[k].lambda);
    CHECK(parallel[k].throughput == rows[k].throughput);
    CHECK(parallel[k].backlog_rate == rows[k].backlog_rate);
  }
}

}  // TEST_SUITE
