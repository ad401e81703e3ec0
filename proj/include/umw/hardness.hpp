#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "umw/graph.hpp"

namespace umw {

/// Monotone Not-All-Equal 3-SAT: every clause lists three (possibly repeated) variables and is
/// satisfied when at least one is true and at least one is false.
struct Mnae3SatInstance {
  int var_count = 0;
  std::vector<std::array<int, 3>> clauses;

  /// Throws ValidationError on out-of-range variable indices.
  void validate() const;
};

/// Does some schedule deliver all `packets` packets to every node within `horizon` slots?
struct BroadcastInstance {
  NetworkGraph graph;
  ConflictGraph conflicts;
  int packets = 1;
  int horizon = 1;
};

/// Gadget: source 0 (capacity 2) -> variable nodes 1..n (capacity 1) -> clause nodes
/// n+1..n+m (capacity 1, in-edges from their variables). Two packets, two slots, no interference.
BroadcastInstance reduce(const Mnae3SatInstance& inst);

/// Exhaustive truth-assignment scan. Throws LimitExceeded above `max_vars` variables.
bool decide_mnae3sat(const Mnae3SatInstance& inst, int max_vars = 24);

/// Structure-free search over every per-slot, per-node choice of packets to transmit.
/// Throws LimitExceeded when node_count + packets is too large for the search.
bool decide_broadcast_exhaustive(const BroadcastInstance& bi, int max_nodes = 20);

/// Decider for instances shaped like reduce() output: slot 1 forces the source to hand both
/// packets to every variable node, so only the slot-2 packet choice per variable node is
/// searched. Other instances go to decide_broadcast_exhaustive.
bool decide_broadcast(const BroadcastInstance& bi, int max_vars = 24);

/// Header `p mnae3 <n> <m>` then one `v1 v2 v3` line per clause (0-based variable ids).
/// Lines starting with `c` or `#` are comments.
Mnae3SatInstance parse_mnae3(std::string_view text);
std::string format_mnae3(const Mnae3SatInstance& inst);

/// Clauses drawn uniformly (with replacement) from the variable indices.
std::vector<Mnae3SatInstance> random_mnae3_instances(int vars, int clauses, int count, std::uint64_t seed);

}  // namespace umw
