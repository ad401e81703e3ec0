#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umw/node_set.hpp"

namespace umw {

/// Default size limit for the exact (subset-scanning) routines.
inline constexpr int kDefaultExactLimit = 16;

using Edge = std::pair<NodeId, NodeId>;

/// Directed wireless topology with per-node transmission capacities and a single source.
///
/// A transmission by node i is received by every out-neighbor of i (a hyperedge).
/// Construction validates: 1 <= n <= 64, source in range, no self-loops, endpoints in
/// range, nonnegative capacities, and every node reachable from the source.
class NetworkGraph {
 public:
  NetworkGraph(int node_count, NodeId source, std::vector<int> capacity, const std::vector<Edge>& edges);

  int node_count() const { return node_count_; }
  NodeId source() const { return source_; }
  int capacity(NodeId i) const { return capacity_[i]; }
  const std::vector<int>& capacities() const { return capacity_; }
  NodeSet out_neighbors(NodeId i) const { return out_[i]; }
  NodeSet in_neighbors(NodeId i) const { return in_[i]; }
  bool has_edge(NodeId u, NodeId v) const { return out_[u].contains(v); }
  NodeSet all_nodes() const { return NodeSet::all(node_count_); }
  /// Sorted, duplicate-free list of directed edges.
  std::vector<Edge> edges() const;

  /// Nodes reachable from the source using only nodes in `allowed` as relays.
  NodeSet reachable_within(NodeSet allowed) const;

 private:
  int node_count_;
  NodeId source_;
  std::vector<int> capacity_;
  std::vector<NodeSet> out_;
  std::vector<NodeSet> in_;
};

/// Which pairs of nodes may not transmit in the same slot.
struct InterferenceModel {
  enum class Kind { NoInterference, PrimaryInterference, ExplicitConflicts };
  Kind kind = Kind::NoInterference;
  std::vector<Edge> conflicts;  // ExplicitConflicts only; treated as unordered pairs

  static InterferenceModel none() { return {}; }
  static InterferenceModel primary() { return {Kind::PrimaryInterference, {}}; }
  static InterferenceModel explicit_pairs(std::vector<Edge> pairs) {
    return {Kind::ExplicitConflicts, std::move(pairs)};
  }
};

/// Symmetric, irreflexive node-conflict relation. Feasible schedules are its independent sets.
class ConflictGraph {
 public:
  explicit ConflictGraph(int node_count);
  /// Throws ValidationError on self-loops or out-of-range ids.
  ConflictGraph(int node_count, const std::vector<Edge>& pairs);

  static ConflictGraph complete(int node_count);

  int node_count() const { return node_count_; }
  NodeSet neighbors(NodeId i) const { return adj_[i]; }
  bool conflicts(NodeId i, NodeId j) const { return adj_[i].contains(j); }
  bool is_independent(NodeSet s) const;
  int edge_count() const;

 private:
  void add(NodeId i, NodeId j);

  int node_count_;
  std::vector<NodeSet> adj_;
};

/// Result of parsing a graph file: the topology and any `conflict` lines.
struct GraphFile {
  NetworkGraph graph;
  std::vector<Edge> conflicts;
};

/// Parses the line-oriented graph format:
///   n <int> / src <int> / cap <node>:<int> ... / edge <u> <v> / biedge <u> <v> / conflict <u> <v>
/// `#` starts a comment. Nodes without a `cap` entry get capacity 1.
GraphFile parse_graph_file(std::string_view text);
NetworkGraph load_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);
/// Inverse of parse_graph_file (directed `edge` lines only).
std::string format_graph_file(const NetworkGraph& g, const std::vector<Edge>& conflicts = {});

ConflictGraph build_conflict_graph(const NetworkGraph& g, const InterferenceModel& m);

/// Source membership, connectivity from the source inside `s`, and domination of every node.
bool is_cds(const NetworkGraph& g, NodeSet s);

/// All minimal connected dominating sets, in lexicographic order of their member lists.
/// Throws LimitExceeded when node_count > limit.
std::vector<NodeSet> enumerate_minimal_cds(const NetworkGraph& g, int limit = kDefaultExactLimit);

/// All independent sets of `cg` including the empty set, in increasing bitmask order.
std::vector<NodeSet> enumerate_schedules(const ConflictGraph& cg, int limit = kDefaultExactLimit);

/// Only the inclusion-maximal independent sets.
std::vector<NodeSet> enumerate_maximal_schedules(const ConflictGraph& cg, int limit = kDefaultExactLimit);

// Small topologies used by tests, examples and the CLI.
namespace topology {
/// Node 0 in the middle, bidirectional links to leaves 1..leaves.
NetworkGraph star(int leaves, int center_capacity = 1, int leaf_capacity = 1);
/// Bidirectional path 0-1-...-(n-1), source 0.
NetworkGraph path(int n);
/// rows x cols bidirectional grid, row-major ids, source at corner 0, unit capacities.
NetworkGraph grid(int rows, int cols);
/// Source 0 with a single out-edge to node 1.
NetworkGraph two_node(int source_capacity);
}  // namespace topology

}  // namespace umw
