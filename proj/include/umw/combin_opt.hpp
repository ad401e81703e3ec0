#pragma once

#include <optional>
#include <vector>

#include "umw/graph.hpp"

namespace umw {

/// Nonnegative, finite per-node weights (virtual-queue packets).
class NodeWeights {
 public:
  /// Throws ValidationError on negative or non-finite entries.
  explicit NodeWeights(std::vector<double> w);
  static NodeWeights zeros(int n) { return NodeWeights(std::vector<double>(n, 0.0)); }

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](NodeId i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }
  double sum(NodeSet s) const;

 private:
  std::vector<double> w_;
};

/// Minimum-weight minimal CDS; ties go to the lexicographically smallest member list.
NodeSet mcds_exact(const NetworkGraph& g, const NodeWeights& w, int limit = kDefaultExactLimit);

/// Polynomial-time heuristic: weighted greedy domination, cheapest-path connection, pruning of
/// removable members, then re-runs that forbid the heaviest members while that lowers the weight.
/// Always returns a CDS.
NodeSet mcds_greedy(const NetworkGraph& g, const NodeWeights& w);

/// Maximum-weight independent set; zero-weight nodes are never included; ties go to the
/// lexicographically smallest member list. Only nodes in `allowed` are considered.
NodeSet mwis_exact(const ConflictGraph& cg, const NodeWeights& w, int limit = kDefaultExactLimit);
NodeSet mwis_exact(const ConflictGraph& cg, const NodeWeights& w, NodeSet allowed, int limit = kDefaultExactLimit);

/// Greedy by descending weight (ascending id on ties), skipping conflicting nodes.
NodeSet mwis_greedy(const ConflictGraph& cg, const NodeWeights& w);
NodeSet mwis_greedy(const ConflictGraph& cg, const NodeWeights& w, NodeSet allowed);

/// Argmin over a precomputed list of candidate routes with the same tie-break as mcds_exact.
/// Used by the simulator so the minimal-CDS list is enumerated once per graph.
class CdsCatalog {
 public:
  explicit CdsCatalog(const NetworkGraph& g, int limit = kDefaultExactLimit);

  const std::vector<NodeSet>& sets() const { return sets_; }
  NodeSet argmin(const NodeWeights& w) const;

 private:
  std::vector<NodeSet> sets_;
};

}  // namespace umw
