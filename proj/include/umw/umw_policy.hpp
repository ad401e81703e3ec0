#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "umw/combin_opt.hpp"
#include "umw/graph.hpp"

namespace umw {

enum class Solver { Exact, Greedy };

/// Per-node virtual queue lengths Q~_i(t) and the slot index t.
struct VirtualQueueVector {
  std::vector<double> q;
  std::uint64_t slot = 0;

  static VirtualQueueVector zeros(int n) { return {std::vector<double>(n, 0.0), 0}; }
  int size() const { return static_cast<int>(q.size()); }
  double max() const;
  double norm() const;
  NodeWeights weights() const { return NodeWeights(q); }
};

/// q'_i = max(q_i + a_i - mu_i, 0); slot + 1. Throws DimensionMismatch on length mismatch.
VirtualQueueVector vq_step(const VirtualQueueVector& vq, std::span<const double> arrivals,
                           std::span<const double> service);

/// Minimum-weight CDS with node weights Q~_i(t).
NodeSet umw_route(const VirtualQueueVector& vq, const NetworkGraph& g, Solver solver);

/// Maximum-weight schedule with weights Q~_i(t) * c_i, restricted to `available`.
NodeSet umw_activate(const VirtualQueueVector& vq, const NetworkGraph& g, const ConflictGraph& cg, Solver solver,
                     NodeSet available);
NodeSet umw_activate(const VirtualQueueVector& vq, const NetworkGraph& g, const ConflictGraph& cg, Solver solver);

struct SlotDecision {
  NodeSet route;
  NodeSet schedule;
  std::vector<double> arrivals;  // A_i(t) = packets * 1(i in route)
  std::vector<double> service;   // mu_i(t) = c_i * 1(i in schedule)
};

/// Fills the per-node arrival and service vectors implied by a route and schedule.
SlotDecision make_decision(const NetworkGraph& g, NodeSet route, NodeSet schedule, int packets);

/// Realized drift bound (B + 2 sum q_i A_i - 2 sum q_i mu_i) / (2 ||q||) with
/// B = sum_i (A_i^2 + mu_i^2) taken from the decision itself. Throws ZeroNorm when ||q|| = 0.
double drift_report(const VirtualQueueVector& vq, const SlotDecision& d);

/// Same bound with a caller-supplied constant B (identical for every candidate decision).
double drift_report(const VirtualQueueVector& vq, const SlotDecision& d, double b_constant);

/// B <= n (A^2 + c_max^2) for `packets` arrivals in a slot.
double drift_constant(const NetworkGraph& g, int packets);

/// Per-slot UMW decisions for one network, with the minimal-CDS list cached when routing exactly.
class UmwController {
 public:
  UmwController(const NetworkGraph& g, const ConflictGraph& cg, Solver route_solver, Solver activation_solver,
                int limit = kDefaultExactLimit);

  NodeSet route(const VirtualQueueVector& vq) const;
  NodeSet activate(const VirtualQueueVector& vq, NodeSet available) const;
  /// Route and schedule both chosen from the slot-start state vq.
  SlotDecision decide(const VirtualQueueVector& vq, int packets, NodeSet available) const;

 private:
  const NetworkGraph& g_;
  const ConflictGraph& cg_;
  Solver route_solver_;
  Solver activation_solver_;
  int limit_;
  std::optional<CdsCatalog> catalog_;
};

}  // namespace umw
