#pragma once

#include <string>
#include <utility>
#include <vector>

#include "umw/graph.hpp"

namespace umw {

/// Randomized stationary policy: each packet takes route D with probability rate(D)/lambda,
/// and schedule s is activated with probability prob(s) in every slot.
struct StationaryPolicy {
  std::vector<std::pair<NodeSet, double>> cds_rates;
  std::vector<std::pair<NodeSet, double>> schedule_probs;

  double total_rate() const;
  /// mu_i = c_i * sum of probabilities of schedules containing i.
  std::vector<double> service_rates(const NetworkGraph& g) const;
  /// Route load at each node: sum of rates of routes containing it.
  std::vector<double> loads(int node_count) const;
  /// service_rates - loads, per node.
  std::vector<double> slack(const NetworkGraph& g) const;
  /// Nonnegative rates/probabilities, probabilities summing to at most one, and every slack
  /// at least -tol.
  bool is_feasible(const NetworkGraph& g, const ConflictGraph& cg, double tol = 1e-9) const;
};

struct CapacityResult {
  double lambda_star = 0.0;
  StationaryPolicy witness;
};

/// Exact capacity as a reduced fraction.
struct ExactCapacity {
  std::string numerator;
  std::string denominator;
  double value = 0.0;

  std::string str() const { return denominator == "1" ? numerator : numerator + "/" + denominator; }
};

/// Broadcast capacity: max sum_D a_D s.t. for each node i the route load sum_{D contains i} a_D is
/// at most c_i * sum_{schedules s containing i} p_s, sum_s p_s <= 1, a, p >= 0, over all
/// minimal CDSs D and maximal independent sets s.
CapacityResult broadcast_capacity(const NetworkGraph& g, const ConflictGraph& cg, int limit = kDefaultExactLimit);

/// Same LP solved in exact rational arithmetic.
ExactCapacity broadcast_capacity_exact(const NetworkGraph& g, const ConflictGraph& cg,
                                       int limit = kDefaultExactLimit);

/// A stationary policy carrying total rate `lambda` whose smallest slack over nodes with
/// positive capacity is as large as possible (hence strictly positive). lambda == 0 yields the
/// empty policy. Throws RateInfeasible when lambda >= lambda*.
StationaryPolicy build_randomized_policy(const NetworkGraph& g, const ConflictGraph& cg, double lambda,
                                         int limit = kDefaultExactLimit);

/// Nodes that belong to every minimal CDS.
NodeSet mandatory_nodes(const NetworkGraph& g, int limit = kDefaultExactLimit);

/// Every packet is transmitted at least once by each mandatory node, and mutually conflicting
/// nodes share the slot budget, so lambda <= 1 / sum_{u in K} (1 / c_u) for each clique K of
/// mandatory nodes. Returns the minimum over such cliques (0 if a mandatory node has c = 0).
double clique_upper_bound(const NetworkGraph& g, const ConflictGraph& cg, int limit = kDefaultExactLimit);

}  // namespace umw
