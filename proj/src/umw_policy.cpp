#include "umw/umw_policy.hpp"

#include <algorithm>
#include <cmath>

#include "umw/errors.hpp"

namespace umw {

double VirtualQueueVector::max() const { return q.empty() ? 0.0 : *std::max_element(q.begin(), q.end()); }

double VirtualQueueVector::norm() const {
  double s = 0.0;
  for (double x : q) s += x * x;
  return std::sqrt(s);
}

VirtualQueueVector vq_step(const VirtualQueueVector& vq, std::span<const double> arrivals,
                           std::span<const double> service) {
  const std::size_t n = vq.q.size();
  if (arrivals.size() != n || service.size() != n) {
    throw DimensionMismatch("vq_step: queue has " + std::to_string(n) + " entries, arrivals " +
                            std::to_string(arrivals.size()) + ", service " + std::to_string(service.size()));
  }
  VirtualQueueVector next{std::vector<double>(n), vq.slot + 1};
  for (std::size_t i = 0; i < n; ++i) next.q[i] = std::max(vq.q[i] + arrivals[i] - service[i], 0.0);
  return next;
}

namespace {

NodeWeights activation_weights(const VirtualQueueVector& vq, const NetworkGraph& g) {
  if (vq.size() != g.node_count()) throw DimensionMismatch("virtual queue length differs from node count");
  std::vector<double> w(vq.q.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = vq.q[i] * g.capacity(static_cast<NodeId>(i));
  return NodeWeights(std::move(w));
}

NodeSet solve_mwis(const ConflictGraph& cg, const NodeWeights& w, Solver solver, NodeSet available, int limit) {
  return solver == Solver::Exact ? mwis_exact(cg, w, available, limit) : mwis_greedy(cg, w, available);
}

}  // namespace

NodeSet umw_route(const VirtualQueueVector& vq, const NetworkGraph& g, Solver solver) {
  NodeWeights w = vq.weights();
  return solver == Solver::Exact ? mcds_exact(g, w) : mcds_greedy(g, w);
}

NodeSet umw_activate(const VirtualQueueVector& vq, const NetworkGraph& g, const ConflictGraph& cg, Solver solver,
                     NodeSet available) {
  return solve_mwis(cg, activation_weights(vq, g), solver, available, kDefaultExactLimit);
}

NodeSet umw_activate(const VirtualQueueVector& vq, const NetworkGraph& g, const ConflictGraph& cg, Solver solver) {
  return umw_activate(vq, g, cg, solver, g.all_nodes());
}

SlotDecision make_decision(const NetworkGraph& g, NodeSet route, NodeSet schedule, int packets) {
  const int n = g.node_count();
  SlotDecision d{route, schedule, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  route.for_each([&](NodeId i) { d.arrivals[i] = packets; });
  schedule.for_each([&](NodeId i) { d.service[i] = g.capacity(i); });
  return d;
}

namespace {

double drift_terms(const VirtualQueueVector& vq, const SlotDecision& d, double b, bool realized) {
  const std::size_t n = vq.q.size();
  if (d.arrivals.size() != n || d.service.size() != n) throw DimensionMismatch("decision length differs from queue");
  const double norm = vq.norm();
  if (norm == 0.0) throw ZeroNorm("drift bound undefined at the zero queue state");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (realized) b += d.arrivals[i] * d.arrivals[i] + d.service[i] * d.service[i];
    total += 2.0 * vq.q[i] * d.arrivals[i] - 2.0 * vq.q[i] * d.service[i];
  }
  return (b + total) / (2.0 * norm);
}

}  // namespace

double drift_report(const VirtualQueueVector& vq, const SlotDecision& d) { return drift_terms(vq, d, 0.0, true); }

double drift_report(const VirtualQueueVector& vq, const SlotDecision& d, double b_constant) {
  return drift_terms(vq, d, b_constant, false);
}

double drift_constant(const NetworkGraph& g, int packets) {
  const int cmax = *std::max_element(g.capacities().begin(), g.capacities().end());
  return g.node_count() * (static_cast<double>(packets) * packets + static_cast<double>(cmax) * cmax);
}

UmwController::UmwController(const NetworkGraph& g, const ConflictGraph& cg, Solver route_solver,
                             Solver activation_solver, int limit)
    : g_(g), cg_(cg), route_solver_(route_solver), activation_solver_(activation_solver), limit_(limit) {
  if (cg.node_count() != g.node_count()) throw DimensionMismatch("conflict graph size differs from network");
  if (route_solver_ == Solver::Exact) catalog_.emplace(g, limit);
  if (activation_solver_ == Solver::Exact && g.node_count() > limit) {
    throw LimitExceeded("exact activation limited to " + std::to_string(limit) + " nodes");
  }
}

NodeSet UmwController::route(const VirtualQueueVector& vq) const {
  NodeWeights w = vq.weights();
  return catalog_ ? catalog_->argmin(w) : mcds_greedy(g_, w);
}

NodeSet UmwController::activate(const VirtualQueueVector& vq, NodeSet available) const {
  return solve_mwis(cg_, activation_weights(vq, g_), activation_solver_, available, limit_);
}

SlotDecision UmwController::decide(const VirtualQueueVector& vq, int packets, NodeSet available) const {
  return make_decision(g_, route(vq), activate(vq, available), packets);
}

}  // namespace umw
