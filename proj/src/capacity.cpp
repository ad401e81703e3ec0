#include "umw/capacity.hpp"

#include <algorithm>
#include <limits>

#include "umw/errors.hpp"
#include "umw/simplex.hpp"
#include "umw/simplex_rational.hpp"

namespace umw {

double StationaryPolicy::total_rate() const {
  double s = 0.0;
  for (const auto& [d, a] : cds_rates) s += a;
  return s;
}

std::vector<double> StationaryPolicy::service_rates(const NetworkGraph& g) const {
  std::vector<double> mu(g.node_count(), 0.0);
  for (const auto& [s, p] : schedule_probs) s.for_each([&](NodeId i) { mu[i] += p * g.capacity(i); });
  return mu;
}

std::vector<double> StationaryPolicy::loads(int node_count) const {
  std::vector<double> load(node_count, 0.0);
  for (const auto& [d, a] : cds_rates) d.for_each([&](NodeId i) { load[i] += a; });
  return load;
}

std::vector<double> StationaryPolicy::slack(const NetworkGraph& g) const {
  std::vector<double> s = service_rates(g);
  std::vector<double> load = loads(g.node_count());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= load[i];
  return s;
}

bool StationaryPolicy::is_feasible(const NetworkGraph& g, const ConflictGraph& cg, double tol) const {
  double total_p = 0.0;
  for (const auto& [s, p] : schedule_probs) {
    if (p < -tol || !cg.is_independent(s)) return false;
    total_p += p;
  }
  if (total_p > 1.0 + tol) return false;
  for (const auto& [d, a] : cds_rates) {
    if (a < -tol || !is_cds(g, d)) return false;
  }
  for (double s : slack(g)) {
    if (s < -tol) return false;
  }
  return true;
}

namespace {

struct Columns {
  std::vector<NodeSet> routes;
  std::vector<NodeSet> schedules;
};

Columns enumerate_columns(const NetworkGraph& g, const ConflictGraph& cg, int limit) {
  if (cg.node_count() != g.node_count()) throw DimensionMismatch("conflict graph size differs from network");
  return {enumerate_minimal_cds(g, limit), enumerate_maximal_schedules(cg, limit)};
}

/// Variables: [a_D for each route | p_s for each schedule]. One row per node, plus sum p <= 1.
template <class Scalar>
lp::LinearProgram<Scalar> capacity_lp(const NetworkGraph& g, const Columns& cols) {
  const std::size_t nr = cols.routes.size(), ns = cols.schedules.size();
  lp::LinearProgram<Scalar> prog;
  prog.objective.assign(nr + ns, Scalar(0));
  for (std::size_t k = 0; k < nr; ++k) prog.objective[k] = Scalar(1);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    std::vector<Scalar> row(nr + ns, Scalar(0));
    for (std::size_t k = 0; k < nr; ++k)
      if (cols.routes[k].contains(i)) row[k] = Scalar(1);
    for (std::size_t k = 0; k < ns; ++k)
      if (cols.schedules[k].contains(i)) row[nr + k] = Scalar(-g.capacity(i));
    prog.add(std::move(row), lp::Relation::LessEq, Scalar(0));
  }
  std::vector<Scalar> total(nr + ns, Scalar(0));
  for (std::size_t k = 0; k < ns; ++k) total[nr + k] = Scalar(1);
  prog.add(std::move(total), lp::Relation::LessEq, Scalar(1));
  return prog;
}

StationaryPolicy policy_from(const Columns& cols, const std::vector<double>& x) {
  StationaryPolicy pol;
  for (std::size_t k = 0; k < cols.routes.size(); ++k)
    if (x[k] > 0.0) pol.cds_rates.emplace_back(cols.routes[k], x[k]);
  for (std::size_t k = 0; k < cols.schedules.size(); ++k) {
    double p = x[cols.routes.size() + k];
    if (p > 0.0) pol.schedule_probs.emplace_back(cols.schedules[k], p);
  }
  return pol;
}

}  // namespace

CapacityResult broadcast_capacity(const NetworkGraph& g, const ConflictGraph& cg, int limit) {
  const Columns cols = enumerate_columns(g, cg, limit);
  auto sol = lp::solve(capacity_lp<double>(g, cols));
  if (sol.status != lp::Status::Optimal) throw Error("capacity LP did not reach an optimum");
  for (double& v : sol.x) v = std::max(v, 0.0);
  CapacityResult res{sol.value, policy_from(cols, sol.x)};
  if (!res.witness.is_feasible(g, cg)) throw Error("capacity witness failed the substitution check");
  return res;
}

ExactCapacity broadcast_capacity_exact(const NetworkGraph& g, const ConflictGraph& cg, int limit) {
  const Columns cols = enumerate_columns(g, cg, limit);
  auto sol = lp::solve(capacity_lp<mpq_class>(g, cols));
  if (sol.status != lp::Status::Optimal) throw Error("exact capacity LP did not reach an optimum");
  mpq_class v = sol.value;
  v.canonicalize();
  return {v.get_num().get_str(), v.get_den().get_str(), v.get_d()};
}

StationaryPolicy build_randomized_policy(const NetworkGraph& g, const ConflictGraph& cg, double lambda, int limit) {
  if (!(lambda >= 0.0)) throw RateInfeasible("arrival rate must be nonnegative");
  const double lambda_star = broadcast_capacity(g, cg, limit).lambda_star;
  if (lambda >= lambda_star - 1e-9) {
    throw RateInfeasible("rate " + std::to_string(lambda) + " is not below capacity " + std::to_string(lambda_star));
  }
  if (lambda == 0.0) return {};

  // maximize eps  s.t.  sum a = lambda,  load_i - mu_i + eps <= 0 (c_i > 0),  load_i <= 0 (c_i = 0),
  //                     sum p <= 1.
  const Columns cols = enumerate_columns(g, cg, limit);
  const std::size_t nr = cols.routes.size(), ns = cols.schedules.size(), eps = nr + ns;
  auto base = capacity_lp<double>(g, cols);
  lp::LinearProgram<double> prog;
  prog.objective.assign(eps + 1, 0.0);
  prog.objective[eps] = 1.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    auto row = base.constraints[i].coeffs;
    row.push_back(g.capacity(i) > 0 ? 1.0 : 0.0);
    prog.add(std::move(row), lp::Relation::LessEq, 0.0);
  }
  auto total_p = base.constraints.back().coeffs;
  total_p.push_back(0.0);
  prog.add(std::move(total_p), lp::Relation::LessEq, 1.0);
  std::vector<double> total_a(eps + 1, 0.0);
  for (std::size_t k = 0; k < nr; ++k) total_a[k] = 1.0;
  prog.add(std::move(total_a), lp::Relation::Equal, lambda);

  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) throw Error("slack-maximizing LP did not reach an optimum");
  for (double& v : sol.x) v = std::max(v, 0.0);
  return policy_from(cols, sol.x);
}

NodeSet mandatory_nodes(const NetworkGraph& g, int limit) {
  NodeSet common = g.all_nodes();
  for (NodeSet d : enumerate_minimal_cds(g, limit)) common &= d;
  return common;
}

double clique_upper_bound(const NetworkGraph& g, const ConflictGraph& cg, int limit) {
  const NodeSet mandatory = mandatory_nodes(g, limit);
  double bound = std::numeric_limits<double>::infinity();
  bool zero_cap = false;
  mandatory.for_each([&](NodeId u) { zero_cap = zero_cap || g.capacity(u) == 0; });
  if (zero_cap) return 0.0;

  const std::vector<NodeId> m = mandatory.members();
  const std::uint64_t subsets = std::uint64_t{1} << m.size();
  for (std::uint64_t b = 1; b < subsets; ++b) {
    NodeSet k;
    for (std::size_t t = 0; t < m.size(); ++t)
      if ((b >> t) & 1U) k.insert(m[t]);
    bool clique = true;
    k.for_each([&](NodeId u) { clique = clique && (k - NodeSet{u}).is_subset_of(cg.neighbors(u)); });
    if (!clique) continue;
    double inv = 0.0;
    k.for_each([&](NodeId u) { inv += 1.0 / g.capacity(u); });
    bound = std::min(bound, 1.0 / inv);
  }
  return bound;
}

}  // namespace umw
