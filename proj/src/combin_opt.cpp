#include "umw/combin_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "umw/errors.hpp"

namespace umw {

NodeWeights::NodeWeights(std::vector<double> w) : w_(std::move(w)) {
  for (double x : w_) {
    if (!std::isfinite(x) || x < 0.0) throw ValidationError("node weights must be finite and nonnegative");
  }
}

double NodeWeights::sum(NodeSet s) const {
  double total = 0.0;
  s.for_each([&](NodeId i) { total += w_[i]; });
  return total;
}

namespace {

void check_size(int n, const NodeWeights& w) {
  if (w.size() != n) {
    throw DimensionMismatch("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                            std::to_string(n));
  }
}

NodeSet argmin_over(const std::vector<NodeSet>& sets, const NodeWeights& w) {
  NodeSet best = sets.front();
  double best_w = w.sum(best);
  for (std::size_t k = 1; k < sets.size(); ++k) {
    double x = w.sum(sets[k]);
    if (x < best_w || (x == best_w && lex_less(sets[k], best))) {
      best = sets[k];
      best_w = x;
    }
  }
  return best;
}

/// Cheapest node-weighted path from `from` (already connected) to `target`, relaying only
/// through `allowed`. Returns the intermediate nodes, or nullopt if unreachable.
std::optional<NodeSet> cheapest_connection(const NetworkGraph& g, const NodeWeights& w, NodeSet from,
                                           NodeId target, NodeSet allowed) {
  const int n = g.node_count();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<NodeId> prev(n, -1);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  from.for_each([&](NodeId u) {
    dist[u] = 0.0;
    pq.emplace(0.0, u);
  });
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == target) break;
    (g.out_neighbors(u) & allowed).for_each([&](NodeId v) {
      double nd = d + (v == target ? 0.0 : w[v]);
      if (nd < dist[v]) {
        dist[v] = nd;
        prev[v] = u;
        pq.emplace(nd, v);
      }
    });
  }
  if (dist[target] == kInf) return std::nullopt;
  NodeSet relays;
  for (NodeId v = prev[target]; v != -1 && !from.contains(v); v = prev[v]) relays.insert(v);
  return relays;
}

/// One grow/connect/prune pass avoiding `forbidden`. nullopt when no CDS avoids it.
std::optional<NodeSet> greedy_pass(const NetworkGraph& g, const NodeWeights& w, NodeSet forbidden) {
  const NodeId r = g.source();
  const NodeSet all = g.all_nodes();
  const NodeSet usable = g.reachable_within(all - forbidden);

  NodeSet members{r};
  NodeSet dominated = members | g.out_neighbors(r);
  while (dominated != all) {
    NodeId pick = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    (usable - members).for_each([&](NodeId v) {
      int gain = ((g.out_neighbors(v) | NodeSet{v}) - dominated).size();
      if (gain == 0) return;
      double ratio = w[v] / gain;
      if (ratio < best_ratio) {
        best_ratio = ratio;
        pick = v;
      }
    });
    if (pick < 0) return std::nullopt;
    members.insert(pick);
    dominated |= g.out_neighbors(pick) | NodeSet{pick};
  }

  for (;;) {
    NodeSet connected = g.reachable_within(members);
    NodeSet stranded = members - connected;
    if (stranded.empty()) break;
    std::optional<NodeSet> best;
    double best_cost = std::numeric_limits<double>::infinity();
    stranded.for_each([&](NodeId t) {
      auto relays = cheapest_connection(g, w, connected, t, usable);
      if (relays && w.sum(*relays) < best_cost) {
        best_cost = w.sum(*relays);
        best = *relays | NodeSet{t};
      }
    });
    if (!best) return std::nullopt;
    members |= *best;
  }

  std::vector<NodeId> order = (members - NodeSet{r}).members();
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return w[a] != w[b] ? w[a] > w[b] : a > b;
  });
  for (NodeId v : order) {
    NodeSet trial = members;
    trial.erase(v);
    if (is_cds(g, trial)) members = trial;
  }
  return members;
}

}  // namespace

NodeSet mcds_exact(const NetworkGraph& g, const NodeWeights& w, int limit) {
  check_size(g.node_count(), w);
  return argmin_over(enumerate_minimal_cds(g, limit), w);
}

NodeSet mcds_greedy(const NetworkGraph& g, const NodeWeights& w) {
  check_size(g.node_count(), w);
  NodeSet best = *greedy_pass(g, w, {});
  double best_w = w.sum(best);
  NodeSet forbidden;
  // Try to route around the heaviest members one at a time; keep exclusions that pay off.
  for (bool improved = true; improved;) {
    improved = false;
    std::vector<NodeId> heavy = (best - NodeSet{g.source()} - forbidden).members();
    std::stable_sort(heavy.begin(), heavy.end(), [&](NodeId a, NodeId b) { return w[a] > w[b]; });
    for (NodeId v : heavy) {
      NodeSet f = forbidden | NodeSet{v};
      auto alt = greedy_pass(g, w, f);
      if (alt && w.sum(*alt) < best_w) {
        best = *alt;
        best_w = w.sum(best);
        forbidden = f;
        improved = true;
        break;
      }
    }
  }
  return best;
}

NodeSet mwis_exact(const ConflictGraph& cg, const NodeWeights& w, int limit) {
  return mwis_exact(cg, w, NodeSet::all(cg.node_count()), limit);
}

NodeSet mwis_exact(const ConflictGraph& cg, const NodeWeights& w, NodeSet allowed, int limit) {
  const int n = cg.node_count();
  check_size(n, w);
  if (n > limit) {
    throw LimitExceeded("exact MWIS limited to " + std::to_string(limit) + " nodes, graph has " + std::to_string(n));
  }
  NodeSet candidates;
  (allowed & NodeSet::all(n)).for_each([&](NodeId i) {
    if (w[i] > 0.0) candidates.insert(i);
  });
  const std::vector<NodeId> order = candidates.members();
  std::vector<double> suffix(order.size() + 1, 0.0);
  for (std::size_t k = order.size(); k-- > 0;) suffix[k] = suffix[k + 1] + w[order[k]];

  NodeSet best;
  double best_w = 0.0;
  // Include-first depth-first search in ascending id order with a remaining-weight bound.
  auto dfs = [&](auto&& self, std::size_t k, NodeSet chosen, NodeSet blocked, double weight) -> void {
    if (weight + suffix[k] < best_w) return;
    if (k == order.size()) {
      if (weight > best_w || (weight == best_w && lex_less(chosen, best))) {
        best = chosen;
        best_w = weight;
      }
      return;
    }
    NodeId v = order[k];
    if (!blocked.contains(v)) {
      NodeSet c = chosen;
      c.insert(v);
      self(self, k + 1, c, blocked | cg.neighbors(v), weight + w[v]);
    }
    self(self, k + 1, chosen, blocked, weight);
  };
  dfs(dfs, 0, NodeSet{}, NodeSet{}, 0.0);
  return best;
}

NodeSet mwis_greedy(const ConflictGraph& cg, const NodeWeights& w) {
  return mwis_greedy(cg, w, NodeSet::all(cg.node_count()));
}

NodeSet mwis_greedy(const ConflictGraph& cg, const NodeWeights& w, NodeSet allowed) {
  check_size(cg.node_count(), w);
  std::vector<NodeId> order;
  (allowed & NodeSet::all(cg.node_count())).for_each([&](NodeId i) {
    if (w[i] > 0.0) order.push_back(i);
  });
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return w[a] > w[b]; });
  NodeSet chosen, blocked;
  for (NodeId v : order) {
    if (blocked.contains(v)) continue;
    chosen.insert(v);
    blocked |= cg.neighbors(v) | NodeSet{v};
  }
  return chosen;
}

CdsCatalog::CdsCatalog(const NetworkGraph& g, int limit) : sets_(enumerate_minimal_cds(g, limit)) {}

NodeSet CdsCatalog::argmin(const NodeWeights& w) const { return argmin_over(sets_, w); }

}  // namespace umw
