#pragma once

// Independent brute-force references used only by tests. They work on plain adjacency lists
// and std::set so they share no code path with the bitmask implementations under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "umw/graph.hpp"

namespace oracle {

using Set = std::set<int>;

struct Adjacency {
  int n = 0;
  int source = 0;
  std::vector<std::vector<int>> out;
};

inline Adjacency adjacency(const umw::NetworkGraph& g) {
  Adjacency a{g.node_count(), g.source(), std::vector<std::vector<int>>(g.node_count())};
  for (auto [u, v] : g.edges()) a.out[u].push_back(v);
  return a;
}

inline Set to_set(umw::NodeSet s) {
  auto m = s.members();
  return Set(m.begin(), m.end());
}

inline umw::NodeSet from_set(const Set& s) {
  return umw::NodeSet::from_ids(std::vector<int>(s.begin(), s.end()));
}

inline bool is_cds(const Adjacency& a, const Set& s) {
  if (!s.count(a.source)) return false;
  Set seen{a.source};
  std::vector<int> stack{a.source};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : a.out[u]) {
      if (s.count(v) && !seen.count(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
    }
  }
  if (seen != s) return false;
  std::vector<bool> dom(a.n, false);
  for (int u : s) {
    dom[u] = true;
    for (int v : a.out[u]) dom[v] = true;
  }
  return std::all_of(dom.begin(), dom.end(), [](bool b) { return b; });
}

inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (m & (1U << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

/// Minimal CDSs sorted lexicographically (std::set<int> compares lexicographically).
inline std::vector<Set> minimal_cds(const Adjacency& a) {
  std::vector<Set> out;
  for (const Set& s : all_subsets(a.n)) {
    if (!is_cds(a, s)) continue;
    bool minimal = true;
    for (int v : s) {
      if (v == a.source) continue;
      Set t = s;
      t.erase(v);
      if (is_cds(a, t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double weight(const std::vector<double>& w, const Set& s) {
  double t = 0;
  for (int i : s) t += w[i];
  return t;
}

inline Set min_weight_cds(const Adjacency& a, const std::vector<double>& w) {
  auto all = minimal_cds(a);
  Set best = all.front();
  for (const Set& s : all) {
    if (weight(w, s) < weight(w, best) || (weight(w, s) == weight(w, best) && s < best)) best = s;
  }
  return best;
}

/// Symmetric boolean matrix.
using Matrix = std::vector<std::vector<bool>>;

inline Matrix primary_conflicts(const Adjacency& a) {
  Matrix m(a.n, std::vector<bool>(a.n, false));
  auto has = [&](int u, int v) { return std::find(a.out[u].begin(), a.out[u].end(), v) != a.out[u].end(); };
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      if (i == j) continue;
      bool shared = false;
      for (int x : a.out[i])
        if (has(j, x)) shared = true;
      m[i][j] = has(i, j) || has(j, i) || shared;
    }
  }
  return m;
}

inline Matrix matrix(const umw::ConflictGraph& cg) {
  Matrix m(cg.node_count(), std::vector<bool>(cg.node_count(), false));
  for (int i = 0; i < cg.node_count(); ++i)
    for (int j = 0; j < cg.node_count(); ++j) m[i][j] = cg.conflicts(i, j);
  return m;
}

inline bool independent(const Matrix& m, const Set& s) {
  for (int i : s)
    for (int j : s)
      if (m[i][j]) return false;
  return true;
}

inline std::vector<Set> independent_sets(const Matrix& m) {
  std::vector<Set> out;
  for (const Set& s : all_subsets(static_cast<int>(m.size())))
    if (independent(m, s)) out.push_back(s);
  return out;
}

/// Max weight, zero-weight nodes stripped, lexicographically smallest on ties.
inline Set max_weight_is(const Matrix& m, const std::vector<double>& w) {
  Set best;
  double best_w = 0;
  for (const Set& s : all_subsets(static_cast<int>(m.size()))) {
    bool positive = std::all_of(s.begin(), s.end(), [&](int i) { return w[i] > 0; });
    if (!positive || !independent(m, s)) continue;
    double x = weight(w, s);
    if (x > best_w || (x == best_w && s < best)) {
      best = s;
      best_w = x;
    }
  }
  return best;
}

/// Random directed graph: a random spanning arborescence from node 0 (so everything is
/// reachable) plus extra random arcs; each arborescence arc is made bidirectional with
/// probability `bidir`.
inline umw::NetworkGraph random_graph(std::mt19937_64& rng, int n, double extra_p = 0.25, double bidir = 0.7) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<umw::Edge> e;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    e.emplace_back(parent, v);
    if (u(rng) < bidir) e.emplace_back(v, parent);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && u(rng) < extra_p) e.emplace_back(i, j);
  std::vector<int> cap(n);
  for (int& c : cap) c = 1 + static_cast<int>(rng() % 2);
  return umw::NetworkGraph(n, 0, cap, e);
}

inline umw::ConflictGraph random_conflicts(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<umw::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p) e.emplace_back(i, j);
  return umw::ConflictGraph(n, e);
}

/// q(t) = max over 1 <= tau <= t of (A(tau,t) - S(tau,t))^+ where A(tau,t) sums slots
/// tau-1 .. t-1 (one-based tau over zero-based slot arrays); q(0) = 0.
inline std::vector<double> skorokhod(const std::vector<double>& a, const std::vector<double>& s) {
  const std::size_t t_max = a.size();
  std::vector<double> q(t_max + 1, 0.0);
  for (std::size_t t = 1; t <= t_max; ++t) {
    double best = 0.0;
    for (std::size_t tau = 0; tau < t; ++tau) {
      double net = 0.0;
      for (std::size_t k = tau; k < t; ++k) net += a[k] - s[k];
      best = std::max(best, net);
    }
    q[t] = best;
  }
  return q;
}

}  // namespace oracle
