#include "umw/hardness.hpp"

#include <bit>
#include <charconv>
#include <optional>
#include <map>
#include <random>
#include <sstream>

#include "umw/errors.hpp"

namespace umw {

void Mnae3SatInstance::validate() const {
  if (var_count < 0) throw ValidationError("variable count must be nonnegative");
  for (const auto& c : clauses) {
    for (int v : c) {
      if (v < 0 || v >= var_count) throw ValidationError("clause variable " + std::to_string(v) + " out of range");
    }
  }
}

BroadcastInstance reduce(const Mnae3SatInstance& inst) {
  inst.validate();
  const int n = inst.var_count;
  const int m = static_cast<int>(inst.clauses.size());
  std::vector<int> capacity(1 + n + m, 1);
  capacity[0] = 2;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(0, 1 + v);
  for (int j = 0; j < m; ++j) {
    for (int v : inst.clauses[j]) edges.emplace_back(1 + v, 1 + n + j);
  }
  NetworkGraph g(1 + n + m, 0, std::move(capacity), edges);
  return BroadcastInstance{std::move(g), ConflictGraph(1 + n + m), 2, 2};
}

bool decide_mnae3sat(const Mnae3SatInstance& inst, int max_vars) {
  inst.validate();
  if (inst.var_count > max_vars) {
    throw LimitExceeded("MNAE-3SAT brute force limited to " + std::to_string(max_vars) + " variables");
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(inst.clauses.size());
  for (const auto& c : inst.clauses) masks.push_back((1U << c[0]) | (1U << c[1]) | (1U << c[2]));
  const std::uint64_t total = std::uint64_t{1} << inst.var_count;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool ok = true;
    for (std::uint32_t mask : masks) {
      const std::uint64_t hit = a & mask;
      if (hit == 0 || hit == mask) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

/// Search state: for each node, the bitmask of packets it holds.
using Holdings = std::vector<std::uint32_t>;

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const BroadcastInstance& bi)
      : bi_(bi), n_(bi.graph.node_count()), full_((1U << bi.packets) - 1) {}

  bool run() {
    Holdings h(n_, 0);
    h[bi_.graph.source()] = full_;
    return search(h, bi_.horizon);
  }

 private:
  bool done(const Holdings& h) const {
    for (auto x : h)
      if (x != full_) return false;
    return true;
  }

  bool search(const Holdings& h, int slots_left) {
    if (done(h)) return true;
    if (slots_left == 0) return false;
    auto key = std::make_pair(h, slots_left);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Per node: candidate packet subsets (nonempty, within capacity). Without conflicts a
    // transmission never hurts, so only maximal subsets are tried.
    const bool free = bi_.conflicts.edge_count() == 0;
    std::vector<std::vector<std::uint32_t>> options(n_);
    for (NodeId i = 0; i < n_; ++i) {
      const int cap = bi_.graph.capacity(i);
      const int held = std::popcount(h[i]);
      if (!free) options[i].push_back(0);
      if (held == 0 || cap == 0 || bi_.graph.out_neighbors(i).empty()) {
        if (free) options[i].push_back(0);
        continue;
      }
      for (std::uint32_t s = h[i];; s = (s - 1) & h[i]) {
        const int size = std::popcount(s);
        if (s != 0 && size <= cap && (!free || size == std::min(cap, held))) options[i].push_back(s);
        if (s == 0) break;
      }
    }

    bool found = false;
    std::vector<std::uint32_t> choice(n_, 0);
    auto assign = [&](auto&& self, NodeId i, NodeSet active) -> void {
      if (found) return;
      if (i == n_) {
        Holdings next = h;
        for (NodeId u = 0; u < n_; ++u) {
          if (choice[u] == 0) continue;
          bi_.graph.out_neighbors(u).for_each([&](NodeId v) { next[v] |= choice[u]; });
        }
        if (next != h || done(next)) found = search(next, slots_left - 1);
        return;
      }
      for (std::uint32_t s : options[i]) {
        if (s != 0 && bi_.conflicts.neighbors(i).intersects(active)) continue;
        choice[i] = s;
        self(self, i + 1, s != 0 ? active | NodeSet{i} : active);
        if (found) return;
      }
      choice[i] = 0;
    };
    assign(assign, 0, NodeSet{});
    memo_[key] = found;
    return found;
  }

  const BroadcastInstance& bi_;
  int n_;
  std::uint32_t full_;
  std::map<std::pair<Holdings, int>, bool> memo_;
};

/// Recovers (n, clause variable sets) when `bi` has the reduce() layout; empty on mismatch.
std::optional<std::pair<int, std::vector<NodeSet>>> gadget_shape(const BroadcastInstance& bi) {
  const NetworkGraph& g = bi.graph;
  if (bi.packets != 2 || bi.horizon != 2 || g.source() != 0 || g.capacity(0) != 2) return std::nullopt;
  if (bi.conflicts.edge_count() != 0) return std::nullopt;
  const NodeSet vars = g.out_neighbors(0);
  const int n = vars.size();
  if (vars != NodeSet::all(n + 1) - NodeSet{0}) return std::nullopt;
  std::vector<NodeSet> clauses;
  for (NodeId v = 1; v <= n; ++v) {
    if (g.capacity(v) != 1 || g.in_neighbors(v) != NodeSet{0}) return std::nullopt;
    if (!(g.out_neighbors(v) - (g.all_nodes() - NodeSet::all(n + 1))).empty()) return std::nullopt;
  }
  for (NodeId c = n + 1; c < g.node_count(); ++c) {
    if (!g.out_neighbors(c).empty()) return std::nullopt;
    // variable node v+1 -> variable index v
    clauses.push_back(NodeSet(g.in_neighbors(c).bits() >> 1));
  }
  return std::make_pair(n, std::move(clauses));
}

}  // namespace

bool decide_broadcast_exhaustive(const BroadcastInstance& bi, int max_nodes) {
  if (bi.packets < 1 || bi.horizon < 1) throw ValidationError("packet count and horizon must be positive");
  if (bi.packets > 8) throw LimitExceeded("exhaustive broadcast search limited to 8 packets");
  if (bi.graph.node_count() > max_nodes) {
    throw LimitExceeded("exhaustive broadcast search limited to " + std::to_string(max_nodes) + " nodes");
  }
  return ExhaustiveSearch(bi).run();
}

bool decide_broadcast(const BroadcastInstance& bi, int max_vars) {
  auto shape = gadget_shape(bi);
  if (!shape) return decide_broadcast_exhaustive(bi);
  const auto& [n, clauses] = *shape;
  if (n > max_vars) throw LimitExceeded("gadget decider limited to " + std::to_string(max_vars) + " variable nodes");
  // After slot 1 every variable node holds both packets; in slot 2 it relays one of them
  // (choice bit 1 = packet B). A clause node needs both packets.
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t choice = 0; choice < total; ++choice) {
    bool ok = true;
    for (NodeSet c : clauses) {
      const std::uint64_t picks = choice & c.bits();
      if (picks == 0 || picks == c.bits()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Mnae3SatInstance parse_mnae3(std::string_view text) {
  Mnae3SatInstance inst;
  bool header = false;
  int expected = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto to_int = [&](const std::string& tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError(line_no, "expected integer, got '" + tok + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
    if (toks[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "mnae3") throw ParseError(line_no, "header must be 'p mnae3 <n> <m>'");
      inst.var_count = to_int(toks[2]);
      expected = to_int(toks[3]);
      if (inst.var_count < 0 || expected < 0) throw ParseError(line_no, "negative size in header");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p mnae3' header");
    if (toks.size() != 3) throw ParseError(line_no, "clause must list exactly three variables");
    std::array<int, 3> c{to_int(toks[0]), to_int(toks[1]), to_int(toks[2])};
    for (int v : c) {
      if (v < 0 || v >= inst.var_count) throw ParseError(line_no, "variable " + std::to_string(v) + " out of range");
    }
    inst.clauses.push_back(c);
  }
  if (!header) throw ParseError("missing 'p mnae3 <n> <m>' header");
  if (static_cast<int>(inst.clauses.size()) != expected) {
    throw ParseError("header declares " + std::to_string(expected) + " clauses, found " +
                     std::to_string(inst.clauses.size()));
  }
  return inst;
}

std::string format_mnae3(const Mnae3SatInstance& inst) {
  std::ostringstream os;
  os << "p mnae3 " << inst.var_count << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) os << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return os.str();
}

std::vector<Mnae3SatInstance> random_mnae3_instances(int vars, int clauses, int count, std::uint64_t seed) {
  if (vars < 1 || clauses < 0 || count < 0) throw ValidationError("invalid random instance parameters");
  std::mt19937_64 rng(seed);
  std::vector<Mnae3SatInstance> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Mnae3SatInstance inst{vars, {}};
    for (int j = 0; j < clauses; ++j) {
      std::array<int, 3> c{};
      for (int& v : c) v = static_cast<int>(rng() % static_cast<std::uint64_t>(vars));
      inst.clauses.push_back(c);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace umw
