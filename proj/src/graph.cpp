#include "umw/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "umw/errors.hpp"

namespace umw {

namespace {

void check_node(int n, NodeId v, const char* what) {
  if (v < 0 || v >= n) {
    throw ValidationError(std::string(what) + " node id " + std::to_string(v) + " out of range [0," +
                          std::to_string(n) + ")");
  }
}

}  // namespace

NetworkGraph::NetworkGraph(int node_count, NodeId source, std::vector<int> capacity,
                           const std::vector<Edge>& edges)
    : node_count_(node_count), source_(source), capacity_(std::move(capacity)) {
  if (node_count_ < 1 || node_count_ > kMaxNodes) {
    throw ValidationError("node count must be in [1," + std::to_string(kMaxNodes) + "], got " +
                          std::to_string(node_count_));
  }
  check_node(node_count_, source_, "source");
  if (static_cast<int>(capacity_.size()) != node_count_) {
    throw ValidationError("capacity vector length does not match node count");
  }
  for (int c : capacity_) {
    if (c < 0) throw ValidationError("negative capacity");
  }
  out_.assign(node_count_, NodeSet{});
  in_.assign(node_count_, NodeSet{});
  for (auto [u, v] : edges) {
    check_node(node_count_, u, "edge");
    check_node(node_count_, v, "edge");
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    out_[u].insert(v);
    in_[v].insert(u);
  }
  NodeSet unreachable = all_nodes() - reachable_within(all_nodes());
  if (!unreachable.empty()) {
    throw ValidationError("nodes unreachable from source " + std::to_string(source_) + ": " +
                          unreachable.to_string());
  }
}

std::vector<Edge> NetworkGraph::edges() const {
  std::vector<Edge> out;
  for (NodeId u = 0; u < node_count_; ++u) {
    out_[u].for_each([&](NodeId v) { out.emplace_back(u, v); });
  }
  return out;
}

NodeSet NetworkGraph::reachable_within(NodeSet allowed) const {
  if (!allowed.contains(source_)) return {};
  NodeSet seen{source_};
  NodeSet frontier = seen;
  while (!frontier.empty()) {
    NodeSet next;
    frontier.for_each([&](NodeId u) { next |= out_[u]; });
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

ConflictGraph::ConflictGraph(int node_count) : node_count_(node_count), adj_(node_count) {}

ConflictGraph::ConflictGraph(int node_count, const std::vector<Edge>& pairs) : ConflictGraph(node_count) {
  for (auto [u, v] : pairs) {
    check_node(node_count_, u, "conflict");
    check_node(node_count_, v, "conflict");
    if (u == v) throw ValidationError("conflict pair with itself at node " + std::to_string(u));
    add(u, v);
  }
}

ConflictGraph ConflictGraph::complete(int node_count) {
  ConflictGraph cg(node_count);
  for (NodeId i = 0; i < node_count; ++i)
    for (NodeId j = i + 1; j < node_count; ++j) cg.add(i, j);
  return cg;
}

void ConflictGraph::add(NodeId i, NodeId j) {
  adj_[i].insert(j);
  adj_[j].insert(i);
}

bool ConflictGraph::is_independent(NodeSet s) const {
  bool ok = true;
  s.for_each([&](NodeId i) { ok = ok && !adj_[i].intersects(s); });
  return ok;
}

int ConflictGraph::edge_count() const {
  int total = 0;
  for (NodeSet a : adj_) total += a.size();
  return total / 2;
}

// ---------------------------------------------------------------------------
// Graph file parsing

namespace {

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::optional<int> n;
  std::optional<int> src;
  std::vector<std::pair<NodeId, int>> caps;
  std::vector<Edge> edges;
  std::vector<Edge> conflicts;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    const std::string_view key = toks[0];
    auto expect_args = [&](std::size_t k) {
      if (toks.size() != k + 1) {
        throw ParseError(line_no, "'" + std::string(key) + "' takes " + std::to_string(k) + " argument(s)");
      }
    };
    if (key == "n") {
      expect_args(1);
      n = parse_int(toks[1], line_no);
    } else if (key == "src") {
      expect_args(1);
      src = parse_int(toks[1], line_no);
    } else if (key == "cap") {
      if (toks.size() < 2) throw ParseError(line_no, "'cap' needs at least one <node>:<int> entry");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        auto colon = toks[k].find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected <node>:<int>");
        caps.emplace_back(parse_int(toks[k].substr(0, colon), line_no), parse_int(toks[k].substr(colon + 1), line_no));
      }
    } else if (key == "edge" || key == "biedge" || key == "conflict") {
      expect_args(2);
      NodeId u = parse_int(toks[1], line_no), v = parse_int(toks[2], line_no);
      if (key == "conflict") {
        conflicts.emplace_back(u, v);
      } else {
        edges.emplace_back(u, v);
        if (key == "biedge") edges.emplace_back(v, u);
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!n) throw ParseError("missing 'n' line (empty node list)");
  if (*n < 1) throw ParseError("node count must be positive (empty node list)");
  if (!src) throw ParseError("missing 'src' line");
  if (*n > kMaxNodes) throw ValidationError("node count above " + std::to_string(kMaxNodes));

  std::vector<int> capacity(*n, 1);
  for (auto [node, c] : caps) {
    check_node(*n, node, "cap");
    capacity[node] = c;
  }
  NetworkGraph g(*n, *src, std::move(capacity), edges);
  ConflictGraph check(*n, conflicts);  // validates the pairs
  (void)check;
  return GraphFile{std::move(g), std::move(conflicts)};
}

NetworkGraph load_graph(std::string_view text) { return parse_graph_file(text).graph; }

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

std::string format_graph_file(const NetworkGraph& g, const std::vector<Edge>& conflicts) {
  std::ostringstream os;
  os << "n " << g.node_count() << "\nsrc " << g.source() << "\ncap";
  for (NodeId i = 0; i < g.node_count(); ++i) os << ' ' << i << ':' << g.capacity(i);
  os << '\n';
  for (auto [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
  for (auto [u, v] : conflicts) os << "conflict " << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

ConflictGraph build_conflict_graph(const NetworkGraph& g, const InterferenceModel& m) {
  const int n = g.node_count();
  switch (m.kind) {
    case InterferenceModel::Kind::NoInterference:
      return ConflictGraph(n);
    case InterferenceModel::Kind::ExplicitConflicts:
      return ConflictGraph(n, m.conflicts);
    case InterferenceModel::Kind::PrimaryInterference: {
      std::vector<Edge> pairs;
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
          if (g.has_edge(i, j) || g.has_edge(j, i) || g.out_neighbors(i).intersects(g.out_neighbors(j))) {
            pairs.emplace_back(i, j);
          }
        }
      }
      return ConflictGraph(n, pairs);
    }
  }
  return ConflictGraph(n);
}

bool is_cds(const NetworkGraph& g, NodeSet s) {
  if (!s.is_subset_of(g.all_nodes()) || !s.contains(g.source())) return false;
  if (g.reachable_within(s) != s) return false;
  NodeSet dominated = s;
  s.for_each([&](NodeId u) { dominated |= g.out_neighbors(u); });
  return dominated == g.all_nodes();
}

std::vector<NodeSet> enumerate_minimal_cds(const NetworkGraph& g, int limit) {
  const int n = g.node_count();
  if (n > limit) {
    throw LimitExceeded("minimal CDS enumeration limited to " + std::to_string(limit) + " nodes, graph has " +
                        std::to_string(n));
  }
  const NodeId r = g.source();
  // Scan subsets of V \ {r}; supersets of a CDS found earlier in the same chain are skipped
  // by the minimality test below.
  std::vector<NodeSet> out;
  const std::uint64_t others = (NodeSet::all(n) - NodeSet{r}).bits();
  std::uint64_t sub = 0;
  do {
    NodeSet s = NodeSet(sub) | NodeSet{r};
    if (is_cds(g, s)) {
      bool minimal = true;
      (s - NodeSet{r}).for_each([&](NodeId v) {
        if (minimal) {
          NodeSet t = s;
          t.erase(v);
          if (is_cds(g, t)) minimal = false;
        }
      });
      if (minimal) out.push_back(s);
    }
    sub = (sub - others) & others;  // next subset of `others`
  } while (sub != 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<NodeSet> enumerate_schedules(const ConflictGraph& cg, int limit) {
  const int n = cg.node_count();
  if (n > limit) {
    throw LimitExceeded("schedule enumeration limited to " + std::to_string(limit) + " nodes, graph has " +
                        std::to_string(n));
  }
  std::vector<NodeSet> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < total; ++b) {
    // Every proper subset was visited earlier; extend only from independent sets.
    NodeSet s(b);
    if (b == 0) {
      out.push_back(s);
      continue;
    }
    NodeId top = 63 - std::countl_zero(b);
    NodeSet rest = s;
    rest.erase(top);
    if (!cg.neighbors(top).intersects(rest) && cg.is_independent(rest)) out.push_back(s);
  }
  return out;
}

std::vector<NodeSet> enumerate_maximal_schedules(const ConflictGraph& cg, int limit) {
  std::vector<NodeSet> all = enumerate_schedules(cg, limit);
  const NodeSet everyone = NodeSet::all(cg.node_count());
  std::vector<NodeSet> out;
  for (NodeSet s : all) {
    NodeSet blocked = s;
    s.for_each([&](NodeId i) { blocked |= cg.neighbors(i); });
    if (blocked == everyone) out.push_back(s);
  }
  return out;
}

namespace topology {

NetworkGraph star(int leaves, int center_capacity, int leaf_capacity) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, 0);
  }
  std::vector<int> cap(leaves + 1, leaf_capacity);
  cap[0] = center_capacity;
  return NetworkGraph(leaves + 1, 0, cap, e);
}

NetworkGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(i + 1, i);
  }
  return NetworkGraph(n, 0, std::vector<int>(n, 1), e);
}

NetworkGraph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        e.emplace_back(id(r, c), id(r, c + 1));
        e.emplace_back(id(r, c + 1), id(r, c));
      }
      if (r + 1 < rows) {
        e.emplace_back(id(r, c), id(r + 1, c));
        e.emplace_back(id(r + 1, c), id(r, c));
      }
    }
  }
  return NetworkGraph(rows * cols, 0, std::vector<int>(rows * cols, 1), e);
}

NetworkGraph two_node(int source_capacity) { return NetworkGraph(2, 0, {source_capacity, 1}, {{0, 1}}); }

}  // namespace topology

}  // namespace umw
