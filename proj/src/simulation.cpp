#include "umw/simulation.hpp"

#include <cmath>
#include <future>
#include <unordered_map>

#include "umw/errors.hpp"

namespace umw {

std::vector<PacketCopy> ltf_pick(NodeBuffer& buffer, int budget) {
  std::vector<PacketCopy> out;
  while (budget-- > 0 && !buffer.empty()) out.push_back(buffer.pop());
  return out;
}

void SimConfig::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be finite and nonnegative");
  if (horizon < 1) throw ConfigError("horizon must be at least 1 slot");
  if (!(p_on >= 0.0 && p_on <= 1.0)) throw ConfigError("p_on must lie in [0, 1]");
  for (int a : scripted_arrivals) {
    if (a < 0) throw ConfigError("scripted arrivals must be nonnegative");
  }
}

double Trace::throughput() const {
  return slots.empty() ? 0.0 : static_cast<double>(total_delivered()) / static_cast<double>(slots.size());
}

double Trace::backlog_rate() const {
  return slots.empty() ? 0.0 : static_cast<double>(slots.back().sum_pq) / static_cast<double>(slots.size());
}

std::optional<double> Trace::mean_delay() const {
  double sum = 0.0;
  std::uint64_t count = 0;
  for (const auto& p : packets) {
    if (auto d = p.delay()) {
      sum += static_cast<double>(*d);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

bool Trace::sandwich_holds() const {
  for (const auto& s : slots) {
    if (s.delivered > s.arrivals) return false;
    if (s.arrivals > s.delivered + s.sum_pq) return false;
  }
  return true;
}

int SimRng::poisson(double mean) {
  int total = 0;
  // Knuth's product method, applied in chunks so exp(-chunk) stays well above underflow.
  while (mean > 0.0) {
    const double chunk = std::min(mean, 30.0);
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double prod = uniform01();
    while (prod > limit) {
      ++total;
      prod *= uniform01();
    }
  }
  return total;
}

int SimRng::bernoulli_batch(double lambda) {
  const double whole = std::floor(lambda);
  return static_cast<int>(whole) + (bernoulli(lambda - whole) ? 1 : 0);
}

namespace {

struct LivePacket {
  NodeSet route;
  NodeSet received;
  NodeSet holders;  // nodes that ever stored a copy
  int pending = 0;
  bool delivered = false;
};

}  // namespace

Trace simulate(const NetworkGraph& g, const ConflictGraph& cg, const SimConfig& cfg,
               const TransmissionObserver& observer) {
  cfg.validate();
  const int n = g.node_count();
  const NodeId src = g.source();
  const NodeSet everyone = g.all_nodes();
  UmwController umw(g, cg, cfg.route_solver, cfg.activation_solver);
  SimRng rng(cfg.seed);

  VirtualQueueVector vq = VirtualQueueVector::zeros(n);
  std::vector<NodeBuffer> buffers(n);
  std::unordered_map<PacketId, LivePacket> live;
  Trace trace;
  trace.slots.reserve(cfg.horizon);

  PacketId next_id = 0;
  std::uint64_t arrived = 0, delivered = 0, pending_total = 0;
  std::vector<std::pair<NodeId, PacketCopy>> sent;

  auto mark_delivered = [&](PacketId id, LivePacket& p, std::uint64_t t) {
    if (!p.delivered && p.received == everyone) {
      p.delivered = true;
      trace.packets[id].delivered_slot = t;
      ++delivered;
    }
  };

  for (std::uint64_t t = 0; t < cfg.horizon; ++t) {
    // (i) availability
    NodeSet available = everyone;
    if (cfg.p_on < 1.0) {
      available = {};
      for (NodeId i = 0; i < n; ++i)
        if (rng.bernoulli(cfg.p_on)) available.insert(i);
    }

    // (ii) external arrivals at the source
    int k = 0;
    if (!cfg.scripted_arrivals.empty()) {
      k = t < cfg.scripted_arrivals.size() ? cfg.scripted_arrivals[t] : 0;
    } else if (cfg.lambda > 0.0) {
      k = cfg.arrivals == ArrivalProcess::Poisson ? rng.poisson(cfg.lambda) : rng.bernoulli_batch(cfg.lambda);
    }

    // (iii)+(iv) route and schedule from the slot-start virtual queues
    const SlotDecision decision = umw.decide(vq, k, available);
    for (int a = 0; a < k; ++a) {
      const PacketId id = next_id++;
      trace.packets.push_back({id, t, std::nullopt});
      LivePacket& p = live[id];
      p.route = decision.route;
      p.received = NodeSet{src};
      p.holders = NodeSet{src};
      p.pending = 1;
      buffers[src].push({id, src, 0});
      ++pending_total;
      mark_delivered(id, p, t);
    }
    arrived += static_cast<std::uint64_t>(k);

    // (v) every active node picks its copies first; receptions take effect afterwards
    sent.clear();
    decision.schedule.for_each([&](NodeId i) {
      for (const PacketCopy& c : ltf_pick(buffers[i], g.capacity(i))) sent.emplace_back(i, c);
    });
    for (const auto& [sender, copy] : sent) {
      LivePacket& p = live.at(copy.packet_id);
      const NodeSet receivers = g.out_neighbors(sender);
      const NodeSet fresh = (receivers & p.route) - p.holders;
      p.received |= receivers;
      p.holders |= fresh;
      --p.pending;
      --pending_total;
      fresh.for_each([&](NodeId j) {
        buffers[j].push({copy.packet_id, j, copy.transmit_count + 1});
        ++p.pending;
        ++pending_total;
      });
      if (observer) {
        observer({t, sender, copy.packet_id, copy.transmit_count, p.route, receivers, fresh});
      }
    }
    // (vii) deliveries, then retire packets with nothing left to forward
    for (const auto& [sender, copy] : sent) {
      auto it = live.find(copy.packet_id);
      if (it == live.end()) continue;
      mark_delivered(copy.packet_id, it->second, t);
      if (it->second.delivered && it->second.pending == 0) live.erase(it);
    }

    // (vi) virtual queue update
    vq = vq_step(vq, decision.arrivals, decision.service);

    trace.slots.push_back({t, pending_total, vq.max(), delivered, arrived, decision.schedule});
  }
  return trace;
}

std::vector<SaturationRow> measure_saturation(const NetworkGraph& g, const ConflictGraph& cg, const SimConfig& base,
                                              const std::vector<double>& lambda_grid, int runs, double threshold,
                                              int jobs) {
  if (lambda_grid.empty()) throw ConfigError("lambda grid must not be empty");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  base.validate();

  auto point = [&](double lambda) {
    SaturationRow row;
    row.lambda = lambda;
    double delay_sum = 0.0;
    int delay_runs = 0;
    for (int r = 0; r < runs; ++r) {
      SimConfig cfg = base;
      cfg.lambda = lambda;
      cfg.seed = base.seed + static_cast<std::uint64_t>(r);
      Trace tr = simulate(g, cg, cfg);
      row.throughput += tr.throughput() / runs;
      row.backlog_rate += tr.backlog_rate() / runs;
      if (auto d = tr.mean_delay()) {
        delay_sum += *d;
        ++delay_runs;
      }
    }
    if (delay_runs > 0) row.mean_delay = delay_sum / delay_runs;
    row.stable = row.backlog_rate < threshold;
    return row;
  };

  std::vector<SaturationRow> rows(lambda_grid.size());
  const std::size_t width = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t start = 0; start < lambda_grid.size(); start += width) {
    std::vector<std::future<SaturationRow>> batch;
    const std::size_t stop = std::min(lambda_grid.size(), start + width);
    for (std::size_t k = start; k < stop; ++k) {
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, point, lambda_grid[k]));
    }
    for (std::size_t k = start; k < stop; ++k) rows[k] = batch[k - start].get();
  }
  return rows;
}

}  // namespace umw
