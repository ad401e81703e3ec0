#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "umw/graph.hpp"
#include "umw/umw_policy.hpp"

namespace umw {

using PacketId = std::uint64_t;

/// One node's copy of a packet, waiting to be transmitted.
struct PacketCopy {
  PacketId packet_id = 0;
  NodeId holder = 0;
  int transmit_count = 0;  // transmissions along this copy's lineage so far

  bool operator==(const PacketCopy&) const = default;
};

/// Per-node LTF priority queue: least transmit_count first, then lowest packet id.
class NodeBuffer {
 public:
  void push(const PacketCopy& c) { heap_.push(c); }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  const PacketCopy& top() const { return heap_.top(); }
  PacketCopy pop() {
    PacketCopy c = heap_.top();
    heap_.pop();
    return c;
  }

 private:
  struct LaterFirst {
    bool operator()(const PacketCopy& a, const PacketCopy& b) const {
      return a.transmit_count != b.transmit_count ? a.transmit_count > b.transmit_count : a.packet_id > b.packet_id;
    }
  };
  std::priority_queue<PacketCopy, std::vector<PacketCopy>, LaterFirst> heap_;
};

/// Removes and returns the `budget` highest-priority copies.
std::vector<PacketCopy> ltf_pick(NodeBuffer& buffer, int budget);

enum class ArrivalProcess { BernoulliBatch, Poisson };

struct SimConfig {
  double lambda = 0.0;
  ArrivalProcess arrivals = ArrivalProcess::BernoulliBatch;
  std::uint64_t horizon = 1000;
  std::uint64_t seed = 1;
  double p_on = 1.0;
  Solver route_solver = Solver::Exact;
  Solver activation_solver = Solver::Exact;
  /// When non-empty, slot t receives scripted_arrivals[t] packets (0 past the end) and the
  /// random arrival process is not sampled.
  std::vector<int> scripted_arrivals;

  /// Throws ConfigError.
  void validate() const;
};

struct SlotRecord {
  std::uint64_t slot = 0;
  std::uint64_t sum_pq = 0;       // pending copies over all nodes after the slot
  double max_vq = 0.0;            // max_i Q~_i(t+1)
  std::uint64_t delivered = 0;    // R(t): packets received by every node so far
  std::uint64_t arrivals = 0;     // A(0,t): cumulative external arrivals
  NodeSet schedule;
};

struct PacketRecord {
  PacketId id = 0;
  std::uint64_t arrival_slot = 0;
  std::optional<std::uint64_t> delivered_slot;

  std::optional<std::uint64_t> delay() const {
    return delivered_slot ? std::optional(*delivered_slot - arrival_slot) : std::nullopt;
  }
};

struct Trace {
  std::vector<SlotRecord> slots;
  std::vector<PacketRecord> packets;

  std::uint64_t horizon() const { return slots.size(); }
  std::uint64_t total_delivered() const { return slots.empty() ? 0 : slots.back().delivered; }
  /// R(T) / T
  double throughput() const;
  /// sum_i Q_i(T) / T
  double backlog_rate() const;
  /// Mean delay of delivered packets; nullopt if none were delivered.
  std::optional<double> mean_delay() const;
  /// A(0,t) - sum Q_i(t) <= R(t) <= A(0,t) for every slot.
  bool sandwich_holds() const;
};

/// A single node's transmission of one packet copy, reported to an optional observer.
struct TransmissionEvent {
  std::uint64_t slot = 0;
  NodeId sender = 0;
  PacketId packet_id = 0;
  int transmit_count = 0;  // count carried by the transmitted copy
  NodeSet route;
  NodeSet receivers;
  NodeSet enqueued;        // receivers that stored a new copy
};

using TransmissionObserver = std::function<void(const TransmissionEvent&)>;

/// Deterministic random stream for one run (64-bit Mersenne Twister with portable sampling).
class SimRng {
 public:
  explicit SimRng(std::uint64_t seed) : engine_(seed) {}
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }
  int poisson(double mean);
  /// floor(lambda) packets plus one more with probability frac(lambda).
  int bernoulli_batch(double lambda);

 private:
  std::mt19937_64 engine_;
};

/// Slotted simulation of UMW routing/activation on the virtual queues with LTF forwarding of
/// physical packet copies over hyperedges.
Trace simulate(const NetworkGraph& g, const ConflictGraph& cg, const SimConfig& cfg,
               const TransmissionObserver& observer = {});

struct SaturationRow {
  double lambda = 0.0;
  std::optional<double> mean_delay;
  double throughput = 0.0;
  double backlog_rate = 0.0;
  bool stable = false;
};

inline constexpr double kDefaultStabilityThreshold = 0.01;

/// Runs `runs` seeds (cfg.seed + k) at each lambda. Rows follow lambda_grid order.
std::vector<SaturationRow> measure_saturation(const NetworkGraph& g, const ConflictGraph& cg, const SimConfig& base,
                                              const std::vector<double>& lambda_grid, int runs,
                                              double threshold = kDefaultStabilityThreshold, int jobs = 1);

}  // namespace umw
