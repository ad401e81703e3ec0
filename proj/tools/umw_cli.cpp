// umw: capacity, simulation, saturation sweeps and hardness checks from the command line.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "umw/capacity.hpp"
#include "umw/errors.hpp"
#include "umw/hardness.hpp"
#include "umw/report.hpp"
#include "umw/simulation.hpp"

namespace {

using namespace umw;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string graph_path;
  std::string interference = "primary";
  double lambda = 0.0;
  std::string lambda_grid;
  std::uint64_t horizon = 100000;
  int runs = 3;
  std::uint64_t seed = 1;
  double p_on = 1.0;
  std::string solver = "exact";
  std::string arrivals = "bernoulli";
  int jobs = 1;
  double threshold = kDefaultStabilityThreshold;
  std::string out;
  std::string packets_out;
  std::string clauses_path;
  std::vector<std::uint64_t> random_spec;
};

struct Loaded {
  NetworkGraph graph;
  ConflictGraph conflicts;
};

Loaded load(const Options& o) {
  GraphFile f = read_graph_file(o.graph_path);
  InterferenceModel m;
  if (o.interference == "none") m = InterferenceModel::none();
  else if (o.interference == "primary") m = InterferenceModel::primary();
  else m = InterferenceModel::explicit_pairs(f.conflicts);
  ConflictGraph cg = build_conflict_graph(f.graph, m);
  return {std::move(f.graph), std::move(cg)};
}

/// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_grid(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof() || step <= 0 || b < a) {
    throw ConfigError("--lambda-grid must be a:b:step with step > 0 and b >= a, got '" + spec + "'");
  }
  std::vector<double> grid;
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  for (long k = 0; k < count; ++k) grid.push_back(std::round((a + k * step) * 1e9) / 1e9);
  return grid;
}

SimConfig sim_config(const Options& o) {
  SimConfig cfg;
  cfg.lambda = o.lambda;
  cfg.horizon = o.horizon;
  cfg.seed = o.seed;
  cfg.p_on = o.p_on;
  cfg.arrivals = o.arrivals == "poisson" ? ArrivalProcess::Poisson : ArrivalProcess::BernoulliBatch;
  cfg.route_solver = cfg.activation_solver = o.solver == "greedy" ? Solver::Greedy : Solver::Exact;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  return f;
}

int cmd_capacity(const Options& o) {
  Loaded l = load(o);
  CapacityResult r = broadcast_capacity(l.graph, l.conflicts);
  nlohmann::json j = to_json(r);
  j["lambda_star_exact"] = broadcast_capacity_exact(l.graph, l.conflicts).str();
  j["clique_upper_bound"] = clique_upper_bound(l.graph, l.conflicts);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_simulate(const Options& o) {
  Loaded l = load(o);
  Trace t = simulate(l.graph, l.conflicts, sim_config(o));
  if (!o.out.empty()) {
    auto f = open_out(o.out);
    write_trace_csv(f, t);
  }
  if (!o.packets_out.empty()) {
    auto f = open_out(o.packets_out);
    write_packets_csv(f, t);
  }
  double max_vq = 0;
  for (const auto& s : t.slots) max_vq = std::max(max_vq, s.max_vq);
  nlohmann::json j{{"horizon", t.horizon()},
                   {"seed", o.seed},
                   {"arrivals", t.slots.back().arrivals},
                   {"delivered", t.total_delivered()},
                   {"throughput", t.throughput()},
                   {"backlog_rate", t.backlog_rate()},
                   {"max_vq", max_vq},
                   {"sandwich_ok", t.sandwich_holds()}};
  if (auto d = t.mean_delay()) j["mean_delay"] = *d;
  else j["mean_delay"] = nullptr;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const Options& o) {
  if (o.lambda_grid.empty()) throw ConfigError("sweep needs --lambda-grid a:b:step");
  Loaded l = load(o);
  const std::vector<double> grid = parse_grid(o.lambda_grid);
  auto rows = measure_saturation(l.graph, l.conflicts, sim_config(o), grid, o.runs, o.threshold, o.jobs);
  std::vector<std::string> comments{
      "graph=" + o.graph_path,
      "interference=" + o.interference,
      "horizon=" + std::to_string(o.horizon),
      "runs=" + std::to_string(o.runs),
      "seed_base=" + std::to_string(o.seed) + " (run k uses seed_base+k)",
      "p_on=" + format_number(o.p_on),
      "solver=" + o.solver,
      "arrivals=" + o.arrivals,
      "stable_threshold=" + format_number(o.threshold),
  };
  if (o.out.empty()) {
    write_saturation_csv(std::cout, rows, comments);
  } else {
    auto f = open_out(o.out);
    write_saturation_csv(f, rows, comments);
  }
  return 0;
}

Mnae3SatInstance read_clauses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open clause file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_mnae3(buf.str());
}

int cmd_reduce(const Options& o) {
  BroadcastInstance bi = reduce(read_clauses(o.clauses_path));
  std::string text = "# packets=" + std::to_string(bi.packets) + " horizon=" + std::to_string(bi.horizon) +
                     " interference=none\n" + format_graph_file(bi.graph);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    auto f = open_out(o.out);
    f << text;
  }
  return 0;
}

int cmd_hardness(const Options& o) {
  std::vector<Mnae3SatInstance> batch;
  if (!o.random_spec.empty()) {
    const auto& r = o.random_spec;
    batch = random_mnae3_instances(static_cast<int>(r[0]), static_cast<int>(r[1]), static_cast<int>(r[2]), r[3]);
  } else if (!o.clauses_path.empty()) {
    batch.push_back(read_clauses(o.clauses_path));
  } else {
    throw ConfigError("hardness needs --clauses PATH or --random n m count seed");
  }
  std::size_t matches = 0;
  for (std::size_t k = 0; k < batch.size(); ++k) {
    const bool sat = decide_mnae3sat(batch[k]);
    const bool bcast = decide_broadcast(reduce(batch[k]));
    matches += sat == bcast;
    std::cout << "instance " << k << ": sat=" << (sat ? "yes" : "no") << " broadcast=" << (bcast ? "yes" : "no")
              << ' ' << (sat == bcast ? "match" : "MISMATCH") << '\n';
  }
  std::cout << matches << '/' << batch.size() << " match\n";
  return matches == batch.size() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UMW broadcast: capacity, simulation and hardness tools"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "Graph file")->required();
    sub->add_option("--interference", o.interference, "Interference model")
        ->check(CLI::IsMember({"none", "primary", "explicit"}));
  };
  auto sim_opts = [&](CLI::App* sub) {
    sub->add_option("--horizon", o.horizon, "Slots per run")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Random seed (base seed for sweeps)");
    sub->add_option("--p-on", o.p_on, "Per-slot node availability probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--solver", o.solver, "Route/activation solver")->check(CLI::IsMember({"exact", "greedy"}));
    sub->add_option("--arrivals", o.arrivals, "Arrival process")->check(CLI::IsMember({"bernoulli", "poisson"}));
  };

  auto* capacity = app.add_subcommand("capacity", "Exact broadcast capacity (JSON on stdout)");
  graph_opts(capacity);

  auto* simulate_cmd = app.add_subcommand("simulate", "Single simulation run");
  graph_opts(simulate_cmd);
  sim_opts(simulate_cmd);
  simulate_cmd->add_option("--lambda", o.lambda, "Arrival rate (packets/slot)")->required();
  simulate_cmd->add_option("--out", o.out, "Per-slot trace CSV");
  simulate_cmd->add_option("--packets-out", o.packets_out, "Per-packet CSV");

  auto* sweep = app.add_subcommand("sweep", "Saturation table over a lambda grid");
  graph_opts(sweep);
  sim_opts(sweep);
  sweep->add_option("--lambda-grid", o.lambda_grid, "a:b:step")->required();
  sweep->add_option("--runs", o.runs, "Seeds per lambda")->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", o.jobs, "Concurrent lambda points")->check(CLI::PositiveNumber);
  sweep->add_option("--threshold", o.threshold, "Stability threshold on sum Q(T)/T");
  sweep->add_option("--out", o.out, "Saturation CSV (stdout if omitted)");

  auto* reduce_cmd = app.add_subcommand("reduce", "MNAE-3SAT clause file -> broadcast gadget graph file");
  reduce_cmd->add_option("--clauses", o.clauses_path, "Clause file")->required();
  reduce_cmd->add_option("--out", o.out, "Graph file (stdout if omitted)");

  auto* hardness = app.add_subcommand("hardness", "Check MNAE-3SAT vs. broadcast gadget answers");
  auto* clauses_opt = hardness->add_option("--clauses", o.clauses_path, "Clause file");
  hardness->add_option("--random", o.random_spec, "n m count seed")->expected(4)->excludes(clauses_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*capacity) return cmd_capacity(o);
    if (*simulate_cmd) return cmd_simulate(o);
    if (*sweep) return cmd_sweep(o);
    if (*reduce_cmd) return cmd_reduce(o);
    if (*hardness) return cmd_hardness(o);
  } catch (const umw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
