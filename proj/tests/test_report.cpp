#include <sstream>

#include "doctest.h"
#include "umw/errors.hpp"
#include "umw/report.hpp"

using namespace umw;

TEST_SUITE("report") {

TEST_CASE("capacity JSON shape") {
  NetworkGraph g = topology::grid(3, 3);
  CapacityResult r = broadcast_capacity(g, build_conflict_graph(g, InterferenceModel::primary()));
  nlohmann::json j = to_json(r);
  CHECK(j["lambda_star"].get<double>() == doctest::Approx(1.0 / 3.0));
  double total = 0;
  for (const auto& e : j["cds_rates"]) {
    CHECK(e["members"].front().get<int>() == 0);
    total += e["rate"].get<double>();
  }
  CHECK(total == doctest::Approx(1.0 / 3.0));
  CHECK(j["schedule_probs"].is_array());
  CHECK(to_json(ExactCapacity{"1", "3", 1.0 / 3.0})["text"] == "1/3");
}

TEST_CASE("trace and packet CSV parse back") {
  NetworkGraph g = topology::star(3);
  SimConfig cfg;
  cfg.lambda = 0.6;
  cfg.horizon = 400;
  Trace t = simulate(g, ConflictGraph(4), cfg);

  std::stringstream trace_csv;
  write_trace_csv(trace_csv, t);
  CsvTable tt = read_csv(trace_csv);
  CHECK(tt.header == std::vector<std::string>{"slot", "sum_pq", "max_vq", "delivered", "arrivals"});
  REQUIRE(tt.rows.size() == 400);
  CHECK(std::stoull(tt.rows.back()[3]) == t.total_delivered());
  CHECK(std::stod(tt.rows[17][2]) == t.slots[17].max_vq);

  std::stringstream packets_csv;
  write_packets_csv(packets_csv, t);
  CsvTable pt = read_csv(packets_csv);
  CHECK(pt.header == std::vector<std::string>{"id", "arrival_slot", "delivered_slot", "delay"});
  REQUIRE(pt.rows.size() == t.packets.size());
  for (std::size_t k = 0; k < pt.rows.size(); ++k) {
    const auto& p = t.packets[k];
    CHECK(std::stoull(pt.rows[k][1]) == p.arrival_slot);
    if (p.delivered_slot) CHECK(std::stoull(pt.rows[k][3]) == *p.delay());
    else CHECK(pt.rows[k][2].empty());
  }
}

TEST_CASE("saturation CSV round trip") {
  std::vector<SaturationRow> rows{{0.0, std::nullopt, 0.0, 0.0, true}, {0.35, 12.25, 0.3312, 0.02, false}};
  std::stringstream ss;
  write_saturation_csv(ss, rows, {"seed_base=7"});
  CHECK(ss.str().rfind("# seed_base=7\nlambda,mean_delay,throughput,stable\n", 0) == 0);
  auto back = read_saturation_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK_FALSE(back[0].mean_delay.has_value());
  CHECK(back[1].lambda == 0.35);
  CHECK(*back[1].mean_delay == 12.25);
  CHECK(back[1].throughput == 0.3312);
  CHECK(back[0].stable);
  CHECK_FALSE(back[1].stable);

  std::stringstream ragged("a,b\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), ParseError);
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.0, 1e-17, 123456.789}) CHECK(std::stod(format_number(x)) == x);
  CHECK(format_number(std::nan("")) == "nan");
}

}  // TEST_SUITE
