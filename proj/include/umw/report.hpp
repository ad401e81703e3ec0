#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "umw/capacity.hpp"
#include "umw/simulation.hpp"

namespace umw {

/// Shortest round-trip decimal form; "nan" for missing values.
std::string format_number(double x);

/// {"lambda_star": .., "cds_rates": [{"members": [..], "rate": ..}], "schedule_probs": [{"members": [..], "prob": ..}]}
nlohmann::json to_json(const CapacityResult& r);
nlohmann::json to_json(const ExactCapacity& e);

/// Header `slot,sum_pq,max_vq,delivered,arrivals`.
void write_trace_csv(std::ostream& os, const Trace& t);
/// Header `id,arrival_slot,delivered_slot,delay`; undelivered packets leave the last two fields empty.
void write_packets_csv(std::ostream& os, const Trace& t);
/// `# key=value` comment lines, then header `lambda,mean_delay,throughput,stable`.
void write_saturation_csv(std::ostream& os, const std::vector<SaturationRow>& rows,
                          const std::vector<std::string>& comments = {});

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Minimal reader for the files above: skips `#` lines, splits on commas. Throws ParseError on
/// ragged rows.
CsvTable read_csv(std::istream& is);

/// Parses a saturation table back (throughput and stable only round-trip the printed values).
std::vector<SaturationRow> read_saturation_csv(std::istream& is);

}  // namespace umw
