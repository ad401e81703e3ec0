#include "umw/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "umw/errors.hpp"

namespace umw {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

namespace {

nlohmann::json members(NodeSet s) { return s.members(); }

}  // namespace

nlohmann::json to_json(const CapacityResult& r) {
  nlohmann::json j;
  j["lambda_star"] = r.lambda_star;
  j["cds_rates"] = nlohmann::json::array();
  for (const auto& [d, a] : r.witness.cds_rates) j["cds_rates"].push_back({{"members", members(d)}, {"rate", a}});
  j["schedule_probs"] = nlohmann::json::array();
  for (const auto& [s, p] : r.witness.schedule_probs) {
    j["schedule_probs"].push_back({{"members", members(s)}, {"prob", p}});
  }
  return j;
}

nlohmann::json to_json(const ExactCapacity& e) {
  return {{"numerator", e.numerator}, {"denominator", e.denominator}, {"text", e.str()}, {"value", e.value}};
}

void write_trace_csv(std::ostream& os, const Trace& t) {
  os << "slot,sum_pq,max_vq,delivered,arrivals\n";
  for (const auto& s : t.slots) {
    os << s.slot << ',' << s.sum_pq << ',' << format_number(s.max_vq) << ',' << s.delivered << ',' << s.arrivals
       << '\n';
  }
}

void write_packets_csv(std::ostream& os, const Trace& t) {
  os << "id,arrival_slot,delivered_slot,delay\n";
  for (const auto& p : t.packets) {
    os << p.id << ',' << p.arrival_slot << ',';
    if (p.delivered_slot) os << *p.delivered_slot << ',' << *p.delay();
    else os << ',';
    os << '\n';
  }
}

void write_saturation_csv(std::ostream& os, const std::vector<SaturationRow>& rows,
                          const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "lambda,mean_delay,throughput,stable\n";
  for (const auto& r : rows) {
    os << format_number(r.lambda) << ',' << (r.mean_delay ? format_number(*r.mean_delay) : "nan") << ','
       << format_number(r.throughput) << ',' << (r.stable ? "true" : "false") << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(l);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size()) throw ParseError(line_no, "row width differs from header");
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw ParseError("CSV without header");
  return table;
}

std::vector<SaturationRow> read_saturation_csv(std::istream& is) {
  CsvTable t = read_csv(is);
  if (t.header != std::vector<std::string>{"lambda", "mean_delay", "throughput", "stable"}) {
    throw ParseError("unexpected saturation CSV header");
  }
  std::vector<SaturationRow> rows;
  for (const auto& r : t.rows) {
    SaturationRow row;
    row.lambda = std::stod(r[0]);
    if (r[1] != "nan") row.mean_delay = std::stod(r[1]);
    row.throughput = std::stod(r[2]);
    if (r[3] != "true" && r[3] != "false") throw ParseError("stable column must be true/false");
    row.stable = r[3] == "true";
    rows.push_back(row);
  }
  return rows;
}

}  // namespace umw
