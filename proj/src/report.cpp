#include "minl2/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace minl2 {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "scenario,operation,metric,value,verdict\n";
  for (const auto& r : rows)
    for (const auto& [k, v] : r.values)
      os << r.scenario << ',' << r.operation << ',' << k << ','
         << format_g17(v) << ',' << r.verdict << '\n';
}

void write_jsonl(std::ostream& os, const std::vector<ReportRow>& rows) {
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["operation"] = r.operation;
    nlohmann::ordered_json vals;
    // stringified to keep the 17-digit byte contract
    for (const auto& [k, v] : r.values) vals[k] = format_g17(v);
    j["values"] = vals;
    j["verdict"] = r.verdict;
    os << j.dump() << '\n';
  }
}

}  // namespace minl2
