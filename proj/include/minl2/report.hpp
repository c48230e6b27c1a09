// Deterministic result rows: fixed-order CSV (long format) and JSON lines,
// all floating point at 17 significant digits

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minl2 {

struct ReportRow {
  std::string scenario;
  std::string operation;
  // ordered metric/value pairs; order is part of the output contract
  std::vector<std::pair<std::string, double>> values;
  std::string verdict = "n/a";  // equality | strict | violated | n/a
};

std::string format_g17(double v);

// header "scenario,operation,metric,value,verdict", one line per metric
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
// one JSON object per row
void write_jsonl(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace minl2
