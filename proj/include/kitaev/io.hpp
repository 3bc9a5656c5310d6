#pragma once

// Output formatting: CSV with a JSON config header line, JSON reports, and
// doubles at 12 significant digits everywhere.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "kitaev/couplings.hpp"
#include "kitaev/eigensolver.hpp"
#include "kitaev/interference.hpp"
#include "kitaev/lattice.hpp"
#include "kitaev/majorana.hpp"
#include "kitaev/spin_ed.hpp"

namespace kitaev {

using json = nlohmann::ordered_json;

std::string format_double(double v);
// The double that format_double prints, so JSON dumps agree with CSV.
double round12(double v);

json to_json(const Couplings& j);
Couplings couplings_from_json(const json& j);
json to_json(const GaugeConfig& g);
json to_json(const SpectrumResult& r);
json to_json(const EigenResult& r, const std::vector<SectorClassification>& sectors);
json to_json(const InterferenceResult& r);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const json& config, std::vector<std::string> columns);

  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(bool v);
  CsvWriter& cell(const std::string& v);
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

// Reads the `# config: {...}` line of a CSV written by CsvWriter.
json read_csv_config(std::istream& in);

}  // namespace kitaev
