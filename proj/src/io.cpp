#include "kitaev/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kitaev {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_double(v));
}

namespace {

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

json to_json(const Couplings& j) { return {{"jx", number(j.jx)}, {"jy", number(j.jy)}, {"jz", number(j.jz)}}; }

Couplings couplings_from_json(const json& j) {
  Couplings c{j.at("jx").get<double>(), j.at("jy").get<double>(), j.at("jz").get<double>()};
  c.validate();
  return c;
}

json to_json(const GaugeConfig& g) {
  const LatticeSpec& s = g.spec();
  json links = json::array();
  for (int l = 0; l < s.num_links(); ++l) {
    const LinkRef r = s.link_at(l);
    links.push_back({{"cell", {r.cell.x, r.cell.y}}, {"kind", std::string(1, to_char(r.kind))}, {"u", g.value(l)}});
  }
  return {{"n1", s.n1()}, {"n2", s.n2()}, {"twist", s.twist()}, {"degenerate", s.degenerate()}, {"links", links}};
}

json to_json(const SpectrumResult& r) {
  return {{"couplings", to_json(r.couplings)},
          {"fluxes", r.fluxes},
          {"mode_energies", numbers(r.mode_energies)},
          {"ground_energy", number(r.ground_energy)},
          {"gap", number(r.gap)}};
}

json to_json(const EigenResult& r, const std::vector<SectorClassification>& sectors) {
  json fluxes = json::array();
  for (const auto& s : sectors) fluxes.push_back(s.fluxes);
  return {{"eigenvalues", numbers(r.eigenvalues)}, {"sector_fluxes", fluxes}, {"residuals", numbers(r.residuals)}};
}

json to_json(const InterferenceResult& r) {
  return {{"couplings", to_json(r.couplings)},
          {"s_expectation_gs", number(r.s_expectation_gs)},
          {"s_expectation_v", number(r.s_expectation_v)},
          {"fidelity_v", number(r.fidelity_v)},
          {"fidelity_gs", number(r.fidelity_gs)},
          {"energies", {{"gs", number(r.energy_gs)}, {"v", number(r.energy_v)}}}};
}

CsvWriter::CsvWriter(std::ostream& out, const json& config, std::vector<std::string> columns)
    : out_(out), columns_(columns.size()) {
  out_ << "# config: " << config.dump() << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

CsvWriter& CsvWriter::cell(const std::string& v) {
  if (filled_ == columns_) throw std::logic_error("csv row is already full");
  out_ << (filled_++ ? "," : "") << v;
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_double(v)); }
CsvWriter& CsvWriter::cell(long long v) { return cell(std::to_string(v)); }
CsvWriter& CsvWriter::cell(bool v) { return cell(std::string(v ? "1" : "0")); }

void CsvWriter::end_row() {
  if (filled_ != columns_) throw std::logic_error("csv row has the wrong number of cells");
  out_ << '\n';
  filled_ = 0;
}

json read_csv_config(std::istream& in) {
  std::string line;
  const std::string tag = "# config: ";
  if (!std::getline(in, line) || line.rfind(tag, 0) != 0) throw std::runtime_error("missing config header");
  return json::parse(line.substr(tag.size()));
}

}  // namespace kitaev
