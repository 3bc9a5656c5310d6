#include "kitaev/scan.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

#include "kitaev/interference.hpp"
#include "kitaev/majorana.hpp"
#include "kitaev/parallel.hpp"
#include "kitaev/spin_ed.hpp"

namespace kitaev {

namespace {

constexpr std::pair<Mode, const char*> kModeNames[] = {
    {Mode::PhaseDiagram, "phase-diagram"}, {Mode::GapSurface, "gap-surface"},
    {Mode::SectorSpectrum, "sector-spectrum"}, {Mode::EdGap, "ed-gap"},
    {Mode::TwoVortex, "two-vortex"}, {Mode::Interference, "interference"}};

QuadratureGrid grid_of(const ScanConfig& c) {
  QuadratureGrid g{c.quad, c.quad, c.quad_rule};
  g.validate();
  return g;
}

LatticeSpec spec_of(const LatticeSize& l) { return LatticeSpec(l.n1, l.n2, l.twist); }

json num(double v) { return std::isfinite(v) ? json(round12(v)) : json(nullptr); }

bool is_table(Mode m) { return m != Mode::SectorSpectrum && m != Mode::Interference; }

int vortex_count(const SectorClassification& s) {
  if (!s.definite) return -1;
  return static_cast<int>(std::count(s.fluxes.begin(), s.fluxes.end(), -1));
}

std::vector<std::pair<double, double>> surface_grid(const ScanConfig& c) {
  if (c.surface_points < 2) throw std::invalid_argument("surface needs at least 2 points per axis");
  std::vector<std::pair<double, double>> pts;
  const double h = 1.0 / (c.surface_points - 1);
  for (int i = 0; i < c.surface_points; ++i)
    for (int k = 0; k < c.surface_points; ++k) pts.emplace_back(i * h, k * h);
  return pts;
}

struct AnalyticGaps {
  double vf_gap;
  double anyon_gap;
};

std::vector<AnalyticGaps> analytic_surface(const ScanConfig& c, const std::vector<std::pair<double, double>>& pts) {
  const QuadratureGrid g = grid_of(c);
  std::vector<AnalyticGaps> out(pts.size());
  const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const Couplings j{pts[i].first, pts[i].second, c.couplings.jz};
    out[i] = {vf_gap(j, g), anyon_pair_gap(j, g)};
  }
  return out;
}

std::vector<std::string> ed_columns() {
  return {"e0", "e1", "gap", "ground_degeneracy", "ground_vortex_free", "excited_vortices", "analytic_bound", "slack"};
}

std::vector<json> ed_cells(const EdGap& e, double bound) {
  return {num(e.e0), num(e.e1), num(e.gap), e.ground_degeneracy, e.ground_vortex_free, vortex_count(e.excited),
          num(bound), num(e.gap - bound)};
}

EdGap checked_ed_gap(const LatticeSpec& spec, const Couplings& j) {
  const EdGap e = ed_gap(spec, j);
  if (!e.converged) throw std::runtime_error("spin ED did not converge at jx=" + format_double(j.jx) +
                                             " jy=" + format_double(j.jy));
  return e;
}

GaugeConfig gauge_of(const ScanConfig& c, const LatticeSpec& spec) {
  if (c.gauge == "vortex-free") return vortex_free_gauge(spec);
  if (c.gauge == "vortex-lattice") return vortex_lattice_gauge(spec);
  if (c.gauge != "flips") throw std::invalid_argument("gauge must be vortex-free, vortex-lattice or flips");
  GaugeConfig g = vortex_free_gauge(spec);
  static const std::regex re(R"(\s*([xyzXYZ])\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
  for (const auto& f : c.flips) {
    std::smatch m;
    if (!std::regex_match(f, m, re)) throw std::invalid_argument("bad link reference '" + f + "' (want kind:x,y)");
    const LinkRef l{{std::stoi(m[2]), std::stoi(m[3])}, kind_from_char(m[1].str()[0])};
    g = flip_link(g, l);
  }
  return g;
}

}  // namespace

std::string to_string(Mode m) {
  for (const auto& [mode, name] : kModeNames)
    if (mode == m) return name;
  throw std::logic_error("unknown mode");
}

Mode mode_from_string(const std::string& s) {
  for (const auto& [mode, name] : kModeNames)
    if (s == name) return mode;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

LatticeSize parse_lattice(const std::string& s) {
  static const std::regex re(R"((\d+)x(\d+)(?:t(\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("lattice must look like 2x4 or 2x4t1");
  LatticeSize l{std::stoi(m[1]), std::stoi(m[2]), m[3].matched ? std::stoi(m[3]) : 0};
  LatticeSpec(l.n1, l.n2, l.twist);  // validates
  return l;
}

std::string to_string(const LatticeSize& l) {
  std::string s = std::to_string(l.n1) + "x" + std::to_string(l.n2);
  if (l.twist != 0) s += "t" + std::to_string(l.twist);
  return s;
}

ScanConfig default_config(Mode m) {
  ScanConfig c;
  c.mode = m;
  switch (m) {
    case Mode::PhaseDiagram:
      break;
    case Mode::GapSurface:
    case Mode::EdGap:
      c.couplings = {0.5, 0.5, 1.0};
      c.lattice = kEdLattice;
      break;
    case Mode::SectorSpectrum:
      c.lattice = {8, 8, 0};
      break;
    case Mode::TwoVortex:
      c.couplings = {0.05, 0.05, 1.0};
      c.sizes = {{4, 4, 0}, {6, 6, 0}, {8, 8, 0}};
      c.lattice = {8, 8, 0};
      break;
    case Mode::Interference:
      break;
  }
  return c;
}

json to_json(const ScanConfig& c) {
  json sizes = json::array();
  for (const auto& l : c.sizes) sizes.push_back(to_string(l));
  return {{"mode", to_string(c.mode)},
          // Unrounded so the header parses back to the same config.
          {"couplings", {{"jx", c.couplings.jx}, {"jy", c.couplings.jy}, {"jz", c.couplings.jz}}},
          {"simplex_resolution", c.simplex_resolution},
          {"surface_points", c.surface_points},
          {"with_ed", c.with_ed},
          {"lattice", to_string(c.lattice)},
          {"sizes", sizes},
          {"quad", c.quad},
          {"quad_rule", c.quad_rule == QuadratureRule::Midpoint ? "midpoint" : "trapezoid"},
          {"gauge", c.gauge},
          {"flips", c.flips},
          {"vortex_link", std::string(1, to_char(c.vortex_link))},
          {"loop", c.loop},
          {"threads", c.threads},
          {"format", c.format},
          {"out", c.out}};
}

ScanConfig scan_config_from_json(const json& j) {
  ScanConfig c = default_config(mode_from_string(j.at("mode").get<std::string>()));
  if (j.contains("couplings")) c.couplings = couplings_from_json(j.at("couplings"));
  c.simplex_resolution = j.value("simplex_resolution", c.simplex_resolution);
  c.surface_points = j.value("surface_points", c.surface_points);
  c.with_ed = j.value("with_ed", c.with_ed);
  if (j.contains("lattice")) c.lattice = parse_lattice(j.at("lattice").get<std::string>());
  if (j.contains("sizes")) {
    c.sizes.clear();
    for (const auto& s : j.at("sizes")) c.sizes.push_back(parse_lattice(s.get<std::string>()));
  }
  c.quad = j.value("quad", c.quad);
  if (j.contains("quad_rule")) {
    const std::string r = j.at("quad_rule").get<std::string>();
    if (r != "midpoint" && r != "trapezoid") throw std::invalid_argument("quad_rule must be midpoint or trapezoid");
    c.quad_rule = r == "midpoint" ? QuadratureRule::Midpoint : QuadratureRule::Trapezoid;
  }
  c.gauge = j.value("gauge", c.gauge);
  if (j.contains("flips")) c.flips = j.at("flips").get<std::vector<std::string>>();
  if (j.contains("vortex_link")) {
    const std::string k = j.at("vortex_link").get<std::string>();
    if (k.size() != 1) throw std::invalid_argument("vortex_link must be x, y or z");
    c.vortex_link = kind_from_char(k[0]);
  }
  c.loop = j.value("loop", c.loop);
  c.threads = j.value("threads", c.threads);
  c.format = j.value("format", c.format);
  c.out = j.value("out", c.out);
  return c;
}

void write_table(std::ostream& out, const ScanConfig& cfg, const Table& t) {
  if (cfg.format == "json") {
    out << json{{"config", to_json(cfg)}, {"columns", t.columns}, {"rows", t.rows}}.dump(2) << '\n';
    return;
  }
  CsvWriter w(out, to_json(cfg), t.columns);
  for (const auto& row : t.rows) {
    for (const auto& v : row) {
      if (v.is_boolean()) w.cell(v.get<bool>());
      else if (v.is_number_integer()) w.cell(v.get<long long>());
      else if (v.is_number()) w.cell(v.get<double>());
      else if (v.is_null()) w.cell(std::string("nan"));
      else w.cell(v.get<std::string>());
    }
    w.end_row();
  }
}

Table phase_diagram_table(const ScanConfig& cfg) {
  const int r = cfg.simplex_resolution;
  if (r < 10) throw std::invalid_argument("simplex resolution must be at least 10");
  const QuadratureGrid g = grid_of(cfg);
  std::vector<Couplings> pts;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b) pts.push_back({double(a) / r, double(b) / r, double(r - a - b) / r});

  Table t;
  t.columns = {"jx", "jy", "jz", "vf_gap", "vl_gap", "vf_energy_density", "vl_energy_density",
               "anyon_pair_gap", "vf_gapless", "vl_gapless"};
  t.rows.resize(pts.size());
  const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const Couplings& j = pts[i];
    const double ef = vf_ground_energy_density(j, g);
    const double el = vl_ground_energy_density(j, g);
    t.rows[i] = {num(j.jx), num(j.jy), num(j.jz), num(vf_gap(j, g)), num(vl_gap(j, g)), num(ef), num(el),
                 num(2.0 * (el - ef)), vf_is_gapless(j), vl_is_gapless(j)};
  }
  return t;
}

Table gap_surface_table(const ScanConfig& cfg) {
  const auto pts = surface_grid(cfg);
  const auto gaps = analytic_surface(cfg, pts);
  Table t;
  t.columns = {"jx", "jy", "jz", "vf_gap", "anyon_pair_gap", "first_excitation"};
  std::optional<LatticeSpec> spec;
  if (cfg.with_ed) {
    spec = spec_of(cfg.lattice);
    if (spec->num_sites() > kMaxEdSpins) throw std::invalid_argument("ED requested above the 20-spin guard");
    for (auto& c : ed_columns()) t.columns.push_back(c);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Couplings j{pts[i].first, pts[i].second, cfg.couplings.jz};
    const auto& a = gaps[i];
    std::vector<json> row = {num(j.jx), num(j.jy), num(j.jz), num(a.vf_gap), num(a.anyon_gap),
                             a.anyon_gap <= a.vf_gap ? "anyon" : "fermion"};
    if (spec) {
      for (auto& c : ed_cells(checked_ed_gap(*spec, j), std::min(a.anyon_gap, a.vf_gap))) row.push_back(c);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table ed_gap_table(const ScanConfig& cfg) {
  const LatticeSpec spec = spec_of(cfg.lattice);
  if (spec.num_sites() > kMaxEdSpins) throw std::invalid_argument("ED requested above the 20-spin guard");
  const auto pts = surface_grid(cfg);
  const auto gaps = analytic_surface(cfg, pts);
  Table t;
  t.columns = {"jx", "jy", "jz"};
  for (auto& c : ed_columns()) t.columns.push_back(c);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Couplings j{pts[i].first, pts[i].second, cfg.couplings.jz};
    std::vector<json> row = {num(j.jx), num(j.jy), num(j.jz)};
    for (auto& c : ed_cells(checked_ed_gap(spec, j), std::min(gaps[i].anyon_gap, gaps[i].vf_gap))) row.push_back(c);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table two_vortex_table(const ScanConfig& cfg) {
  const double apg = anyon_pair_gap(cfg.couplings, grid_of(cfg));
  Table t;
  t.columns = {"lattice", "vortex_link", "two_vortex_gap", "anyon_pair_gap", "relative_discrepancy"};
  const std::vector<LatticeSize> sizes = cfg.sizes.empty() ? std::vector<LatticeSize>{cfg.lattice} : cfg.sizes;
  for (const auto& l : sizes) {
    const double tv = two_vortex_gap(spec_of(l), cfg.couplings, cfg.vortex_link);
    t.rows.push_back({to_string(l), std::string(1, to_char(cfg.vortex_link)), num(tv), num(apg),
                      num(std::abs(tv - apg) / apg)});
  }
  return t;
}

json sector_spectrum_report(const ScanConfig& cfg) {
  const LatticeSpec spec = spec_of(cfg.lattice);
  const GaugeConfig g = gauge_of(cfg, spec);
  const SpectrumResult r = sector_spectrum(spec, g, cfg.couplings);
  return {{"config", to_json(cfg)},
          {"gauge", to_json(g)},
          {"spectrum", to_json(r)},
          {"ground_energy_density", num(r.ground_energy / spec.num_plaquettes())}};
}

json interference_report(const ScanConfig& cfg) {
  const HexagonModel m = build_hexagon(cfg.couplings);
  const InterferenceResult r =
      run_interference(m, cfg.loop ? std::nullopt : std::optional<PauliString>(PauliString::identity()));
  json report = to_json(r);
  report["ground_in_plus_sector"] = r.ground_in_plus_sector;
  report["norm_defect"] = num(r.norm_defect);
  return {{"config", to_json(cfg)}, {"report", report}};
}

void run(const ScanConfig& cfg, std::ostream& out) {
  if (cfg.format != "auto" && cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (!is_table(cfg.mode) && cfg.format == "csv")
    throw std::invalid_argument(to_string(cfg.mode) + " writes a JSON report");
  cfg.couplings.validate();
  set_num_threads(cfg.threads);
  switch (cfg.mode) {
    case Mode::PhaseDiagram: write_table(out, cfg, phase_diagram_table(cfg)); break;
    case Mode::GapSurface: write_table(out, cfg, gap_surface_table(cfg)); break;
    case Mode::EdGap: write_table(out, cfg, ed_gap_table(cfg)); break;
    case Mode::TwoVortex: write_table(out, cfg, two_vortex_table(cfg)); break;
    case Mode::SectorSpectrum: out << sector_spectrum_report(cfg).dump(2) << '\n'; break;
    case Mode::Interference: out << interference_report(cfg).dump(2) << '\n'; break;
  }
}

}  // namespace kitaev
