#include <sstream>

#include <gtest/gtest.h>

#include "kitaev/scan.hpp"

using namespace kitaev;

namespace {

ScanConfig small_phase_diagram() {
  ScanConfig c = default_config(Mode::PhaseDiagram);
  c.simplex_resolution = 10;
  c.quad = 16;
  return c;
}

std::string render(const ScanConfig& c) {
  std::ostringstream out;
  run(c, out);
  return out.str();
}

}  // namespace

TEST(lattice_size, parse) {
  EXPECT_EQ(parse_lattice("2x4"), (LatticeSize{2, 4, 0}));
  EXPECT_EQ(parse_lattice("2x4t1"), (LatticeSize{2, 4, 1}));
  EXPECT_EQ(parse_lattice("12x8"), (LatticeSize{12, 8, 0}));
  EXPECT_EQ(to_string(LatticeSize{2, 4, 1}), "2x4t1");
  EXPECT_EQ(to_string(LatticeSize{6, 6, 0}), "6x6");
  for (const char* bad : {"", "2", "2x", "x4", "2x4t", "0x4", "2y4", "2x4t1x"})
    EXPECT_THROW(parse_lattice(bad), std::invalid_argument) << bad;
}

TEST(modes, names_round_trip) {
  for (Mode m : {Mode::PhaseDiagram, Mode::GapSurface, Mode::SectorSpectrum, Mode::EdGap, Mode::TwoVortex,
                 Mode::Interference})
    EXPECT_EQ(mode_from_string(to_string(m)), m);
  EXPECT_THROW(mode_from_string("nope"), std::invalid_argument);
}

TEST(config, json_round_trip) {
  for (Mode m : {Mode::PhaseDiagram, Mode::GapSurface, Mode::SectorSpectrum, Mode::EdGap, Mode::TwoVortex,
                 Mode::Interference}) {
    ScanConfig c = default_config(m);
    c.couplings = {0.1234567890123, 0.3, 0.7};
    c.flips = {"z:1,2"};
    c.quad_rule = QuadratureRule::Trapezoid;
    EXPECT_EQ(scan_config_from_json(to_json(c)), c) << to_string(m);
  }
}

TEST(config, csv_header_parses_back) {
  const ScanConfig c = small_phase_diagram();
  std::istringstream in(render(c));
  EXPECT_EQ(scan_config_from_json(read_csv_config(in)), c);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("jx,jy,jz,", 0), 0u);
}

TEST(output, reruns_are_byte_identical) {
  const ScanConfig c = small_phase_diagram();
  EXPECT_EQ(render(c), render(c));
  ScanConfig s = default_config(Mode::SectorSpectrum);
  s.lattice = {4, 4, 0};
  EXPECT_EQ(render(s), render(s));
}

TEST(output, independent_of_thread_count) {
  ScanConfig one = small_phase_diagram(), many = small_phase_diagram();
  one.threads = 1;
  many.threads = 4;
  std::string a = render(one), b = render(many);
  // the config line records the thread count; everything after it must agree
  EXPECT_EQ(a.substr(a.find('\n')), b.substr(b.find('\n')));
}

TEST(output, phase_diagram_rows) {
  const ScanConfig c = small_phase_diagram();
  const Table t = phase_diagram_table(c);
  // points of the simplex J_x + J_y + J_z = 1 at resolution 10
  EXPECT_EQ(t.rows.size(), 66u);
  for (const auto& row : t.rows) EXPECT_EQ(row.size(), t.columns.size());
}

TEST(output, sector_spectrum_flips) {
  ScanConfig c = default_config(Mode::SectorSpectrum);
  c.lattice = {4, 4, 0};
  c.gauge = "flips";
  c.flips = {"z:0,0"};
  const json r = sector_spectrum_report(c);
  int minus = 0;
  for (const auto& f : r.at("spectrum").at("fluxes")) minus += f.get<int>() == -1;
  EXPECT_EQ(minus, 2);
  c.flips = {"w:0,0"};
  EXPECT_THROW(sector_spectrum_report(c), std::invalid_argument);
  c.flips = {"z:0"};
  EXPECT_THROW(sector_spectrum_report(c), std::invalid_argument);
}

TEST(output, format_checks) {
  ScanConfig c = default_config(Mode::Interference);
  c.format = "csv";
  EXPECT_THROW(render(c), std::invalid_argument);
  c.format = "xml";
  EXPECT_THROW(render(c), std::invalid_argument);
  c.format = "json";
  EXPECT_NO_THROW(json::parse(render(c)));
  ScanConfig bad = small_phase_diagram();
  bad.couplings = {-1, 0, 0};
  EXPECT_THROW(render(bad), std::invalid_argument);
}
