#pragma once

// Scan drivers behind the command-line subcommands. Each command writes one
// CSV table or JSON report whose header embeds the full configuration.

#include <ostream>
#include <string>
#include <vector>

#include "kitaev/analytic.hpp"
#include "kitaev/couplings.hpp"
#include "kitaev/io.hpp"
#include "kitaev/lattice.hpp"

namespace kitaev {

enum class Mode { PhaseDiagram, GapSurface, SectorSpectrum, EdGap, TwoVortex, Interference };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct LatticeSize {
  int n1 = 2;
  int n2 = 4;
  int twist = 0;
  friend bool operator==(const LatticeSize&, const LatticeSize&) = default;
};

// Default 16-spin ED torus. Its ground level mixes flux sectors inside the
// J_z = 1 square; the twisted 8x1t1 torus (a rectangular sqrt(3) x 4 cluster)
// has a flux-free ground state there.
inline constexpr LatticeSize kEdLattice{2, 4, 0};

// "n1xn2" or "n1xn2t<twist>"
LatticeSize parse_lattice(const std::string& s);
std::string to_string(const LatticeSize& l);

struct ScanConfig {
  Mode mode = Mode::PhaseDiagram;
  Couplings couplings{1.0, 1.0, 1.0};
  int simplex_resolution = 50;
  int surface_points = 9;  // per axis over (J_x, J_y) in [0, 1]^2 at the given J_z
  bool with_ed = false;    // gap-surface: add the spin-ED columns
  LatticeSize lattice;
  std::vector<LatticeSize> sizes;  // two-vortex
  int quad = 128;
  QuadratureRule quad_rule = QuadratureRule::Midpoint;
  std::string gauge = "vortex-free";  // vortex-free | vortex-lattice | flips
  std::vector<std::string> flips;     // "<kind>:<x>,<y>"
  LinkKind vortex_link = LinkKind::Z;
  bool loop = true;  // interference: false replaces S by the identity
  int threads = 0;
  std::string format = "auto";  // auto | csv | json
  std::string out;              // empty: stdout

  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

// Defaults that depend on the mode (lattice sizes, J_z normalization).
ScanConfig default_config(Mode m);

json to_json(const ScanConfig& c);
ScanConfig scan_config_from_json(const json& j);

// A table of already rounded values, emitted as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

void write_table(std::ostream& out, const ScanConfig& cfg, const Table& t);

Table phase_diagram_table(const ScanConfig& cfg);
Table gap_surface_table(const ScanConfig& cfg);
Table ed_gap_table(const ScanConfig& cfg);
Table two_vortex_table(const ScanConfig& cfg);
json sector_spectrum_report(const ScanConfig& cfg);
json interference_report(const ScanConfig& cfg);

// Runs the configured command and writes its output.
void run(const ScanConfig& cfg, std::ostream& out);

}  // namespace kitaev
