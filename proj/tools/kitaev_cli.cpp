#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "kitaev/scan.hpp"

namespace {

struct Flags {
  double jx = 0, jy = 0, jz = 0;
  int simplex_res = 0, points = 0, quad = 0, threads = 0;
  bool ed = false, no_loop = false;
  std::string lattice, sizes, quad_rule, gauge, link, out, format, config;
  std::vector<std::string> flips;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--jx", f.jx, "J_x coupling");
  sub->add_option("--jy", f.jy, "J_y coupling");
  sub->add_option("--jz", f.jz, "J_z coupling");
  sub->add_option("--lattice", f.lattice, "lattice n1xn2, optionally with twist: 2x4t1");
  sub->add_option("--quad", f.quad, "Brillouin-zone points per axis (multiple of 4)");
  sub->add_option("--quad-rule", f.quad_rule, "midpoint or trapezoid");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--threads", f.threads, "OpenMP threads");
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--config", f.config, "JSON config file; explicit flags override it");
}

kitaev::ScanConfig resolve(kitaev::Mode mode, CLI::App* sub, const Flags& f) {
  using namespace kitaev;
  ScanConfig c = default_config(mode);
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw std::runtime_error("cannot read config " + f.config);
    json j = json::parse(in);
    j["mode"] = to_string(mode);
    c = scan_config_from_json(j);
  }
  auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
  if (given("--jx")) c.couplings.jx = f.jx;
  if (given("--jy")) c.couplings.jy = f.jy;
  if (given("--jz")) c.couplings.jz = f.jz;
  if (given("--simplex-res")) c.simplex_resolution = f.simplex_res;
  if (given("--points")) c.surface_points = f.points;
  if (given("--ed")) c.with_ed = f.ed;
  if (given("--lattice")) c.lattice = parse_lattice(f.lattice);
  if (given("--sizes")) {
    c.sizes.clear();
    std::stringstream ss(f.sizes);
    for (std::string item; std::getline(ss, item, ',');) c.sizes.push_back(parse_lattice(item));
  } else if (mode == Mode::TwoVortex && given("--lattice")) {
    c.sizes.clear();
  }
  if (given("--quad")) c.quad = f.quad;
  if (given("--quad-rule")) {
    if (f.quad_rule != "midpoint" && f.quad_rule != "trapezoid")
      throw std::invalid_argument("--quad-rule must be midpoint or trapezoid");
    c.quad_rule = f.quad_rule == "midpoint" ? QuadratureRule::Midpoint : QuadratureRule::Trapezoid;
  }
  if (given("--gauge")) c.gauge = f.gauge;
  if (given("--flip")) {
    c.flips = f.flips;
    if (!given("--gauge")) c.gauge = "flips";
  }
  if (given("--link")) {
    if (f.link.size() != 1) throw std::invalid_argument("--link must be x, y or z");
    c.vortex_link = kind_from_char(f.link[0]);
  }
  if (given("--no-loop")) c.loop = false;
  if (given("--threads")) c.threads = f.threads;
  if (given("--format")) c.format = f.format;
  if (given("--out")) c.out = f.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kitaev;
  CLI::App app{"Honeycomb spin-model solvers: band structure, vortex sectors, spin ED, hexagon interference"};
  app.require_subcommand(1);
  Flags f;

  std::vector<std::pair<Mode, CLI::App*>> subs;
  auto sub = [&](Mode m, const char* help) {
    CLI::App* s = app.add_subcommand(to_string(m), help);
    add_common(s, f);
    subs.emplace_back(m, s);
    return s;
  };
  sub(Mode::PhaseDiagram, "gapped/gapless phases over J_x + J_y + J_z = 1")
      ->add_option("--simplex-res", f.simplex_res, "simplex subdivisions (>= 10)");
  auto* gs = sub(Mode::GapSurface, "anyon-pair and fermion gaps over (J_x, J_y) in [0,1]^2");
  gs->add_option("--points", f.points, "grid points per axis");
  gs->add_flag("--ed", f.ed, "add spin-ED gap columns");
  sub(Mode::SectorSpectrum, "free-fermion spectrum of one gauge sector")
      ->add_option("--gauge", f.gauge, "vortex-free, vortex-lattice or flips");
  subs.back().second->add_option("--flip", f.flips, "link to flip, kind:x,y (repeatable)");
  sub(Mode::EdGap, "spin-ED gap and flux sectors over (J_x, J_y) in [0,1]^2")
      ->add_option("--points", f.points, "grid points per axis");
  auto* tv = sub(Mode::TwoVortex, "two-vortex gap on finite lattices against the anyon-pair gap");
  tv->add_option("--sizes", f.sizes, "comma-separated lattices, e.g. 4x4,6x6,8x8");
  tv->add_option("--link", f.link, "kind of the flipped link");
  sub(Mode::Interference, "hexagon loop interference protocol")->add_flag("--no-loop", f.no_loop, "skip the loop");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [mode, s] : subs) {
      if (!s->parsed()) continue;
      const ScanConfig cfg = resolve(mode, s, f);
      if (cfg.out.empty()) {
        run(cfg, std::cout);
      } else {
        std::ofstream out(cfg.out);
        if (!out) throw std::runtime_error("cannot write " + cfg.out);
        run(cfg, out);
        if (!out) throw std::runtime_error("write failed: " + cfg.out);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
