// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kitaev/analytic.hpp"
#include "kitaev/interference.hpp"
#include "kitaev/majorana.hpp"
#include "kitaev/scan.hpp"
#include "kitaev/spin_ed.hpp"

using namespace kitaev;

namespace {

bool g_all_geometries = false;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<Couplings> random_triples(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.5);
  std::vector<Couplings> out;
  for (int i = 0; i < n; ++i) out.push_back({u(rng), u(rng), u(rng)});
  return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Points of the simplex J_x + J_y + J_z = 1 at resolution r, indexed (a, b).
std::vector<std::pair<int, int>> simplex(int r) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b) pts.push_back({a, b});
  return pts;
}

Couplings simplex_point(int a, int b, int r) { return {double(a) / r, double(b) / r, double(r - a - b) / r}; }

Outcome dimer_anchor() {
  const Couplings j{0, 0, 1};
  const QuadratureGrid g;
  double worst = std::max(std::abs(vf_ground_energy_density(j, g) + 1), std::abs(vl_ground_energy_density(j, g) + 1));
  for (auto [n1, n2, t] : std::vector<std::array<int, 3>>{{1, 1, 0}, {2, 2, 0}, {3, 3, 0}, {2, 4, 0}, {2, 4, 1},
                                                          {4, 2, 0}, {6, 6, 0}, {8, 8, 0}, {5, 7, 0}}) {
    const LatticeSpec s(n1, n2, t);
    worst = std::max(worst, std::abs(sector_spectrum(s, vortex_free_gauge(s), j).ground_energy + s.num_plaquettes()));
    if (n1 % 2 == 0 && t % 2 == 0)
      worst = std::max(worst,
                       std::abs(sector_spectrum(s, vortex_lattice_gauge(s), j).ground_energy + s.num_plaquettes()));
  }
  return {worst < 1e-12, fmt("max deviation %.3g", worst)};
}

Outcome fourier_equivalence() {
  const LatticeSpec s(6, 6);
  double worst = 0.0;
  for (const Couplings& j : random_triples(20, 1))
    worst = std::max(worst, max_diff(sector_spectrum(s, vortex_free_gauge(s), j).mode_energies,
                                     vf_discrete_spectrum(s, j)));
  return {worst < 1e-9, fmt("max deviation %.3g over 20 triples", worst)};
}

Outcome vortex_lattice_equivalence() {
  const LatticeSpec s(8, 8);
  double worst = 0.0;
  int singular = 0;
  std::vector<Couplings> js = random_triples(10, 2);
  js.push_back({1, 1, 1});
  js.push_back({0.3, 0.3, 1});
  for (const Couplings& j : js) {
    worst = std::max(worst, max_diff(sector_spectrum(s, vortex_lattice_gauge(s), j).mode_energies,
                                     vl_discrete_spectrum(s, j)));
    for (const Momentum& p : allowed_momenta(s))
      if (!vl_bands_closed_form(p, j)) ++singular;
  }
  return {worst < 1e-9 && singular > 0,
          fmt("max deviation %.3g", worst) + ", " + std::to_string(singular) + " momenta via the 4x4 fallback"};
}

Outcome phase_boundaries() {
  const int r = 50;
  const QuadratureGrid g;
  const auto pts = simplex(r);
  const auto n = static_cast<std::int64_t>(pts.size());
  std::vector<char> pred_f(pts.size()), pred_l(pts.size()), num_f(pts.size()), num_l(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const Couplings j = simplex_point(pts[i].first, pts[i].second, r);
    pred_f[i] = vf_is_gapless(j);
    pred_l[i] = vl_is_gapless(j);
    num_f[i] = vf_gap(j, g) < 1e-4;
    num_l[i] = vl_gap(j, g) < 1e-4;
  }
  auto index = [&](int a, int b) -> std::int64_t {
    if (a < 0 || b < 0 || a + b > r) return -1;
    return std::find(pts.begin(), pts.end(), std::make_pair(a, b)) - pts.begin();
  };
  // a disagreement is allowed only next to a predicate boundary
  auto near_boundary = [&](const std::vector<char>& pred, int a, int b) {
    const int da[] = {1, -1, 0, 0, 1, -1}, db[] = {0, 0, 1, -1, -1, 1};
    for (int k = 0; k < 6; ++k) {
      const auto m = index(a + da[k], b + db[k]);
      if (m >= 0 && pred[m] != pred[index(a, b)]) return true;
    }
    return false;
  };
  int dis_f = 0, dis_l = 0, far = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [a, b] = pts[i];
    if (pred_f[i] != num_f[i]) {
      ++dis_f;
      far += !near_boundary(pred_f, a, b);
    }
    if (pred_l[i] != num_l[i]) {
      ++dis_l;
      far += !near_boundary(pred_l, a, b);
    }
  }
  return {far == 0, std::to_string(pts.size()) + " points, disagreements vf " + std::to_string(dis_f) + ", vl " +
                        std::to_string(dis_l) + ", away from a boundary " + std::to_string(far)};
}

Outcome lieb_inequality() {
  const int r = 50;
  const QuadratureGrid g;
  const auto pts = simplex(r);
  const auto n = static_cast<std::int64_t>(pts.size());
  std::vector<double> diff(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const Couplings j = simplex_point(pts[i].first, pts[i].second, r);
    diff[i] = vl_ground_energy_density(j, g) - vf_ground_energy_density(j, g);
  }
  double min_interior = INFINITY, max_edge = 0.0, most_negative = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [a, b] = pts[i];
    const bool edge = a == 0 || b == 0 || a + b == r;
    most_negative = std::min(most_negative, diff[i]);
    if (edge)
      max_edge = std::max(max_edge, std::abs(diff[i]));
    else
      min_interior = std::min(min_interior, diff[i]);
  }
  return {most_negative >= -1e-12 && max_edge < 1e-9,
          fmt("min interior vl - vf %.3g", min_interior) + fmt(", max edge |vl - vf| %.3g", max_edge)};
}

Outcome two_vortex_identity() {
  double worst = 0.0;
  for (const LatticeSpec& s : {LatticeSpec(2, 2), LatticeSpec(2, 4), LatticeSpec(2, 4, 1)})
    for (const Couplings& j : random_triples(5, 3))
      for (int site = 0; site < s.num_sites(); ++site) worst = std::max(worst, two_vortex_identity_check(s, j, site));
  return {worst < 1e-12, fmt("max residual %.3g", worst)};
}

struct EdSummary {
  bool pass = true;
  double worst_slack = -INFINITY;
  int interior_flux_free = 0;
  int interior = 0;
  bool converged = true;
};

EdSummary ed_scan(const LatticeSpec& s) {
  const QuadratureGrid g;
  EdSummary out;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const Couplings j{a / 8.0, b / 8.0, 1.0};
      const EdGap e = ed_gap(s, j);
      const double bound = std::min(anyon_pair_gap(j, g), vf_gap(j, g));
      const double slack = e.gap - bound;
      out.worst_slack = std::max(out.worst_slack, slack);
      out.converged = out.converged && e.converged;
      out.pass = out.pass && e.converged && slack <= 0.15;
      if (a > 0 && a < 8 && b > 0 && b < 8) {
        ++out.interior;
        const bool ok = e.ground_vortex_free;
        out.interior_flux_free += ok;
        out.pass = out.pass && ok;
      }
      std::printf("    %s jx=%.3f jy=%.3f gap=%.6f bound=%.6f slack=%+.6f deg=%d ground=%s%s\n",
                  to_string(LatticeSize{s.n1(), s.n2(), s.twist()}).c_str(), j.jx, j.jy, e.gap, bound, slack, e.ground_degeneracy,
                  e.ground_vortex_free ? "flux-free" : "not flux-free", e.converged ? "" : " not-converged");
      std::fflush(stdout);
    }
  return out;
}

Outcome sixteen_spin_ed() {
  const LatticeSpec s(kEdLattice.n1, kEdLattice.n2, kEdLattice.twist);
  auto describe = [](const LatticeSize& l, const EdSummary& r) {
    return to_string(l) + fmt(": worst slack %+.4f", r.worst_slack) + ", flux-free ground " +
           std::to_string(r.interior_flux_free) + "/" + std::to_string(r.interior) +
           (r.converged ? "" : ", not converged");
  };
  const EdSummary r = ed_scan(s);
  std::string detail = describe(kEdLattice, r);
  // the other 16-spin geometries are reported, not gated
  if (g_all_geometries)
    for (const LatticeSize& l : {LatticeSize{4, 2, 0}, LatticeSize{8, 1, 1}}) {
      const EdSummary other = ed_scan(LatticeSpec(l.n1, l.n2, l.twist));
      detail += "; " + describe(l, other) + (other.pass ? "" : " [would fail]");
    }
  return {r.pass, detail};
}

Outcome interference() {
  double worst = 0.0;
  for (const Couplings& j : {Couplings{1, 1, 1}, Couplings{0.3, 0.7, 1.0}, Couplings{0.2, 0.1, 2.0}}) {
    const HexagonModel m = build_hexagon(j);
    const InterferenceResult r = run_interference(m);
    const HexagonStates st = ground_and_vortex(m);
    worst = std::max({worst, std::abs(r.fidelity_v - 1), std::abs(r.s_expectation_v + 1),
                      (run_loop(m, st.gs) - st.gs).norm()});
  }
  return {worst < 1e-12, fmt("max deviation %.3g", worst)};
}

Outcome statistics() {
  const LatticeSpec s(4, 4);
  const double crossing = string_statistics_check(s, 1);
  const double apart = string_statistics_check(s, 0);
  return {crossing == -1.0 && apart == 1.0, fmt("crossing %+g", crossing) + fmt(", non-crossing %+g", apart)};
}

Outcome cross_estimator() {
  const Couplings j{0.05, 0.05, 1.0};
  const double apg = anyon_pair_gap(j, QuadratureGrid{256, 256});
  std::vector<double> rel;
  std::string detail = fmt("anyon pair gap %.6g;", apg);
  for (int n : {4, 6, 8}) {
    const double tv = two_vortex_gap(LatticeSpec(n, n), j);
    rel.push_back(std::abs(tv - apg) / apg);
    detail += " " + std::to_string(n) + "x" + std::to_string(n) + fmt(" %.4f", rel.back());
  }
  return {rel[2] < 0.1 && rel[0] > rel[1] && rel[1] > rel[2], detail};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--all-geometries") g_all_geometries = true;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dimer anchor", dimer_anchor},
      {"discrete Fourier equivalence", fourier_equivalence},
      {"vortex-lattice equivalence", vortex_lattice_equivalence},
      {"phase-diagram boundaries", phase_boundaries},
      {"flux-free sector minimizes the energy", lieb_inequality},
      {"two-vortex rotation identity", two_vortex_identity},
      {"16-spin ED gap below the analytic gaps", sixteen_spin_ed},
      {"interference protocol", interference},
      {"string statistics", statistics},
      {"two-vortex gap vs anyon pair gap", cross_estimator},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
