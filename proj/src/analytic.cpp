#include "kitaev/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "kitaev/minimize.hpp"

namespace kitaev {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double wrap(double x, double period) {
  // into [-period/2, period/2)
  double r = std::fmod(x + 0.5 * period, period);
  if (r < 0) r += period;
  return r - 0.5 * period;
}

// Row partials summed in row order: the result does not depend on the thread count.
template <class G>
double grid_sum(int nx, int ny, const G& g) {
  std::vector<double> rows(static_cast<std::size_t>(ny), 0.0);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    double s = 0.0;
    for (int i = 0; i < nx; ++i) s += g(i, j);
    rows[static_cast<std::size_t>(j)] = s;
  }
  return std::accumulate(rows.begin(), rows.end(), 0.0);
}

template <class G>
double grid_sum_serial(int nx, int ny, const G& g) {
  double s = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) s += g(i, j);
  return s;
}

// Squared singular values (large, small) of the 2x2 coupled block
// [[M(p), N], [N, M(p~)]]; the small one is formed as det^2 / large so it
// keeps full relative accuracy near band touchings.
std::pair<double, double> vl_band_squares(Momentum p, const Couplings& j) {
  const cplx m = m_vl(p, j);
  const cplx mt = m_vl({p.px + kPi, p.py}, j);
  const double n = 2.0 * j.jz;
  const double trace = std::norm(m) + std::norm(mt) + 2.0 * n * n;
  const double det = std::norm(m * mt - n * n);
  const double disc = std::max(0.0, trace * trace - 4.0 * det);
  const double large = 0.5 * (trace + std::sqrt(disc));
  const double small = large > 0.0 ? det / large : 0.0;
  return {large, small};
}

struct Seeded {
  double x;
  double y;
  double value;
};

// Discrete local minima of a periodic objective sampled on nx x ny points,
// lowest first.
template <class X, class Y, class F>
std::vector<Seeded> grid_local_minima(int nx, int ny, const X& xs, const Y& ys, const F& obj,
                                      std::size_t max_seeds) {
  std::vector<double> v(static_cast<std::size_t>(nx) * ny);
#pragma omp parallel for schedule(static)
  for (int jj = 0; jj < ny; ++jj)
    for (int i = 0; i < nx; ++i) v[static_cast<std::size_t>(jj) * nx + i] = obj(xs(i), ys(jj));
  auto at = [&](int i, int jj) {
    i = (i % nx + nx) % nx;
    jj = (jj % ny + ny) % ny;
    return v[static_cast<std::size_t>(jj) * nx + i];
  };
  std::vector<Seeded> seeds;
  for (int jj = 0; jj < ny; ++jj) {
    for (int i = 0; i < nx; ++i) {
      const double c = at(i, jj);
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          if (at(i + di, jj + dj) < c) {
            is_min = false;
            break;
          }
        }
      if (is_min) seeds.push_back({xs(i), ys(jj), c});
    }
  }
  std::stable_sort(seeds.begin(), seeds.end(), [](const Seeded& a, const Seeded& b) { return a.value < b.value; });
  if (seeds.size() > max_seeds) seeds.resize(max_seeds);
  return seeds;
}

template <class F>
std::vector<Seeded> refine(const std::vector<Seeded>& seeds, double step, const F& obj) {
  std::vector<Seeded> out;
  out.reserve(seeds.size());
  const std::function<double(double, double)> fn = [&](double x, double y) { return obj(x, y); };
  for (const auto& s : seeds) {
    const Minimum2d m = nelder_mead_2d(fn, s.x, s.y, step);
    out.push_back(m.value < s.value ? Seeded{m.x, m.y, m.value} : s);
  }
  return out;
}

double vf_objective(double px, double py, const Couplings& j) { return std::norm(f_vf({px, py}, j)); }

double vl_objective(double px, double py, const Couplings& j) { return vl_band_squares({px, py}, j).second; }

constexpr std::size_t kMaxSeeds = 16;

}  // namespace

void QuadratureGrid::validate() const {
  if (mx < 4 || my < 4) throw std::invalid_argument("quadrature grid needs at least 4 points per axis");
  if (mx % 4 != 0 || my % 4 != 0) throw std::invalid_argument("quadrature grid sizes must be multiples of 4");
}

double QuadratureGrid::px(int i) const {
  const double h = 2.0 * kPi / mx;
  return -kPi + (rule == QuadratureRule::Midpoint ? (i + 0.5) * h : i * h);
}

double QuadratureGrid::px_half(int i) const {
  const double h = 2.0 * kPi / mx;
  return -0.5 * kPi + (rule == QuadratureRule::Midpoint ? (i + 0.5) * h : i * h);
}

double QuadratureGrid::py(int j) const {
  const double h = 2.0 * kPi / my;
  return -kPi + (rule == QuadratureRule::Midpoint ? (j + 0.5) * h : j * h);
}

std::complex<double> f_vf(Momentum p, const Couplings& j) {
  return 2.0 * (j.jx * std::polar(1.0, p.px) + j.jy * std::polar(1.0, p.py) + j.jz);
}

bool vf_is_gapless(const Couplings& j) {
  const double x = std::abs(j.jx), y = std::abs(j.jy), z = std::abs(j.jz);
  return x <= y + z && z <= x + y && y <= z + x;
}

double vf_gap(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  auto obj = [&](double x, double y) { return vf_objective(x, y, j); };
  const auto seeds = grid_local_minima(
      grid.mx, grid.my, [&](int i) { return grid.px(i); }, [&](int k) { return grid.py(k); }, obj, kMaxSeeds);
  double best = seeds.empty() ? 0.0 : seeds.front().value;
  for (const auto& s : refine(seeds, 2.0 * kPi / grid.mx, obj)) best = std::min(best, s.value);
  return std::sqrt(std::max(0.0, best));
}

double vf_ground_energy_density(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  const double total = grid_sum(grid.mx, grid.my, [&](int i, int k) { return std::abs(f_vf({grid.px(i), grid.py(k)}, j)); });
  return -0.5 * total / (static_cast<double>(grid.mx) * grid.my);
}

double vf_ground_energy_density_serial(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  const double total =
      grid_sum_serial(grid.mx, grid.my, [&](int i, int k) { return std::abs(f_vf({grid.px(i), grid.py(k)}, j)); });
  return -0.5 * total / (static_cast<double>(grid.mx) * grid.my);
}

std::complex<double> m_vl(Momentum p, const Couplings& j) {
  return 2.0 * j.jx * std::polar(1.0, p.px) + 2.0 * j.jy * std::polar(1.0, p.py);
}

double singularity_threshold(const Couplings& j) { return 1e-8 * j.sum(); }

std::optional<BandPair> vl_bands_closed_form(Momentum p, const Couplings& j) {
  const cplx m = m_vl(p, j);
  const cplx mt = m_vl({p.px + kPi, p.py}, j);
  const double n = 2.0 * j.jz;
  const cplx s = m + std::conj(mt);
  if (std::abs(s) < singularity_threshold(j) || std::abs(s) == 0.0) return std::nullopt;
  const double split = std::norm(m) - std::norm(mt);
  const double delta = split * split + 4.0 * std::norm(s) * n * n;
  const cplx numer = std::norm(m) + std::norm(mt) + 2.0 * m * mt;
  const cplx a = (numer + std::sqrt(delta)) / (2.0 * std::conj(s));
  const cplx b = (numer - std::sqrt(delta)) / (2.0 * s);
  return BandPair{std::abs(a), std::abs(b)};
}

BandPair vl_bands_block(Momentum p, const Couplings& j) {
  const cplx i(0.0, 1.0);
  const cplx n = 2.0 * j.jz;
  Eigen::Matrix2cd k;
  k << m_vl(p, j), n, n, m_vl({p.px + kPi, p.py}, j);
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h.topRightCorner<2, 2>() = i * k;
  h.bottomLeftCorner<2, 2>() = -i * k.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = solver.eigenvalues();
  // ev ascending: -a, -b, b, a
  return {0.5 * (ev(3) - ev(0)), 0.5 * (ev(2) - ev(1))};
}

BandPair vl_bands(Momentum p, const Couplings& j) {
  if (auto closed = vl_bands_closed_form(p, j)) return *closed;
  return vl_bands_block(p, j);
}

bool vl_is_gapless(const Couplings& j) {
  const double x = j.jx * j.jx, y = j.jy * j.jy, z = j.jz * j.jz;
  return x + y >= z && y + z >= x && z + x >= y;
}

double vl_gap(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  auto obj = [&](double x, double y) { return vl_objective(x, y, j); };
  const auto seeds = grid_local_minima(
      grid.mx / 2, grid.my, [&](int i) { return grid.px_half(i); }, [&](int k) { return grid.py(k); }, obj,
      kMaxSeeds);
  double best = seeds.empty() ? 0.0 : seeds.front().value;
  for (const auto& s : refine(seeds, 2.0 * kPi / grid.mx, obj)) best = std::min(best, s.value);
  return std::sqrt(std::max(0.0, best));
}

double vl_ground_energy_density(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  const double total = grid_sum(grid.mx / 2, grid.my, [&](int i, int k) {
    const BandPair b = vl_bands({grid.px_half(i), grid.py(k)}, j);
    return 0.5 * (b.a_abs + b.b_abs);
  });
  return -total / (static_cast<double>(grid.mx) * grid.my);
}

double vl_ground_energy_density_serial(const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  const double total = grid_sum_serial(grid.mx / 2, grid.my, [&](int i, int k) {
    const BandPair b = vl_bands({grid.px_half(i), grid.py(k)}, j);
    return 0.5 * (b.a_abs + b.b_abs);
  });
  return -total / (static_cast<double>(grid.mx) * grid.my);
}

std::vector<Momentum> fermi_points(Sector sector, const Couplings& j, const QuadratureGrid& grid) {
  grid.validate();
  const bool vf = sector == Sector::VortexFree;
  const double zero_tol = 1e-6 * std::max(j.sum(), 1e-300);
  // The vortex-lattice bands repeat under p_x -> p_x + pi and p_y -> p_y + pi.
  const double period_x = vf ? 2.0 * kPi : kPi;
  const double period_y = vf ? 2.0 * kPi : kPi;
  auto obj = [&](double x, double y) { return vf ? vf_objective(x, y, j) : vl_objective(x, y, j); };
  const int nx = vf ? grid.mx : grid.mx / 2;
  auto xs = [&](int i) { return vf ? grid.px(i) : grid.px_half(i); };
  auto ys = [&](int k) { return grid.py(k); };

  std::vector<Momentum> out;
  for (const auto& s : refine(grid_local_minima(nx, grid.my, xs, ys, obj, 4 * kMaxSeeds), 2.0 * kPi / grid.mx, obj)) {
    if (std::sqrt(std::max(0.0, s.value)) > zero_tol) continue;
    const Momentum m{wrap(s.x, period_x), wrap(s.y, period_y)};
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Momentum& q) {
      return std::abs(wrap(q.px - m.px, period_x)) < 1e-4 && std::abs(wrap(q.py - m.py, period_y)) < 1e-4;
    });
    if (!seen) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Momentum& a, const Momentum& b) {
    return a.px != b.px ? a.px < b.px : a.py < b.py;
  });
  return out;
}

double anyon_pair_gap(const Couplings& j, const QuadratureGrid& grid) {
  return 2.0 * (vl_ground_energy_density(j, grid) - vf_ground_energy_density(j, grid));
}

std::vector<Momentum> allowed_momenta(const LatticeSpec& spec) {
  std::vector<Momentum> out;
  out.reserve(static_cast<std::size_t>(spec.num_cells()));
  for (int k1 = 0; k1 < spec.n1(); ++k1) {
    const double px = 2.0 * kPi * k1 / spec.n1();
    for (int k2 = 0; k2 < spec.n2(); ++k2) {
      out.push_back({px, (2.0 * kPi * k2 - px * spec.twist()) / spec.n2()});
    }
  }
  return out;
}

std::vector<double> vf_discrete_spectrum(const LatticeSpec& spec, const Couplings& j) {
  std::vector<double> out;
  for (const Momentum& p : allowed_momenta(spec)) out.push_back(std::abs(f_vf(p, j)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> vl_discrete_spectrum(const LatticeSpec& spec, const Couplings& j) {
  if (spec.n1() % 2 != 0 || spec.twist() % 2 != 0) {
    throw std::invalid_argument("vortex-lattice spectrum needs even n1 and even twist");
  }
  std::vector<double> out;
  for (const Momentum& p : allowed_momenta(spec)) {
    if (p.px >= kPi - 1e-12) continue;  // the companion p~ covers this half
    const double px = p.px >= 0.5 * kPi ? p.px - kPi : p.px;
    const BandPair b = vl_bands({px, p.py}, j);
    out.push_back(b.a_abs);
    out.push_back(b.b_abs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kitaev
