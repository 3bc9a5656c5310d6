#include "kitaev/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kitaev {

QuadraticForm assemble(const LatticeSpec& spec, const GaugeConfig& g, const Couplings& j) {
  if (!(g.spec() == spec)) throw std::invalid_argument("gauge configuration belongs to a different lattice");
  j.validate();
  QuadraticForm q{spec, Eigen::MatrixXd::Zero(spec.num_sites(), spec.num_sites())};
  for (int l = 0; l < spec.num_links(); ++l) {
    const auto [a, b] = spec.endpoints(l);
    const double entry = 2.0 * j[spec.link_kind(l)] * g.value(l);
    q.a(a, b) += entry;
    q.a(b, a) -= entry;
  }
  return q;
}

QuadraticForm assemble(const GaugeConfig& g, const Couplings& j) { return assemble(g.spec(), g, j); }

std::vector<double> mode_energies(const QuadraticForm& q) {
  const int cells = q.spec.num_cells();
  // Links only join A (even) to B (odd) sites, so iA is block off-diagonal and
  // its spectrum is +/- the singular values of the A->B block.
  Eigen::MatrixXd block(cells, cells);
  for (int r = 0; r < cells; ++r)
    for (int c = 0; c < cells; ++c) block(r, c) = q.a(2 * r, 2 * c + 1);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(block);
  const Eigen::VectorXd& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd hermitian_spectrum(const QuadraticForm& q) {
  const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * q.a.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

PairedSpectrum mode_energies_reference(const QuadraticForm& q) {
  const Eigen::VectorXd ev = hermitian_spectrum(q);
  const int n = static_cast<int>(ev.size());
  PairedSpectrum out;
  out.energies.resize(static_cast<std::size_t>(n / 2));
  for (int m = 0; m < n / 2; ++m) {
    const double pos = ev(n / 2 + m);
    const double neg = -ev(n / 2 - 1 - m);
    out.energies[static_cast<std::size_t>(m)] = 0.5 * (pos + neg);
    out.pairing_defect = std::max(out.pairing_defect, std::abs(pos - neg));
  }
  return out;
}

SpectrumResult sector_spectrum(const LatticeSpec& spec, const GaugeConfig& g, const Couplings& j) {
  SpectrumResult r;
  r.couplings = j;
  r.mode_energies = mode_energies(assemble(spec, g, j));
  r.fluxes = all_fluxes(g);
  r.ground_energy = -0.5 * std::accumulate(r.mode_energies.begin(), r.mode_energies.end(), 0.0);
  r.gap = r.mode_energies.empty() ? 0.0 : r.mode_energies.front();
  return r;
}

SpectrumResult sector_spectrum(const GaugeConfig& g, const Couplings& j) { return sector_spectrum(g.spec(), g, j); }

double two_vortex_gap(const LatticeSpec& spec, const Couplings& j, LinkKind kind) {
  const GaugeConfig free = vortex_free_gauge(spec);
  const GaugeConfig pair = flip_link(free, {{0, 0}, kind});
  return sector_spectrum(pair, j).ground_energy - sector_spectrum(free, j).ground_energy;
}

}  // namespace kitaev
