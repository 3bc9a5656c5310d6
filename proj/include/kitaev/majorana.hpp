#pragma once

// Free-Majorana solution of a fixed gauge sector.
//
// H = (i/4) sum_{jk} A_{jk} c_j c_k with A_{jk} = 2 J_alpha u_{jk} on links. One
// Majorana per site; the N = n1*n2 non-negative canonical values eps_m of A
// give H = sum_m eps_m (b_m^dagger b_m - 1/2).

#include <vector>

#include <Eigen/Dense>

#include "kitaev/couplings.hpp"
#include "kitaev/lattice.hpp"

namespace kitaev {

struct QuadraticForm {
  LatticeSpec spec;
  Eigen::MatrixXd a;  // sites x sites, real antisymmetric

  int dimension() const { return static_cast<int>(a.rows()); }
};

struct SpectrumResult {
  Couplings couplings;
  std::vector<int> fluxes;
  std::vector<double> mode_energies;  // ascending
  double ground_energy = 0.0;
  double gap = 0.0;
};

QuadraticForm assemble(const LatticeSpec& spec, const GaugeConfig& g, const Couplings& j);
QuadraticForm assemble(const GaugeConfig& g, const Couplings& j);

// Canonical values from the singular values of the A->B sublattice block.
std::vector<double> mode_energies(const QuadraticForm& q);

// Reference path: all 2N eigenvalues of the Hermitian matrix iA, ascending.
Eigen::VectorXd hermitian_spectrum(const QuadraticForm& q);
// Canonical values from the reference path, with the +/- pairing defect.
struct PairedSpectrum {
  std::vector<double> energies;  // ascending, one per pair
  double pairing_defect = 0.0;   // max |eps^(+) - eps^(-)|
};
PairedSpectrum mode_energies_reference(const QuadraticForm& q);

SpectrumResult sector_spectrum(const LatticeSpec& spec, const GaugeConfig& g, const Couplings& j);
SpectrumResult sector_spectrum(const GaugeConfig& g, const Couplings& j);

// Ground-energy cost of the vortex pair made by flipping one link of the given
// kind in the vortex-free gauge (the link in cell (0, 0)).
double two_vortex_gap(const LatticeSpec& spec, const Couplings& j, LinkKind kind = LinkKind::Z);

}  // namespace kitaev
