#pragma once

// Closed-form band structure of the vortex-free and vortex-lattice sectors.
//
// Vortex-free: f(p) = 2 (J_x e^{ip_x} + J_y e^{ip_y} + J_z), one band |f(p)| on
// p in [-pi, pi]^2.
//
// Vortex-lattice: the alternating z-links couple p to p~ = (p_x + pi, p_y).
// With M(p) = 2 J_x e^{ip_x} + 2 J_y e^{ip_y} and N = 2 J_z, each p of the
// halved zone p_x in [-pi/2, pi/2] carries two bands |A(p)| >= |B(p)|.
//
// Energy densities are per unit cell (= per plaquette) with measure
// d^2p / (2 pi)^2, so J = (0, 0, J_z) gives -J_z in both sectors.

#include <complex>
#include <optional>
#include <vector>

#include "kitaev/couplings.hpp"
#include "kitaev/lattice.hpp"

namespace kitaev {

struct Momentum {
  double px = 0.0;
  double py = 0.0;
};

enum class QuadratureRule { Midpoint, Trapezoid };

// m_x by m_y points over the full zone; the halved zone uses m_x / 2 columns
// at the same spacing.
struct QuadratureGrid {
  int mx = 128;
  int my = 128;
  QuadratureRule rule = QuadratureRule::Midpoint;

  void validate() const;
  double px(int i) const;       // full zone column i
  double px_half(int i) const;  // halved zone column i < mx / 2
  double py(int j) const;
};

struct BandPair {
  double a_abs = 0.0;
  double b_abs = 0.0;
};

enum class Sector { VortexFree, VortexLattice };

// Vortex-free sector.
std::complex<double> f_vf(Momentum p, const Couplings& j);
double vf_gap(const Couplings& j, const QuadratureGrid& grid);
bool vf_is_gapless(const Couplings& j);
double vf_ground_energy_density(const Couplings& j, const QuadratureGrid& grid);
double vf_ground_energy_density_serial(const Couplings& j, const QuadratureGrid& grid);

// Vortex-lattice sector.
std::complex<double> m_vl(Momentum p, const Couplings& j);
double singularity_threshold(const Couplings& j);
// Closed form; empty where |M(p) + M*(p~)| falls below the singularity threshold.
std::optional<BandPair> vl_bands_closed_form(Momentum p, const Couplings& j);
// Eigenvalues of the 4x4 Hermitian (p, p~) Majorana block.
BandPair vl_bands_block(Momentum p, const Couplings& j);
BandPair vl_bands(Momentum p, const Couplings& j);
double vl_gap(const Couplings& j, const QuadratureGrid& grid);
bool vl_is_gapless(const Couplings& j);
double vl_ground_energy_density(const Couplings& j, const QuadratureGrid& grid);
double vl_ground_energy_density_serial(const Couplings& j, const QuadratureGrid& grid);

// Zero-gap momenta, one per symmetry class. Empty in a gapped phase.
std::vector<Momentum> fermi_points(Sector sector, const Couplings& j, const QuadratureGrid& grid);

// Cost of one vortex pair assuming non-interacting vortices: twice the
// per-plaquette energy difference between the two sectors.
double anyon_pair_gap(const Couplings& j, const QuadratureGrid& grid);

// Momenta allowed by the periodicity of a (possibly twisted) torus.
std::vector<Momentum> allowed_momenta(const LatticeSpec& spec);
// Sorted band values at the allowed momenta of a finite torus.
std::vector<double> vf_discrete_spectrum(const LatticeSpec& spec, const Couplings& j);
std::vector<double> vl_discrete_spectrum(const LatticeSpec& spec, const Couplings& j);

}  // namespace kitaev
