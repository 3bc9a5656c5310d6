#pragma once

// Spin-basis exact diagonalization of the honeycomb Hamiltonian
//   H = -sum_links J_alpha sigma^alpha_j sigma^alpha_k
// and the plaquette operators W_p (product of the outward-link Paulis).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/couplings.hpp"
#include "kitaev/eigensolver.hpp"
#include "kitaev/lattice.hpp"
#include "kitaev/pauli.hpp"
#include "kitaev/spin_operator.hpp"

namespace kitaev {

constexpr int kMaxEdSpins = 20;

Pauli pauli_of(LinkKind k);

// sigma^alpha_j sigma^alpha_k on the link.
PauliString link_operator(const LatticeSpec& spec, int link);
SpinOperator build_hamiltonian(const LatticeSpec& spec, const Couplings& j);

PauliString plaquette_operator(const LatticeSpec& spec, int p);
PauliString plaquette_operator(const LatticeSpec& spec, const PlaquetteRef& p);

struct SectorClassification {
  std::vector<int> fluxes;            // rounded <W_p>
  std::vector<double> expectations;
  bool definite = false;              // every |<W_p>| > 1 - tol
};

SectorClassification classify_sector(const Eigen::VectorXd& state, const LatticeSpec& spec, double tol = 1e-6);

// Rotates each eigenvalue cluster (spread < cluster_tol) onto joint
// eigenvectors of the W_p. A cluster touching the last computed pair may be
// incomplete; its states are still rotated but `complete` is false.
struct ResolvedSpectrum {
  EigenResult eig;
  std::vector<SectorClassification> sectors;
  std::vector<int> cluster_of;        // cluster id per eigenpair
  bool complete = true;
};

ResolvedSpectrum resolve_sectors(const LatticeSpec& spec, EigenResult eig, double cluster_tol = 1e-8);

// Ground state, first excitation and the gap E_1 - E_0 (zero when the
// ground state is degenerate).
struct EdGap {
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
  int ground_degeneracy = 1;
  SectorClassification ground;
  SectorClassification excited;
  // every state of the ground level is flux-free and the level is fully computed
  bool ground_vortex_free = false;
  bool converged = false;
  bool complete = false;
  std::vector<double> residuals;
};

EdGap ed_gap(const LatticeSpec& spec, const Couplings& j, int k = 4, const EigenOptions& opts = {});

// max over random vectors of |sigma^z_i H sigma^z_i v - (H + 2 J_x s^x_i s^x_j
// + 2 J_y s^y_i s^y_k) v|_inf, with j, k the x- and y-neighbors of i.
double two_vortex_identity_check(const LatticeSpec& spec, const Couplings& j, int site, int num_vectors = 10,
                                 std::uint64_t seed = 7);

// Scalar of the group commutator of a sigma^z string along a row of A sites
// and sigma^x strings along `crossings` columns of A sites that cut it.
double string_statistics_check(const LatticeSpec& spec, int crossings = 1);

}  // namespace kitaev

namespace kitaev {

// Lowest eigenvalue of H inside the flux sector given by `fluxes`.
double sector_lowest_energy(const SpinOperator& h, const LatticeSpec& spec, const std::vector<int>& fluxes,
                            const EigenOptions& opts = {});

}  // namespace kitaev
