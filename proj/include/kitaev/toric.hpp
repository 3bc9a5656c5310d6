#pragma once

// Toric-code limit J_z >> J_x, J_y: the excitations made by Pauli operators on
// the two spins of one z-dimer,
//   |Z> = s^z_A |gs>,  |Y> = s^x_A s^y_B |gs>,  |X> = i s^x_A s^x_B |gs>.

#include <vector>

#include "kitaev/couplings.hpp"
#include "kitaev/lattice.hpp"
#include "kitaev/pauli.hpp"

namespace kitaev {

struct ToricOperators {
  PauliString z;
  PauliString y;
  PauliString x;
  PauliString dimer;  // s^z_A s^z_B, the identity on the dimer ground space
};

ToricOperators toric_operators(const LatticeSpec& spec, Cell dimer = {});

// Fusion algebra checked as exact Pauli identities. X Y equals Z only up to
// the dimer operator, which acts as the identity in the toric-code limit.
struct FusionCheck {
  bool xx_identity = false;
  bool yy_identity = false;
  bool zz_identity = false;
  bool xy_is_z = false;
};

FusionCheck fusion_check(const ToricOperators& ops);

// Links whose gauge variable a Pauli string flips: s^alpha at a site flips the
// two links there whose kind differs from alpha.
std::vector<int> pauli_gauge_flips(const LatticeSpec& spec, const PauliString& s);
GaugeConfig apply_pauli_flips(const GaugeConfig& g, const PauliString& s);

struct ToricState {
  double energy = 0.0;         // <a|H|a> - E_gs
  double sector_energy = 0.0;  // lowest level of the state's flux sector - E_gs
  std::vector<int> fluxes;
};

struct ToricExcitations {
  double ground_energy = 0.0;
  ToricState z;
  ToricState y;
  ToricState x;
  FusionCheck fusion;
  bool toric_regime = false;  // J_x, J_y <= 0.1 J_z
};

// Spin ED on a small torus; the ground state is the lowest ED eigenvector.
ToricExcitations toric_excitations(const LatticeSpec& spec, const Couplings& j, Cell dimer = {});

// Free-fermion energies of the same excitations: each operator mapped to its
// gauge flips, ground energy of that sector minus the vortex-free one. Usable
// on lattices far beyond ED reach.
struct ToricVortexEnergies {
  double z = 0.0;
  double y = 0.0;
  double x = 0.0;
};

ToricVortexEnergies toric_vortex_energies(const LatticeSpec& spec, const Couplings& j, Cell dimer = {});

}  // namespace kitaev
