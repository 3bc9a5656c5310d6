#pragma once

// Six spins on a single hexagon with only the boundary bonds. The loop
// operator S (the hexagon's plaquette operator) detects a vortex made by a
// single-spin rotation that anticommutes with it.

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "kitaev/couplings.hpp"
#include "kitaev/pauli.hpp"
#include "kitaev/spin_operator.hpp"

namespace kitaev {

struct HexagonModel {
  Couplings couplings;
  SpinOperator hamiltonian{6};
  // Kind of the bond (i, i+1 mod 6) going around.
  std::array<LinkKind, 6> boundary_link_types{};
  PauliString loop_operator;
  PauliString vortex_rotation;
};

// Boundary kinds x, z, y, x, z, y; S carries at each spin the Pauli of the
// direction that leaves the hexagon. The default rotation is sigma^z on spin 6.
HexagonModel build_hexagon(const Couplings& j);
HexagonModel build_hexagon(const Couplings& j, const PauliString& vortex_rotation);

struct HexagonStates {
  Eigen::VectorXcd gs;
  Eigen::VectorXcd v;
  double energy_gs = 0.0;
  double energy_v = 0.0;
  // False when the lowest state overall has S = -1; |gs> is then the lowest S = +1 state.
  bool ground_in_plus_sector = true;
};

HexagonStates ground_and_vortex(const HexagonModel& m);

Eigen::VectorXcd run_loop(const HexagonModel& m, const Eigen::VectorXcd& state);

struct InterferenceResult {
  Couplings couplings;
  double s_expectation_gs = 0.0;
  double s_expectation_v = 0.0;
  double fidelity_v = 0.0;
  double fidelity_gs = 0.0;
  double energy_gs = 0.0;
  double energy_v = 0.0;
  double norm_defect = 0.0;  // | |R^-1 L R gs| - 1 |
  bool ground_in_plus_sector = true;
};

// R^-1 L R |gs> with R = (1 - i V) / sqrt 2 for the vortex rotation V and the
// loop L (S unless overridden).
InterferenceResult run_interference(const HexagonModel& m, const std::optional<PauliString>& loop = std::nullopt);

}  // namespace kitaev
