#include "kitaev/toric.hpp"

#include <iostream>
#include <stdexcept>

#include "kitaev/majorana.hpp"
#include "kitaev/spin_ed.hpp"

namespace kitaev {

ToricOperators toric_operators(const LatticeSpec& spec, Cell dimer) {
  const int a = spec.site_a(dimer);
  const int b = spec.site_b(dimer);
  ToricOperators ops;
  ops.z = PauliString::single(a, Pauli::Z);
  ops.y = PauliString::single(a, Pauli::X) * PauliString::single(b, Pauli::Y);
  ops.x = (PauliString::single(a, Pauli::X) * PauliString::single(b, Pauli::X)).times_i(1);
  ops.dimer = PauliString::single(a, Pauli::Z) * PauliString::single(b, Pauli::Z);
  return ops;
}

FusionCheck fusion_check(const ToricOperators& ops) {
  auto proportional = [](const PauliString& u, const PauliString& v) {
    return u.x_mask() == v.x_mask() && u.z_mask() == v.z_mask();
  };
  const PauliString one;
  FusionCheck f;
  f.xx_identity = proportional(ops.x * ops.x, one);
  f.yy_identity = proportional(ops.y * ops.y, one);
  f.zz_identity = proportional(ops.z * ops.z, one);
  f.xy_is_z = proportional(ops.x * ops.y, ops.z * ops.dimer);
  return f;
}

std::vector<int> pauli_gauge_flips(const LatticeSpec& spec, const PauliString& s) {
  std::vector<int> count(static_cast<std::size_t>(spec.num_links()), 0);
  for (int site : s.support()) {
    if (site >= spec.num_sites()) throw std::out_of_range("string acts outside the lattice");
    const Pauli p = s.at(site);
    for (LinkKind k : kAllKinds)
      if (pauli_of(k) != p) count[static_cast<std::size_t>(spec.site_link(site, k))] ^= 1;
  }
  std::vector<int> links;
  for (int l = 0; l < spec.num_links(); ++l)
    if (count[static_cast<std::size_t>(l)]) links.push_back(l);
  return links;
}

GaugeConfig apply_pauli_flips(const GaugeConfig& g, const PauliString& s) {
  GaugeConfig out = g;
  for (int l : pauli_gauge_flips(g.spec(), s)) out = out.with_flipped(l);
  return out;
}

ToricExcitations toric_excitations(const LatticeSpec& spec, const Couplings& j, Cell dimer) {
  if (!(j.jz > 0)) throw std::invalid_argument("toric limit needs J_z > 0");
  ToricExcitations out;
  out.toric_regime = j.jx <= 0.1 * j.jz && j.jy <= 0.1 * j.jz;
  if (!out.toric_regime) std::cerr << "warning: J_x, J_y are not small against J_z; toric-limit relations degrade\n";

  const SpinOperator h = build_hamiltonian(spec, j);
  const EigenResult eig = lowest_eigenpairs(h, 1);
  if (!eig.converged) throw std::runtime_error("ground state did not converge");
  const Eigen::VectorXcd gs = eig.eigenvectors.col(0).cast<std::complex<double>>();
  out.ground_energy = eig.eigenvalues[0];

  const ToricOperators ops = toric_operators(spec, dimer);
  out.fusion = fusion_check(ops);
  auto excite = [&](const PauliString& op) {
    ToricState st;
    const Eigen::VectorXcd psi = apply_string(op, gs);
    Eigen::VectorXcd hpsi;
    h.apply(psi, hpsi);
    st.energy = psi.dot(hpsi).real() - out.ground_energy;
    const Eigen::VectorXd re = psi.real(), im = psi.imag();
    // The excitations carry a global phase of 1 or i; classify the nonzero part.
    st.fluxes = classify_sector(re.squaredNorm() >= im.squaredNorm() ? re : im, spec).fluxes;
    st.sector_energy = sector_lowest_energy(h, spec, st.fluxes) - out.ground_energy;
    return st;
  };
  out.z = excite(ops.z);
  out.y = excite(ops.y);
  out.x = excite(ops.x);
  return out;
}

ToricVortexEnergies toric_vortex_energies(const LatticeSpec& spec, const Couplings& j, Cell dimer) {
  const GaugeConfig vf = vortex_free_gauge(spec);
  const double e0 = sector_spectrum(spec, vf, j).ground_energy;
  const ToricOperators ops = toric_operators(spec, dimer);
  auto energy = [&](const PauliString& op) {
    return sector_spectrum(spec, apply_pauli_flips(vf, op), j).ground_energy - e0;
  };
  return {energy(ops.z), energy(ops.y), energy(ops.x)};
}

}  // namespace kitaev
