#include "kitaev/interference.hpp"

#include <cmath>
#include <stdexcept>

#include "kitaev/spin_ed.hpp"

namespace kitaev {

namespace {

constexpr std::array<LinkKind, 6> kBoundary = {LinkKind::X, LinkKind::Z, LinkKind::Y,
                                               LinkKind::X, LinkKind::Z, LinkKind::Y};

LinkKind third_kind(LinkKind a, LinkKind b) {
  for (LinkKind k : kAllKinds)
    if (k != a && k != b) return k;
  throw std::logic_error("boundary kinds at a spin must differ");
}

double expectation(const PauliString& s, const Eigen::VectorXcd& psi) {
  return psi.dot(apply_string(s, psi)).real();
}

}  // namespace

HexagonModel build_hexagon(const Couplings& j) { return build_hexagon(j, PauliString::single(5, Pauli::Z)); }

HexagonModel build_hexagon(const Couplings& j, const PauliString& vortex_rotation) {
  j.validate();
  HexagonModel m;
  m.couplings = j;
  m.boundary_link_types = kBoundary;
  for (int i = 0; i < 6; ++i) {
    const Pauli p = pauli_of(kBoundary[i]);
    m.hamiltonian.add(-j[kBoundary[i]], PauliString::single(i, p) * PauliString::single((i + 1) % 6, p));
    m.loop_operator.set(i, pauli_of(third_kind(kBoundary[(i + 5) % 6], kBoundary[i])));
  }
  if (vortex_rotation.weight() != 1 || vortex_rotation.support().front() >= 6 || !vortex_rotation.is_hermitian())
    throw std::invalid_argument("vortex rotation must be a Hermitian single-spin Pauli on the hexagon");
  m.vortex_rotation = vortex_rotation;
  return m;
}

HexagonStates ground_and_vortex(const HexagonModel& m) {
  const Eigen::MatrixXcd h = m.hamiltonian.to_dense();
  const Eigen::Index dim = h.rows();
  Eigen::MatrixXcd s(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) s.col(c) = apply_string(m.loop_operator, Eigen::VectorXcd::Unit(dim, c));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd p = 0.5 * (id + s);

  double c = 1.0;
  for (const auto& t : m.hamiltonian.terms()) c += std::abs(t.weight);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> plus(p * h * p + c * (id - p));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(h, Eigen::EigenvaluesOnly);

  HexagonStates st;
  st.gs = plus.eigenvectors().col(0);
  st.energy_gs = plus.eigenvalues()(0);
  st.ground_in_plus_sector = st.energy_gs <= full.eigenvalues()(0) + 1e-10;
  st.v = apply_string(m.vortex_rotation, st.gs);
  st.energy_v = st.v.dot(h * st.v).real();
  return st;
}

Eigen::VectorXcd run_loop(const HexagonModel& m, const Eigen::VectorXcd& state) {
  return apply_string(m.loop_operator, state);
}

InterferenceResult run_interference(const HexagonModel& m, const std::optional<PauliString>& loop) {
  const HexagonStates st = ground_and_vortex(m);
  const std::complex<double> i(0.0, 1.0);
  const double r2 = std::sqrt(0.5);
  const PauliString& l = loop ? *loop : m.loop_operator;

  const Eigen::VectorXcd rotated = r2 * (st.gs - i * apply_string(m.vortex_rotation, st.gs));
  const Eigen::VectorXcd looped = apply_string(l, rotated);
  const Eigen::VectorXcd out = r2 * (looped + i * apply_string(m.vortex_rotation, looped));

  InterferenceResult r;
  r.couplings = m.couplings;
  r.s_expectation_gs = expectation(m.loop_operator, st.gs);
  r.s_expectation_v = expectation(m.loop_operator, st.v);
  r.fidelity_v = std::norm(st.v.dot(out));
  r.fidelity_gs = std::norm(st.gs.dot(out));
  r.energy_gs = st.energy_gs;
  r.energy_v = st.energy_v;
  r.norm_defect = std::abs(out.norm() - 1.0);
  r.ground_in_plus_sector = st.ground_in_plus_sector;
  return r;
}

}  // namespace kitaev
