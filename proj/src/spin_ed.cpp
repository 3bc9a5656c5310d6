#include "kitaev/spin_ed.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace kitaev {

Pauli pauli_of(LinkKind k) {
  switch (k) {
    case LinkKind::X: return Pauli::X;
    case LinkKind::Y: return Pauli::Y;
    case LinkKind::Z: return Pauli::Z;
  }
  return Pauli::I;
}

PauliString link_operator(const LatticeSpec& spec, int link) {
  const auto [a, b] = spec.endpoints(link);
  const Pauli p = pauli_of(spec.link_kind(link));
  return PauliString::single(a, p) * PauliString::single(b, p);
}

SpinOperator build_hamiltonian(const LatticeSpec& spec, const Couplings& j) {
  j.validate();
  if (spec.num_sites() > kMaxEdSpins) throw std::length_error("spin ED is limited to 20 spins");
  SpinOperator h(spec.num_sites());
  for (int l = 0; l < spec.num_links(); ++l) h.add(-j[spec.link_kind(l)], link_operator(spec, l));
  return h;
}

PauliString plaquette_operator(const LatticeSpec& spec, int p) {
  const auto sites = spec.plaquette_sites(p);
  const auto kinds = LatticeSpec::plaquette_outward_kinds();
  PauliString w;
  for (int i = 0; i < 6; ++i) {
    if (w.at(sites[i]) != Pauli::I) throw std::invalid_argument("plaquette visits a site twice on this lattice");
    w.set(sites[i], pauli_of(kinds[i]));
  }
  return w;
}

PauliString plaquette_operator(const LatticeSpec& spec, const PlaquetteRef& p) {
  return plaquette_operator(spec, spec.cell_index(p.cell));
}

SectorClassification classify_sector(const Eigen::VectorXd& state, const LatticeSpec& spec, double tol) {
  SectorClassification out;
  out.definite = true;
  const double norm2 = state.squaredNorm();
  for (int p = 0; p < spec.num_plaquettes(); ++p) {
    const double w = state.dot(apply_string_real(plaquette_operator(spec, p), state)) / norm2;
    out.expectations.push_back(w);
    out.fluxes.push_back(w >= 0 ? 1 : -1);
    if (!(std::abs(w) > 1.0 - tol)) out.definite = false;
  }
  return out;
}

ResolvedSpectrum resolve_sectors(const LatticeSpec& spec, EigenResult eig, double cluster_tol) {
  ResolvedSpectrum out;
  const int n = static_cast<int>(eig.eigenvalues.size());
  std::vector<PauliString> ws;
  for (int p = 0; p < spec.num_plaquettes(); ++p) ws.push_back(plaquette_operator(spec, p));

  int cluster = 0;
  for (int start = 0; start < n; ++cluster) {
    int end = start + 1;
    while (end < n && eig.eigenvalues[end] - eig.eigenvalues[start] < cluster_tol) ++end;
    if (end == n && n < eig.eigenvectors.rows()) out.complete = false;
    const int m = end - start;
    if (m > 1) {
      // Distinct weights 2^-p separate every sign pattern.
      const Eigen::MatrixXd block = eig.eigenvectors.middleCols(start, m);
      Eigen::MatrixXd wv = Eigen::MatrixXd::Zero(block.rows(), m);
      double c = 1.0;
      for (const auto& w : ws) {
        for (int i = 0; i < m; ++i) wv.col(i) += c * apply_string_real(w, block.col(i));
        c *= 0.5;
      }
      Eigen::MatrixXd small = block.transpose() * wv;
      small = 0.5 * (small + small.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(small);
      eig.eigenvectors.middleCols(start, m) = block * solver.eigenvectors();
    }
    for (int i = start; i < end; ++i) out.cluster_of.push_back(cluster);
    start = end;
  }
  for (int i = 0; i < n; ++i) out.sectors.push_back(classify_sector(eig.eigenvectors.col(i), spec));
  out.eig = std::move(eig);
  return out;
}

EdGap ed_gap(const LatticeSpec& spec, const Couplings& j, int k, const EigenOptions& opts) {
  if (k < 2) throw std::invalid_argument("the gap needs at least two eigenpairs");
  const SpinOperator h = build_hamiltonian(spec, j);
  ResolvedSpectrum rs = resolve_sectors(spec, lowest_eigenpairs(h, k, opts));
  EdGap g;
  g.e0 = rs.eig.eigenvalues[0];
  g.e1 = rs.eig.eigenvalues[1];
  g.gap = std::max(0.0, g.e1 - g.e0);
  g.ground_degeneracy = static_cast<int>(std::count(rs.cluster_of.begin(), rs.cluster_of.end(), 0));
  g.ground = rs.sectors[0];
  g.excited = rs.sectors[1];
  g.converged = rs.eig.converged;
  g.complete = g.ground_degeneracy < k;
  g.ground_vortex_free = g.complete;
  for (int i = 0; i < g.ground_degeneracy; ++i) {
    const auto& sec = rs.sectors[static_cast<std::size_t>(i)];
    g.ground_vortex_free = g.ground_vortex_free && sec.definite &&
                           std::all_of(sec.fluxes.begin(), sec.fluxes.end(), [](int f) { return f == 1; });
  }
  g.residuals = rs.eig.residuals;
  return g;
}

double two_vortex_identity_check(const LatticeSpec& spec, const Couplings& j, int site, int num_vectors,
                                 std::uint64_t seed) {
  if (site < 0 || site >= spec.num_sites()) throw std::out_of_range("site out of range");
  const SpinOperator h = build_hamiltonian(spec, j);
  const PauliString sz = PauliString::single(site, Pauli::Z);
  const PauliString xx = link_operator(spec, spec.site_link(site, LinkKind::X));
  const PauliString yy = link_operator(spec, spec.site_link(site, LinkKind::Y));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(static_cast<Eigen::Index>(h.dimension())), hv, hrot;
  double worst = 0.0;
  for (int r = 0; r < num_vectors; ++r) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
    v.normalize();
    h.apply(apply_string_real(sz, v), hrot);
    const Eigen::VectorXd lhs = apply_string_real(sz, hrot);
    h.apply(v, hv);
    const Eigen::VectorXd rhs = hv + 2.0 * j.jx * apply_string_real(xx, v) + 2.0 * j.jy * apply_string_real(yy, v);
    worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

double string_statistics_check(const LatticeSpec& spec, int crossings) {
  const int n1 = spec.n1();
  if (n1 < 2) throw std::invalid_argument("strings need n1 >= 2");
  if (crossings < 0 || crossings > n1 - 1) throw std::invalid_argument("too many crossings for this lattice");
  PauliString row;
  for (int x = 0; x < n1 - 1; ++x) row.set(spec.site_a({x, 0}), Pauli::Z);
  PauliString cols;
  auto add_column = [&](int x) {
    for (int y = 0; y < spec.n2(); ++y) cols.set(spec.site_a({x, y}), Pauli::X);
  };
  if (crossings == 0) add_column(n1 - 1);
  for (int c = 0; c < crossings; ++c) add_column(c);
  const PauliString k = group_commutator(row, cols);
  if (!k.is_scalar()) throw std::logic_error("pauli group commutator must be a scalar");
  return k.coefficient().real();
}

}  // namespace kitaev

namespace kitaev {

double sector_lowest_energy(const SpinOperator& h, const LatticeSpec& spec, const std::vector<int>& fluxes,
                            const EigenOptions& opts) {
  if (static_cast<int>(fluxes.size()) != spec.num_plaquettes()) throw std::invalid_argument("one flux per plaquette");
  std::vector<std::pair<int, PauliString>> ws;
  for (int p = 0; p < spec.num_plaquettes(); ++p) ws.emplace_back(fluxes[p], plaquette_operator(spec, p));
  auto project = [&](Eigen::VectorXd v) {
    for (const auto& [s, w] : ws) v = 0.5 * (v + s * apply_string_real(w, v));
    return v;
  };
  // P H P + c (1 - P) with c above the spectrum of H.
  double c = 1.0;
  for (const auto& t : h.terms()) c += std::abs(t.weight);
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  Eigen::VectorXd hv;
  const LinearMap map = [&](const double* x, double* y) {
    const Eigen::Map<const Eigen::VectorXd> in(x, dim);
    const Eigen::VectorXd pv = project(in);
    h.apply(pv, hv);
    Eigen::Map<Eigen::VectorXd>(y, dim) = project(hv) + c * (in - pv);
  };
  EigenResult r;
  if (h.dimension() <= opts.dense_threshold) {
    Eigen::MatrixXd dense(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, col);
      map(e.data(), dense.col(col).data());
    }
    r = dense_eigenpairs(dense, 1);
  } else {
    r = lanczos_eigenpairs(map, dim, 1, opts);
  }
  if (r.eigenvalues[0] >= c - 1e-9) throw std::invalid_argument("flux sector is empty");
  return r.eigenvalues[0];
}

}  // namespace kitaev
