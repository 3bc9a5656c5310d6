#include "kitaev/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <arpack/arpack.hpp>

namespace kitaev {

EigenResult dense_eigenpairs(const Eigen::MatrixXd& h, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  k = std::min<int>(k, static_cast<int>(h.rows()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (h + h.transpose()));
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  EigenResult r;
  r.eigenvectors = solver.eigenvectors().leftCols(k);
  for (int i = 0; i < k; ++i) {
    r.eigenvalues.push_back(solver.eigenvalues()(i));
    r.residuals.push_back((h * r.eigenvectors.col(i) - r.eigenvalues.back() * r.eigenvectors.col(i)).norm());
  }
  r.converged = true;
  return r;
}

namespace {

EigenResult arpack_lowest(const LinearMap& h, Eigen::Index dim, int k, const EigenOptions& opts) {
  const a_int n = dim;
  const a_int nev = k;
  const a_int ncv = std::min<a_int>(n, opts.ncv > 0 ? opts.ncv : std::max<a_int>(2 * nev + 1, 32));
  const a_int lworkl = ncv * (ncv + 8);

  std::vector<double> resid(static_cast<std::size_t>(n));
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  for (double& x : resid) x = normal(rng);

  std::vector<double> v(static_cast<std::size_t>(n * ncv)), workd(static_cast<std::size_t>(3 * n)),
      workl(static_cast<std::size_t>(lworkl));
  a_int iparam[11] = {}, ipntr[11] = {};
  iparam[0] = 1;  // exact shifts
  iparam[2] = opts.max_iterations;
  iparam[6] = 1;  // standard problem, regular mode
  a_int ido = 0, info = 1;  // info = 1: start from resid
  // relative Ritz tolerance, well inside opts.tol; residuals are checked below
  const double arpack_tol = 1e-2 * opts.tol;

  while (true) {
    arpack::saupd(ido, arpack::bmat::identity, n, arpack::which::smallest_algebraic, nev, arpack_tol, resid.data(),
                  ncv, v.data(), n, iparam, ipntr, workd.data(), workl.data(), lworkl, info);
    if (ido != -1 && ido != 1) break;
    h(workd.data() + ipntr[0] - 1, workd.data() + ipntr[1] - 1);
  }
  if (info < 0) throw std::runtime_error("ARPACK saupd failed with info " + std::to_string(info));
  const bool max_iter_hit = info == 1;

  std::vector<a_int> select(static_cast<std::size_t>(ncv));
  std::vector<double> d(static_cast<std::size_t>(nev));
  Eigen::MatrixXd z(n, nev);
  a_int einfo = 0;
  arpack::seupd(1, arpack::howmny::ritz_vectors, select.data(), d.data(), z.data(), n, 0.0, arpack::bmat::identity, n,
                arpack::which::smallest_algebraic, nev, arpack_tol, resid.data(), ncv, v.data(), n, iparam, ipntr,
                workd.data(), workl.data(), lworkl, einfo);
  if (einfo != 0) throw std::runtime_error("ARPACK seupd failed with info " + std::to_string(einfo));

  const a_int found = iparam[4];  // converged Ritz values
  std::vector<int> order(static_cast<std::size_t>(nev));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  EigenResult r;
  r.iterations = static_cast<int>(iparam[2]);
  r.eigenvectors.resize(n, nev);
  r.converged = !max_iter_hit && found >= nev;
  Eigen::VectorXd hv(n);
  for (int i = 0; i < nev; ++i) {
    r.eigenvectors.col(i) = z.col(order[i]).normalized();
    r.eigenvalues.push_back(d[order[i]]);
    h(r.eigenvectors.col(i).data(), hv.data());
    r.residuals.push_back((hv - r.eigenvalues.back() * r.eigenvectors.col(i)).norm());
    if (!(r.residuals.back() < opts.tol)) r.converged = false;
  }
  return r;
}

// Tight clusters can stall a small Krylov space; retry with a wider one.
EigenResult arpack_escalating(const LinearMap& h, Eigen::Index dim, int k, const EigenOptions& opts) {
  EigenOptions o = opts;
  if (o.ncv <= 0) o.ncv = std::max(2 * k + 1, 32);
  EigenResult r = arpack_lowest(h, dim, k, o);
  for (int attempt = 0; attempt < 2 && !r.converged && o.ncv < dim; ++attempt) {
    o.ncv *= 2;
    r = arpack_lowest(h, dim, k, o);
  }
  return r;
}

}  // namespace

EigenResult lanczos_eigenpairs(const LinearMap& h, Eigen::Index dim, int k, const EigenOptions& opts) {
  if (k < 1 || k >= dim) throw std::invalid_argument("k must lie in [1, dimension)");
  EigenResult r = arpack_escalating(h, dim, k, opts);
  if (!r.converged) return r;

  // A single Krylov sequence sees one direction per exactly degenerate level
  // and can miss the other copies. Shift the found vectors out of the way and
  // look again; anything below the k-th value joins a Rayleigh-Ritz update.
  for (int pass = 0; pass < k && k + 1 < dim; ++pass) {
    const Eigen::MatrixXd& v = r.eigenvectors;
    const double shift = 1.0 + 2.0 * (std::abs(r.eigenvalues.front()) + std::abs(r.eigenvalues.back()));
    Eigen::VectorXd hx(dim);
    const LinearMap deflated = [&](const double* x, double* y) {
      const Eigen::Map<const Eigen::VectorXd> in(x, dim);
      h(x, hx.data());
      Eigen::Map<Eigen::VectorXd>(y, dim) = hx + shift * (v * (v.transpose() * in));
    };
    // a fresh start vector: the old one has no weight on the missed copies
    EigenOptions fresh = opts;
    fresh.seed = opts.seed + 1 + static_cast<std::uint64_t>(pass);
    const EigenResult extra = arpack_escalating(deflated, dim, 1, fresh);
    if (!extra.converged) {
      r.converged = false;
      return r;
    }
    if (!(extra.eigenvalues[0] < r.eigenvalues.back() - opts.tol)) break;

    Eigen::MatrixXd w(dim, k + 1);
    w << v, extra.eigenvectors.col(0);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
    w = qr.householderQ() * Eigen::MatrixXd::Identity(dim, k + 1);
    Eigen::MatrixXd hw(dim, k + 1);
    for (int c = 0; c <= k; ++c) h(w.col(c).data(), hw.col(c).data());
    const Eigen::MatrixXd small = w.transpose() * hw;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(0.5 * (small + small.transpose()));
    r.eigenvectors = w * ritz.eigenvectors().leftCols(k);
    r.eigenvalues.clear();
    r.residuals.clear();
    r.iterations += extra.iterations;
    for (int i = 0; i < k; ++i) {
      r.eigenvalues.push_back(ritz.eigenvalues()(i));
      h(r.eigenvectors.col(i).data(), hx.data());
      r.residuals.push_back((hx - r.eigenvalues.back() * r.eigenvectors.col(i)).norm());
      if (!(r.residuals.back() < opts.tol)) r.converged = false;
    }
  }
  return r;
}

EigenResult lowest_eigenpairs(const SpinOperator& op, int k, const EigenOptions& opts) {
  if (!op.is_real() || !op.is_hermitian()) throw std::invalid_argument("operator must be real symmetric");
  if (op.dimension() <= opts.dense_threshold) return dense_eigenpairs(op.to_dense_real(), k);
  const auto dim = static_cast<Eigen::Index>(op.dimension());
  Eigen::VectorXd in(dim), out(dim);
  const LinearMap map = [&](const double* x, double* y) {
    in = Eigen::Map<const Eigen::VectorXd>(x, dim);
    op.apply(in, out);
    Eigen::Map<Eigen::VectorXd>(y, dim) = out;
  };
  return lanczos_eigenpairs(map, dim, k, opts);
}

EigenResult lowest_eigenpairs(const SpinOperator& op, int k, double tol) {
  EigenOptions opts;
  opts.tol = tol;
  return lowest_eigenpairs(op, k, opts);
}

}  // namespace kitaev
