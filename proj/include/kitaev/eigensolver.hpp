#pragma once

// Lowest eigenpairs of real symmetric operators.
//
// Small problems go through a dense solver. Larger ones use ARPACK's
// implicitly restarted Lanczos iteration, started from a seeded pseudo-random
// vector, followed by a deflated pass that recovers degenerate copies the
// first Krylov sequence missed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/spin_operator.hpp"

namespace kitaev {

struct EigenOptions {
  double tol = 1e-10;         // on ||Hv - lambda v||
  int max_iterations = 2000;  // Lanczos restarts
  int ncv = 0;                // Krylov dimension; 0: max(2k + 1, 32), doubled up to twice on stalls
  std::size_t dense_threshold = 1024;
  std::uint64_t seed = 20070417;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // one column per eigenvalue
  std::vector<double> residuals;
  bool converged = false;
  int iterations = 0;
};

// out = H in for vectors of length dim.
using LinearMap = std::function<void(const double* in, double* out)>;

EigenResult dense_eigenpairs(const Eigen::MatrixXd& h, int k);
EigenResult lanczos_eigenpairs(const LinearMap& h, Eigen::Index dim, int k, const EigenOptions& opts = {});

EigenResult lowest_eigenpairs(const SpinOperator& op, int k, const EigenOptions& opts);
EigenResult lowest_eigenpairs(const SpinOperator& op, int k, double tol = 1e-10);

}  // namespace kitaev
