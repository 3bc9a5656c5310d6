#pragma once

// Weighted sums of Pauli strings acting matrix-free on 2^n amplitudes.
// Basis index bit j is spin j (0 = up along z).

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/pauli.hpp"

namespace kitaev {

struct WeightedString {
  double weight = 0.0;
  PauliString string;
};

class SpinOperator {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  explicit SpinOperator(int num_spins);

  void add(double weight, const PauliString& s);

  int num_spins() const { return num_spins_; }
  std::size_t dimension() const { return std::size_t{1} << num_spins_; }
  const std::vector<WeightedString>& terms() const { return terms_; }

  // Every term has a real matrix in the basis (even i-power).
  bool is_real() const;
  bool is_hermitian() const;

  // out = Op * in. The parallel kernel gathers per output index, so the
  // result does not depend on the thread count.
  void apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const;
  void apply_serial(const Eigen::VectorXd& in, Eigen::VectorXd& out) const;
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  void apply_serial(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;

  Eigen::MatrixXd to_dense_real() const;
  Eigen::MatrixXcd to_dense() const;

 private:
  struct Kernel {
    std::uint64_t x;
    std::uint64_t z;
    std::complex<double> c;
  };
  std::vector<Kernel> kernels() const;

  int num_spins_;
  std::vector<WeightedString> terms_;
};

// Action of a single string; used for plaquette and loop operators.
Eigen::VectorXcd apply_string(const PauliString& s, const Eigen::VectorXcd& in);
Eigen::VectorXd apply_string_real(const PauliString& s, const Eigen::VectorXd& in);

}  // namespace kitaev
