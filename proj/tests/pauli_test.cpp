#include <random>

#include <gtest/gtest.h>

#include "kitaev/pauli.hpp"
#include "kitaev/spin_operator.hpp"

using namespace kitaev;
using cplx = std::complex<double>;

namespace {

Eigen::Matrix2cd matrix_of(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Entry (r, c) is the product over sites of the single-site entries, with
// site j read from bit j of the basis index.
Eigen::MatrixXcd explicit_matrix(const PauliString& s, int n) {
  const int dim = 1 << n;
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      cplx v = s.coefficient();
      for (int j = 0; j < n; ++j) v *= matrix_of(s.at(j))((r >> j) & 1, (c >> j) & 1);
      m(r, c) = v;
    }
  return m;
}

PauliString random_string(std::mt19937& rng, int n) {
  PauliString s;
  for (int j = 0; j < n; ++j) s.set(j, static_cast<Pauli>(rng() % 4));
  return s.times_i(static_cast<int>(rng() % 4));
}

constexpr Pauli kAll[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

}  // namespace

TEST(pauli, single_site_multiplication_table) {
  for (Pauli a : kAll)
    for (Pauli b : kAll) {
      const PauliString prod = PauliString::single(0, a) * PauliString::single(0, b);
      const Eigen::Matrix2cd want = matrix_of(a) * matrix_of(b);
      EXPECT_TRUE(explicit_matrix(prod, 1).isApprox(want, 0.0)) << to_char(a) << to_char(b);
    }
}

TEST(pauli, named_phases) {
  const auto X = PauliString::single(0, Pauli::X), Y = PauliString::single(0, Pauli::Y),
             Z = PauliString::single(0, Pauli::Z);
  EXPECT_EQ(X * Y, Z.times_i(1));
  EXPECT_EQ(Y * Z, X.times_i(1));
  EXPECT_EQ(Z * X, Y.times_i(1));
  EXPECT_EQ(Y * X, Z.times_i(3));
  EXPECT_EQ(X * X, PauliString::identity());
}

TEST(pauli, products_match_matrices) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliString a = random_string(rng, n), b = random_string(rng, n);
    EXPECT_TRUE(explicit_matrix(a * b, n).isApprox(explicit_matrix(a, n) * explicit_matrix(b, n), 1e-14));
  }
}

TEST(pauli, associativity) {
  std::mt19937 rng(2);
  for (int t = 0; t < 500; ++t) {
    const PauliString a = random_string(rng, 40), b = random_string(rng, 40), c = random_string(rng, 40);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(pauli, commutation_predicate_matches_matrices) {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliString a = random_string(rng, n), b = random_string(rng, n);
    const Eigen::MatrixXcd ma = explicit_matrix(a, n), mb = explicit_matrix(b, n);
    const bool commute = (ma * mb - mb * ma).norm() < 1e-12;
    const bool anticommute = (ma * mb + mb * ma).norm() < 1e-12;
    EXPECT_NE(commute, anticommute);
    EXPECT_EQ(a.commutes_with(b), commute);
    EXPECT_EQ(group_commutator(a, b) == PauliString::identity(), commute);
  }
}

TEST(pauli, inverse_and_rendering) {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    const PauliString a = random_string(rng, 10);
    EXPECT_EQ(a * a.inverse(), PauliString::identity());
  }
  PauliString s{{0, Pauli::X}, {3, Pauli::Z}};
  EXPECT_EQ(s.to_string(), "+ X0 Z3");
  EXPECT_EQ(s.times_i(3).to_string(), "-i X0 Z3");
  EXPECT_THROW((PauliString{{1, Pauli::X}, {1, Pauli::Z}}), std::invalid_argument);
  EXPECT_THROW(PauliString::single(64, Pauli::X), std::out_of_range);
}

TEST(spin_operator, dense_form_matches_explicit_matrices) {
  std::mt19937 rng(5);
  SpinOperator op(3);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(8, 8);
  for (int t = 0; t < 6; ++t) {
    const PauliString s = random_string(rng, 3);
    const double w = 0.1 * t - 0.2;
    op.add(w, s);
    want += w * explicit_matrix(s, 3);
  }
  EXPECT_TRUE(op.to_dense().isApprox(want, 1e-14));
}

TEST(spin_operator, parallel_and_serial_apply_agree) {
  std::mt19937 rng(6);
  SpinOperator op(12);
  for (int t = 0; t < 20; ++t) {
    PauliString s = random_string(rng, 12);
    if (s.action_phase() % 2) s = s.times_i(1);
    op.add(0.3 * t - 1.0, s);
  }
  ASSERT_TRUE(op.is_real());
  Eigen::VectorXd v = Eigen::VectorXd::Random(4096), a, b;
  op.apply(v, a);
  op.apply_serial(v, b);
  EXPECT_EQ(a, b);
  Eigen::VectorXcd vc = Eigen::VectorXcd::Random(4096), ac, bc;
  op.apply(vc, ac);
  op.apply_serial(vc, bc);
  EXPECT_EQ(ac, bc);
  EXPECT_TRUE(ac.isApprox(op.to_dense() * vc, 1e-12));
}

TEST(spin_operator, single_string_action) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const PauliString s = random_string(rng, 4);
    const Eigen::VectorXcd v = Eigen::VectorXcd::Random(16);
    EXPECT_TRUE(apply_string(s, v).isApprox(explicit_matrix(s, 4) * v, 1e-13));
  }
}
