#include "kitaev/spin_operator.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kitaev {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline double parity_sign(std::uint64_t b) { return (std::popcount(b) & 1) ? -1.0 : 1.0; }

// Terms sharing an x mask read the same source amplitude; grouping them
// halves the random reads for the honeycomb bonds (xx and yy on one link).
template <class Scalar>
struct Group {
  std::uint64_t x;
  std::vector<std::pair<std::uint64_t, Scalar>> zc;
};

template <class Scalar, class Kernels, class Coef>
std::vector<Group<Scalar>> group_by_x(const Kernels& ks, const Coef& coef) {
  std::vector<Group<Scalar>> groups;
  for (const auto& k : ks) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group<Scalar>& g) { return g.x == k.x; });
    if (it == groups.end()) {
      groups.push_back({k.x, {}});
      it = groups.end() - 1;
    }
    it->zc.emplace_back(k.z, coef(k));
  }
  return groups;
}

// Group by group so each sweep reads `in` in near-sequential order. Every
// out[y] accumulates the groups in the same order, serial or parallel.
template <class Vec, class Kernels, class Coef>
void gather(const Kernels& ks, const Vec& in, Vec& out, const Coef& coef, bool parallel) {
  using Scalar = typename Vec::Scalar;
  const auto groups = group_by_x<Scalar>(ks, coef);
  const auto dim = static_cast<std::int64_t>(in.size());
  out.setZero(in.size());
  const Scalar* src_data = in.data();
  Scalar* dst = out.data();
  for (const auto& g : groups) {
    const std::uint64_t x = g.x;
    const auto* zc = g.zc.data();
    const std::size_t nz = g.zc.size();
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t y = 0; y < dim; ++y) {
      const std::uint64_t src = static_cast<std::uint64_t>(y) ^ x;
      // <y|P|src> = c (-1)^popcount(src & z)
      Scalar w(0);
      for (std::size_t t = 0; t < nz; ++t) w += parity_sign(src & zc[t].first) * zc[t].second;
      dst[y] += w * src_data[src];
    }
  }
}

}  // namespace

SpinOperator::SpinOperator(int num_spins) : num_spins_(num_spins) {
  if (num_spins < 1 || num_spins > 30) throw std::invalid_argument("spin count must be in [1, 30]");
}

void SpinOperator::add(double weight, const PauliString& s) {
  if (s.weight() > 0 && s.support().back() >= num_spins_) throw std::out_of_range("string acts outside the spins");
  terms_.push_back({weight, s});
}

bool SpinOperator::is_real() const {
  for (const auto& t : terms_)
    if (t.string.action_phase() % 2 != 0) return false;
  return true;
}

bool SpinOperator::is_hermitian() const {
  for (const auto& t : terms_)
    if (!t.string.is_hermitian()) return false;
  return true;
}

std::vector<SpinOperator::Kernel> SpinOperator::kernels() const {
  std::vector<Kernel> ks;
  ks.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.weight == 0.0) continue;
    ks.push_back({t.string.x_mask(), t.string.z_mask(), t.weight * kIPow[t.string.action_phase()]});
  }
  return ks;
}

void SpinOperator::apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  if (!is_real()) throw std::logic_error("operator is not real in the spin basis");
  if (static_cast<std::size_t>(in.size()) != dimension()) throw std::invalid_argument("vector dimension mismatch");
  gather(kernels(), in, out, [](const Kernel& k) { return k.c.real(); }, true);
}

void SpinOperator::apply_serial(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  if (!is_real()) throw std::logic_error("operator is not real in the spin basis");
  if (static_cast<std::size_t>(in.size()) != dimension()) throw std::invalid_argument("vector dimension mismatch");
  gather(kernels(), in, out, [](const Kernel& k) { return k.c.real(); }, false);
}

void SpinOperator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  if (static_cast<std::size_t>(in.size()) != dimension()) throw std::invalid_argument("vector dimension mismatch");
  gather(kernels(), in, out, [](const Kernel& k) { return k.c; }, true);
}

void SpinOperator::apply_serial(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  if (static_cast<std::size_t>(in.size()) != dimension()) throw std::invalid_argument("vector dimension mismatch");
  gather(kernels(), in, out, [](const Kernel& k) { return k.c; }, false);
}

Eigen::MatrixXcd SpinOperator::to_dense() const {
  if (dimension() > kDenseLimit) throw std::length_error("dense form limited to dimension 4096");
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& k : kernels())
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto src = static_cast<std::uint64_t>(col);
      m(static_cast<Eigen::Index>(src ^ k.x), col) += k.c * parity_sign(src & k.z);
    }
  return m;
}

Eigen::MatrixXd SpinOperator::to_dense_real() const {
  if (!is_real()) throw std::logic_error("operator is not real in the spin basis");
  return to_dense().real();
}

Eigen::VectorXcd apply_string(const PauliString& s, const Eigen::VectorXcd& in) {
  const std::complex<double> c = kIPow[s.action_phase()];
  Eigen::VectorXcd out(in.size());
  for (Eigen::Index b = 0; b < in.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out[static_cast<Eigen::Index>(ub ^ s.x_mask())] = c * parity_sign(ub & s.z_mask()) * in[b];
  }
  return out;
}

Eigen::VectorXd apply_string_real(const PauliString& s, const Eigen::VectorXd& in) {
  const int k = s.action_phase();
  if (k % 2 != 0) throw std::logic_error("string is not real in the spin basis");
  const double c = k == 0 ? 1.0 : -1.0;
  Eigen::VectorXd out(in.size());
  for (Eigen::Index b = 0; b < in.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out[static_cast<Eigen::Index>(ub ^ s.x_mask())] = c * parity_sign(ub & s.z_mask()) * in[b];
  }
  return out;
}

}  // namespace kitaev
