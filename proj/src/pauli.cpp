#include "kitaev/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace kitaev {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_site(int site) {
  if (site < 0 || site >= PauliString::kMaxSites) throw std::out_of_range("pauli site out of range");
}

}  // namespace

char to_char(Pauli p) {
  constexpr char names[] = {'I', 'X', 'Y', 'Z'};
  return names[static_cast<int>(p)];
}

PauliString::PauliString(std::initializer_list<std::pair<int, Pauli>> factors) {
  for (const auto& [site, p] : factors) {
    if (at(site) != Pauli::I) throw std::invalid_argument("repeated site in pauli string");
    set(site, p);
  }
}

PauliString PauliString::single(int site, Pauli p) {
  PauliString s;
  s.set(site, p);
  return s;
}

PauliString& PauliString::set(int site, Pauli p) {
  check_site(site);
  const std::uint64_t bit = std::uint64_t{1} << site;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
  return *this;
}

Pauli PauliString::at(int site) const {
  check_site(site);
  const bool x = (x_ >> site) & 1u;
  const bool z = (z_ >> site) & 1u;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

std::complex<double> PauliString::coefficient() const { return kIPow[phase_]; }

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (std::uint64_t m = x_ | z_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int PauliString::action_phase() const {
  // Y = i X Z on each site.
  return (phase_ + std::popcount(x_ & z_)) & 3;
}

PauliString PauliString::operator*(const PauliString& o) const {
  const std::uint64_t x1 = x_, z1 = z_, x2 = o.x_, z2 = o.z_;
  const std::uint64_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
  const std::uint64_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  const int up = std::popcount((X1 & Y2) | (Y1 & Z2) | (Z1 & X2));
  const int down = std::popcount((Y1 & X2) | (Z1 & Y2) | (X1 & Z2));
  PauliString r;
  r.x_ = x1 ^ x2;
  r.z_ = z1 ^ z2;
  r.phase_ = (phase_ + o.phase_ + up + 3 * down) & 3;
  return r;
}

PauliString PauliString::times_i(int k) const {
  PauliString r = *this;
  r.phase_ = (phase_ + (k % 4 + 4)) & 3;
  return r;
}

PauliString PauliString::inverse() const {
  PauliString r = *this;
  r.phase_ = (4 - phase_) & 3;
  return r;
}

bool PauliString::commutes_with(const PauliString& o) const {
  return std::popcount((x_ & o.z_) ^ (z_ & o.x_)) % 2 == 0;
}

std::string PauliString::to_string() const {
  static const char* prefix[] = {"+", "+i", "-", "-i"};
  std::string s = prefix[phase_];
  if (is_scalar()) return s + "I";
  for (int site : support()) {
    s += ' ';
    s += to_char(at(site));
    s += std::to_string(site);
  }
  return s;
}

PauliString group_commutator(const PauliString& a, const PauliString& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace kitaev
