#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kitaev {

enum class LinkKind : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<LinkKind, 3> kAllKinds = {LinkKind::X, LinkKind::Y, LinkKind::Z};

inline constexpr int index_of(LinkKind k) { return static_cast<int>(k); }

inline char to_char(LinkKind k) {
  switch (k) {
    case LinkKind::X: return 'x';
    case LinkKind::Y: return 'y';
    case LinkKind::Z: return 'z';
  }
  return '?';
}

inline LinkKind kind_from_char(char c) {
  switch (c) {
    case 'x': case 'X': return LinkKind::X;
    case 'y': case 'Y': return LinkKind::Y;
    case 'z': case 'Z': return LinkKind::Z;
    default: throw std::invalid_argument(std::string("unknown link kind '") + c + "'");
  }
}

// Bond strengths (J_x, J_y, J_z). Only the non-negative octant is modeled.
struct Couplings {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;

  double operator[](LinkKind k) const {
    switch (k) {
      case LinkKind::X: return jx;
      case LinkKind::Y: return jy;
      case LinkKind::Z: return jz;
    }
    return 0.0;
  }

  double sum() const { return jx + jy + jz; }

  void validate() const {
    if (!(jx >= 0.0 && jy >= 0.0 && jz >= 0.0) || !std::isfinite(sum())) {
      throw std::invalid_argument("couplings must be non-negative and finite");
    }
  }

  friend bool operator==(const Couplings&, const Couplings&) = default;
};

}  // namespace kitaev
