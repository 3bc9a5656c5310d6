#pragma once

// Signed Pauli strings on up to 64 spins.
//
// A string is i^phase times a tensor product of literal single-site Paulis.
// Site j carries (x_j, z_j): I = (0,0), X = (1,0), Y = (1,1), Z = (0,1).

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kitaev {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

class PauliString {
 public:
  static constexpr int kMaxSites = 64;

  PauliString() = default;
  PauliString(std::initializer_list<std::pair<int, Pauli>> factors);

  static PauliString single(int site, Pauli p);
  static PauliString identity() { return {}; }

  // Replaces the factor at `site`; the phase is untouched.
  PauliString& set(int site, Pauli p);
  Pauli at(int site) const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase() const { return phase_; }  // coefficient = i^phase
  std::complex<double> coefficient() const;
  int weight() const;
  std::vector<int> support() const;
  bool is_scalar() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ % 2 == 0; }

  // Basis action P|b> = i^k (-1)^popcount(b & z) |b ^ x>; returns k in [0, 4).
  int action_phase() const;

  PauliString operator*(const PauliString& o) const;
  PauliString times_i(int k) const;
  PauliString inverse() const;
  bool commutes_with(const PauliString& o) const;

  bool operator==(const PauliString& o) const = default;

  std::string to_string() const;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

// a b a^-1 b^-1; a scalar +1 or -1 for any two Pauli strings.
PauliString group_commutator(const PauliString& a, const PauliString& b);

}  // namespace kitaev
