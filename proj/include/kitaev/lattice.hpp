#pragma once

// Periodic honeycomb lattice on an effective square lattice of two-site cells.
//
// Cell s = (x, y) holds sites A(s) and B(s) joined by the z-link. The x-link
// joins A(s) to B(s + e_x), the y-link joins A(s) to B(s + e_y). Periodicity is
// (x, y) ~ (x + n1, y) ~ (x + twist, y + n2); twist = 0 is the plain n1 x n2
// torus.
//
// Orientation convention: every link is stored once, as u_{jk} with j the A
// site. The flux of a plaquette is the product of the stored values of its six
// boundary links, which are listed clockwise starting from the z-link of the
// plaquette's own cell.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "kitaev/couplings.hpp"

namespace kitaev {

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct LinkRef {
  Cell cell;
  LinkKind kind = LinkKind::Z;
  friend bool operator==(const LinkRef&, const LinkRef&) = default;
};

struct PlaquetteRef {
  Cell cell;
  std::array<LinkRef, 6> boundary;
};

class LatticeSpec {
 public:
  LatticeSpec(int n1, int n2, int twist = 0);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int twist() const { return twist_; }

  int num_cells() const { return n1_ * n2_; }
  int num_sites() const { return 2 * num_cells(); }
  int num_links() const { return 3 * num_cells(); }
  int num_plaquettes() const { return num_cells(); }

  // True when some link or plaquette wraps onto itself (n1 or n2 below 2).
  bool degenerate() const { return n1_ < 2 || n2_ < 2; }

  Cell canonical(Cell c) const;
  int cell_index(Cell c) const;
  Cell cell_at(int index) const;

  int site_a(Cell c) const { return 2 * cell_index(c); }
  int site_b(Cell c) const { return 2 * cell_index(c) + 1; }
  bool is_a_site(int site) const { return site % 2 == 0; }

  int link_index(const LinkRef& l) const { return 3 * cell_index(l.cell) + index_of(l.kind); }
  LinkRef link_at(int index) const;
  LinkKind link_kind(int index) const { return static_cast<LinkKind>(index % 3); }

  // (A endpoint, B endpoint) of a link.
  std::pair<int, int> endpoints(int link) const;

  // Link of the given kind incident on a site.
  int site_link(int site, LinkKind kind) const;
  // Site at the other end of a site's link of the given kind.
  int neighbor(int site, LinkKind kind) const;

  PlaquetteRef plaquette(int p) const;
  std::array<int, 6> plaquette_links(int p) const;
  // Boundary sites in clockwise order, A(s) first.
  std::array<int, 6> plaquette_sites(int p) const;
  // Kind of the link at each boundary site that is not on the boundary.
  static constexpr std::array<LinkKind, 6> plaquette_outward_kinds() {
    return {LinkKind::X, LinkKind::Y, LinkKind::Z, LinkKind::X, LinkKind::Y, LinkKind::Z};
  }
  // The two plaquettes that share a link (equal on degenerate lattices).
  std::array<int, 2> link_plaquettes(int link) const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  int n1_;
  int n2_;
  int twist_;
};

LatticeSpec build_lattice(int n1, int n2, int twist = 0);

class GaugeConfig {
 public:
  explicit GaugeConfig(const LatticeSpec& spec, std::int8_t fill = 1);
  GaugeConfig(const LatticeSpec& spec, std::vector<std::int8_t> values);

  const LatticeSpec& spec() const { return spec_; }
  int value(int link) const { return values_.at(link); }
  int value(const LinkRef& l) const { return value(spec_.link_index(l)); }
  const std::vector<std::int8_t>& values() const { return values_; }

  GaugeConfig with_flipped(int link) const;

  friend bool operator==(const GaugeConfig&, const GaugeConfig&) = default;

 private:
  LatticeSpec spec_;
  std::vector<std::int8_t> values_;
};

GaugeConfig vortex_free_gauge(const LatticeSpec& spec);
// Alternating z-link signs along x. Needs even n1 and even twist.
GaugeConfig vortex_lattice_gauge(const LatticeSpec& spec);
GaugeConfig flip_link(const GaugeConfig& g, const LinkRef& l);
// Negates the three links at one site; leaves every flux unchanged.
GaugeConfig gauge_transform(const GaugeConfig& g, int site);

int plaquette_flux(const GaugeConfig& g, int p);
int plaquette_flux(const GaugeConfig& g, const PlaquetteRef& p);
std::vector<int> all_fluxes(const GaugeConfig& g);

}  // namespace kitaev
