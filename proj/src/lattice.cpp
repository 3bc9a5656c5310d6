#include "kitaev/lattice.hpp"

#include <stdexcept>
#include <string>

namespace kitaev {

namespace {

int floor_mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

int floor_div(int a, int n) { return (a - floor_mod(a, n)) / n; }

Cell shift(Cell c, int dx, int dy) { return {c.x + dx, c.y + dy}; }

}  // namespace

LatticeSpec::LatticeSpec(int n1, int n2, int twist) : n1_(n1), n2_(n2), twist_(0) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("lattice dimensions must be positive, got " + std::to_string(n1) +
                                "x" + std::to_string(n2));
  }
  twist_ = floor_mod(twist, n1);
}

LatticeSpec build_lattice(int n1, int n2, int twist) { return LatticeSpec(n1, n2, twist); }

Cell LatticeSpec::canonical(Cell c) const {
  const int wraps = floor_div(c.y, n2_);
  const int y = c.y - wraps * n2_;
  const int x = floor_mod(c.x - wraps * twist_, n1_);
  return {x, y};
}

int LatticeSpec::cell_index(Cell c) const {
  const Cell k = canonical(c);
  return k.y * n1_ + k.x;
}

Cell LatticeSpec::cell_at(int index) const {
  if (index < 0 || index >= num_cells()) throw std::out_of_range("cell index out of range");
  return {index % n1_, index / n1_};
}

LinkRef LatticeSpec::link_at(int index) const {
  if (index < 0 || index >= num_links()) throw std::out_of_range("link index out of range");
  return {cell_at(index / 3), static_cast<LinkKind>(index % 3)};
}

std::pair<int, int> LatticeSpec::endpoints(int link) const {
  const LinkRef l = link_at(link);
  const int a = site_a(l.cell);
  switch (l.kind) {
    case LinkKind::X: return {a, site_b(shift(l.cell, 1, 0))};
    case LinkKind::Y: return {a, site_b(shift(l.cell, 0, 1))};
    case LinkKind::Z: return {a, site_b(l.cell)};
  }
  return {a, a};
}

int LatticeSpec::site_link(int site, LinkKind kind) const {
  if (site < 0 || site >= num_sites()) throw std::out_of_range("site index out of range");
  const Cell c = cell_at(site / 2);
  if (is_a_site(site) || kind == LinkKind::Z) return link_index({c, kind});
  if (kind == LinkKind::X) return link_index({shift(c, -1, 0), kind});
  return link_index({shift(c, 0, -1), kind});
}

int LatticeSpec::neighbor(int site, LinkKind kind) const {
  const auto [a, b] = endpoints(site_link(site, kind));
  return is_a_site(site) ? b : a;
}

std::array<int, 6> LatticeSpec::plaquette_links(int p) const {
  const Cell s = cell_at(p);
  const Cell left = shift(s, -1, 0);
  const Cell upleft = shift(s, -1, 1);
  return {link_index({s, LinkKind::Z}),      link_index({left, LinkKind::X}),
          link_index({left, LinkKind::Y}),   link_index({upleft, LinkKind::Z}),
          link_index({upleft, LinkKind::X}), link_index({s, LinkKind::Y})};
}

std::array<int, 6> LatticeSpec::plaquette_sites(int p) const {
  const Cell s = cell_at(p);
  return {site_a(s),
          site_b(s),
          site_a(shift(s, -1, 0)),
          site_b(shift(s, -1, 1)),
          site_a(shift(s, -1, 1)),
          site_b(shift(s, 0, 1))};
}

PlaquetteRef LatticeSpec::plaquette(int p) const {
  PlaquetteRef ref;
  ref.cell = cell_at(p);
  const auto links = plaquette_links(p);
  for (std::size_t i = 0; i < links.size(); ++i) ref.boundary[i] = link_at(links[i]);
  return ref;
}

std::array<int, 2> LatticeSpec::link_plaquettes(int link) const {
  const LinkRef l = link_at(link);
  const Cell c = l.cell;
  switch (l.kind) {
    case LinkKind::X: return {cell_index(shift(c, 1, 0)), cell_index(shift(c, 1, -1))};
    case LinkKind::Y: return {cell_index(shift(c, 1, 0)), cell_index(c)};
    case LinkKind::Z: return {cell_index(c), cell_index(shift(c, 1, -1))};
  }
  return {0, 0};
}

GaugeConfig::GaugeConfig(const LatticeSpec& spec, std::int8_t fill)
    : spec_(spec), values_(static_cast<std::size_t>(spec.num_links()), fill) {
  if (fill != 1 && fill != -1) throw std::invalid_argument("gauge values must be +1 or -1");
}

GaugeConfig::GaugeConfig(const LatticeSpec& spec, std::vector<std::int8_t> values)
    : spec_(spec), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(spec_.num_links())) {
    throw std::invalid_argument("gauge assignment must cover every link exactly once");
  }
  for (auto v : values_) {
    if (v != 1 && v != -1) throw std::invalid_argument("gauge values must be +1 or -1");
  }
}

GaugeConfig GaugeConfig::with_flipped(int link) const {
  if (link < 0 || link >= spec_.num_links()) throw std::out_of_range("unknown link");
  GaugeConfig out = *this;
  out.values_[static_cast<std::size_t>(link)] = static_cast<std::int8_t>(-out.values_[link]);
  return out;
}

GaugeConfig vortex_free_gauge(const LatticeSpec& spec) { return GaugeConfig(spec, 1); }

GaugeConfig vortex_lattice_gauge(const LatticeSpec& spec) {
  if (spec.n1() % 2 != 0) {
    throw std::invalid_argument("vortex-lattice pattern cannot close: n1 = " +
                                std::to_string(spec.n1()) + " is odd");
  }
  if (spec.twist() % 2 != 0) {
    throw std::invalid_argument("vortex-lattice pattern cannot close with odd twist");
  }
  std::vector<std::int8_t> values(static_cast<std::size_t>(spec.num_links()), 1);
  for (int c = 0; c < spec.num_cells(); ++c) {
    if (spec.cell_at(c).x % 2 == 1) values[static_cast<std::size_t>(3 * c + 2)] = -1;
  }
  return GaugeConfig(spec, std::move(values));
}

GaugeConfig flip_link(const GaugeConfig& g, const LinkRef& l) {
  const LatticeSpec& spec = g.spec();
  const Cell k = spec.canonical(l.cell);
  if (!(k == l.cell)) throw std::out_of_range("link cell outside the lattice");
  return g.with_flipped(spec.link_index(l));
}

GaugeConfig gauge_transform(const GaugeConfig& g, int site) {
  GaugeConfig out = g;
  for (LinkKind k : kAllKinds) out = out.with_flipped(g.spec().site_link(site, k));
  return out;
}

int plaquette_flux(const GaugeConfig& g, int p) {
  if (p < 0 || p >= g.spec().num_plaquettes()) throw std::out_of_range("plaquette out of range");
  int flux = 1;
  for (int l : g.spec().plaquette_links(p)) flux *= g.value(l);
  return flux;
}

int plaquette_flux(const GaugeConfig& g, const PlaquetteRef& p) {
  return plaquette_flux(g, g.spec().cell_index(p.cell));
}

std::vector<int> all_fluxes(const GaugeConfig& g) {
  std::vector<int> out(static_cast<std::size_t>(g.spec().num_plaquettes()));
  for (int p = 0; p < g.spec().num_plaquettes(); ++p) out[static_cast<std::size_t>(p)] = plaquette_flux(g, p);
  return out;
}

}  // namespace kitaev
