#include <random>

#include <gtest/gtest.h>

#include "kitaev/lattice.hpp"

using namespace kitaev;

namespace {

int count_negative(const std::vector<int>& fluxes) {
  return static_cast<int>(std::count(fluxes.begin(), fluxes.end(), -1));
}

GaugeConfig random_gauge(const LatticeSpec& spec, std::mt19937& rng) {
  std::vector<std::int8_t> v(static_cast<std::size_t>(spec.num_links()));
  for (auto& x : v) x = (rng() & 1) ? 1 : -1;
  return GaugeConfig(spec, v);
}

const LatticeSpec kSpecs[] = {{1, 1}, {2, 2}, {2, 4}, {3, 2}, {4, 4}, {3, 5}, {2, 4, 1}, {4, 2, 2}, {5, 3, 2}};

}  // namespace

TEST(lattice, counts) {
  const LatticeSpec a = build_lattice(2, 2);
  EXPECT_EQ(a.num_sites(), 8);
  EXPECT_EQ(a.num_links(), 12);
  EXPECT_EQ(a.num_plaquettes(), 4);
  const LatticeSpec b = build_lattice(2, 4);
  EXPECT_EQ(b.num_sites(), 16);
  EXPECT_EQ(b.num_links(), 24);
  EXPECT_EQ(b.num_plaquettes(), 8);
  EXPECT_THROW(build_lattice(0, 2), std::invalid_argument);
  EXPECT_THROW(build_lattice(2, 0), std::invalid_argument);
}

TEST(lattice, smallest_torus_links_share_endpoints) {
  const LatticeSpec s = build_lattice(1, 1);
  EXPECT_TRUE(s.degenerate());
  EXPECT_EQ(s.num_sites(), 2);
  for (int l = 0; l < 3; ++l) EXPECT_EQ(s.endpoints(l), std::make_pair(0, 1));
}

TEST(lattice, one_link_of_each_kind_per_site) {
  for (const auto& s : kSpecs) {
    std::vector<int> seen(static_cast<std::size_t>(s.num_sites() * 3), 0);
    for (int l = 0; l < s.num_links(); ++l) {
      const auto [a, b] = s.endpoints(l);
      ASSERT_TRUE(s.is_a_site(a));
      ASSERT_FALSE(s.is_a_site(b));
      ++seen[static_cast<std::size_t>(3 * a + index_of(s.link_kind(l)))];
      ++seen[static_cast<std::size_t>(3 * b + index_of(s.link_kind(l)))];
    }
    for (int v : seen) EXPECT_EQ(v, 1);
    for (int site = 0; site < s.num_sites(); ++site)
      for (LinkKind k : kAllKinds) {
        const int l = s.site_link(site, k);
        EXPECT_EQ(s.link_kind(l), k);
        const auto [a, b] = s.endpoints(l);
        EXPECT_EQ(s.neighbor(site, k), site == a ? b : a);
      }
  }
}

TEST(lattice, plaquette_boundary_is_a_closed_hexagon) {
  for (const auto& s : kSpecs) {
    for (int p = 0; p < s.num_plaquettes(); ++p) {
      const auto links = s.plaquette_links(p);
      const auto sites = s.plaquette_sites(p);
      int per_kind[3] = {};
      for (int i = 0; i < 6; ++i) {
        ++per_kind[index_of(s.link_kind(links[i]))];
        // link i joins boundary sites i and i+1
        const auto [a, b] = s.endpoints(links[i]);
        const int u = sites[i], v = sites[(i + 1) % 6];
        EXPECT_TRUE((a == u && b == v) || (a == v && b == u)) << "plaquette " << p << " link " << i;
        // the outward link at each site is not on the boundary
        EXPECT_NE(s.link_kind(s.site_link(sites[i], LatticeSpec::plaquette_outward_kinds()[i])),
                  s.link_kind(links[i]));
      }
      for (int k : per_kind) EXPECT_EQ(k, 2);
    }
  }
}

TEST(lattice, link_plaquettes_contain_the_link) {
  for (const auto& s : kSpecs) {
    for (int l = 0; l < s.num_links(); ++l) {
      for (int p : s.link_plaquettes(l)) {
        const auto links = s.plaquette_links(p);
        EXPECT_NE(std::find(links.begin(), links.end(), l), links.end());
      }
    }
  }
}

TEST(lattice, twisted_identification) {
  const LatticeSpec s(4, 2, 1);
  EXPECT_EQ(s.cell_index({1, 2}), s.cell_index({0, 0}));
  EXPECT_EQ(s.cell_index({0, 2}), s.cell_index({3, 0}));
  EXPECT_EQ(s.cell_index({-1, 0}), s.cell_index({3, 0}));
  EXPECT_EQ(s.cell_index({0, -2}), s.cell_index({1, 0}));
}

TEST(gauge, vortex_free_has_no_vortices) {
  for (const auto& s : kSpecs) {
    for (int f : all_fluxes(vortex_free_gauge(s))) EXPECT_EQ(f, 1);
  }
}

TEST(gauge, vortex_lattice_has_a_vortex_everywhere) {
  for (const auto& s : {LatticeSpec(2, 2), LatticeSpec(4, 2), LatticeSpec(4, 4), LatticeSpec(6, 3), LatticeSpec(4, 2, 2)}) {
    for (int f : all_fluxes(vortex_lattice_gauge(s))) EXPECT_EQ(f, -1);
  }
  EXPECT_THROW(vortex_lattice_gauge(LatticeSpec(3, 2)), std::invalid_argument);
  EXPECT_THROW(vortex_lattice_gauge(LatticeSpec(4, 2, 1)), std::invalid_argument);
}

TEST(gauge, all_negative_on_smallest_torus_is_flux_free) {
  const LatticeSpec s(1, 1);
  EXPECT_EQ(plaquette_flux(GaugeConfig(s, -1), 0), 1);
}

TEST(gauge, flip_negates_exactly_the_two_adjacent_fluxes) {
  for (const auto& s : {LatticeSpec(4, 4), LatticeSpec(3, 5), LatticeSpec(2, 4, 1)}) {
    const GaugeConfig vf = vortex_free_gauge(s);
    for (int l = 0; l < s.num_links(); ++l) {
      const GaugeConfig g = flip_link(vf, s.link_at(l));
      const auto fl = all_fluxes(g);
      EXPECT_EQ(count_negative(fl), 2);
      for (int p : s.link_plaquettes(l)) EXPECT_EQ(fl[static_cast<std::size_t>(p)], -1);
      EXPECT_EQ(flip_link(g, s.link_at(l)), vf);
    }
  }
  const LatticeSpec s(4, 4);
  EXPECT_EQ(count_negative(all_fluxes(flip_link(vortex_free_gauge(s), {{1, 2}, LinkKind::Z}))), 2);
  const GaugeConfig vl = flip_link(vortex_lattice_gauge(LatticeSpec(2, 2)), {{0, 0}, LinkKind::X});
  const auto fl = all_fluxes(vl);
  EXPECT_EQ(std::count(fl.begin(), fl.end(), 1), 2);
}

TEST(gauge, unknown_link_is_rejected) {
  const GaugeConfig g = vortex_free_gauge(LatticeSpec(2, 2));
  EXPECT_THROW(flip_link(g, {{2, 0}, LinkKind::X}), std::out_of_range);
  EXPECT_THROW(g.with_flipped(12), std::out_of_range);
}

TEST(gauge, total_flux_is_one_and_site_transforms_leave_fluxes) {
  std::mt19937 rng(11);
  for (const auto& s : kSpecs) {
    for (int trial = 0; trial < 20; ++trial) {
      const GaugeConfig g = random_gauge(s, rng);
      const auto fl = all_fluxes(g);
      EXPECT_EQ(count_negative(fl) % 2, 0);
      const int site = static_cast<int>(rng() % static_cast<unsigned>(s.num_sites()));
      EXPECT_EQ(all_fluxes(gauge_transform(g, site)), fl);
    }
  }
}
