#include <doctest.h>

#include <algorithm>

#include "gpsr/graph_kernels.hpp"
#include "gpsr/oracles.hpp"
#include "support.hpp"

using namespace gpsr;

namespace {

bool subset(const std::vector<Edge>& small, const std::vector<Edge>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("unit disk edges include the boundary") {
  const std::vector<Position> nodes{{0, 0}, {100, 0}, {200.1, 0}};
  const auto edges = unit_disk_edges(nodes, 100.0);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == Edge{0, 1});
}

TEST_CASE("parallel kernels reproduce the serial reference") {
  RandomStream rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto nodes = gpsr::testing::random_positions(rng, 200, 1000, 1000);
    for (auto method : {Planarization::RNG, Planarization::GG}) {
      const auto serial = planar_edges_serial(nodes, 120.0, method);
      CHECK(planar_edges(nodes, 120.0, method) == serial);
    }
    const auto udg = unit_disk_edges(nodes, 120.0);
    CHECK(count_crossings(nodes, udg) == count_crossings_serial(nodes, udg));
  }
}

TEST_CASE("RNG and GG subgraphs: chain, planarity, connectivity on random unit-disk graphs") {
  RandomStream rng(202);
  int connected_instances = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 20 + static_cast<std::size_t>(trial % 31);
    const auto nodes = gpsr::testing::random_positions(rng, n, 300, 300);
    const auto udg = unit_disk_edges(nodes, 100.0);
    const auto gg = planar_edges_serial(nodes, 100.0, Planarization::GG);
    const auto rng_edges = planar_edges_serial(nodes, 100.0, Planarization::RNG);

    CHECK(subset(rng_edges, gg));
    CHECK(subset(gg, udg));
    CHECK(count_crossings_serial(nodes, gg) == 0);
    CHECK(count_crossings_serial(nodes, rng_edges) == 0);

    if (is_connected(n, udg)) {
      ++connected_instances;
      CHECK(is_connected(n, gg));
      CHECK(is_connected(n, rng_edges));
    }
  }
  CHECK(connected_instances > 50);
}

TEST_CASE("planarization is symmetric between endpoints") {
  // Every kept edge is kept by both endpoints' local views.
  RandomStream rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const auto nodes = gpsr::testing::random_positions(rng, 40, 300, 300);
    for (auto method : {Planarization::RNG, Planarization::GG}) {
      const auto edges = planar_edges_serial(nodes, 100.0, method);
      for (const Edge& e : edges) {
        const auto around_v = gpsr::testing::disk_neighbors(nodes, 100.0, e.v);
        const auto kept_v = planarize(nodes[e.v], around_v, method);
        CHECK(std::any_of(kept_v.begin(), kept_v.end(), [&](const Neighbor& n) { return n.id.value == e.u; }));
      }
    }
  }
}
