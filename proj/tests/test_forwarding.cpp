#include <doctest.h>

#include "gpsr/forwarding.hpp"
#include "gpsr/oracles.hpp"
#include "support.hpp"

using namespace gpsr;
using gpsr::testing::route_static;

namespace {

GpsrHeader header_to(NodeId dst, Position dest_pos) {
  GpsrHeader h;
  h.source = NodeId{0};
  h.destination = dst;
  h.dest_position = dest_pos;
  return h;
}

// A void between source 0 and destination 7: the source's neighbors (1, 2) are
// both farther from 7, and the only way round is the upper arc 1-3-4-5-6.
const std::vector<Position> kDetour{{0, 0},    {-50, 70},  {-50, -70}, {0, 140}, {80, 185},
                                    {170, 170}, {240, 100}, {280, 20},  {0, -140}};

}  // namespace

TEST_CASE("greedy_next_hop") {
  const std::vector<Neighbor> ns{{NodeId{1}, {3, 0}}, {NodeId{2}, {2, 2}}};
  CHECK(greedy_next_hop({0, 0}, {10, 0}, ns)->id == NodeId{1});

  const std::vector<Neighbor> behind{{NodeId{1}, {4, 0}}, {NodeId{2}, {4, 1}}};
  CHECK_FALSE(greedy_next_hop({5, 0}, {10, 0}, behind));
  CHECK_FALSE(greedy_next_hop({0, 0}, {10, 0}, {}));

  const std::vector<Neighbor> tie{{NodeId{9}, {5, 1}}, {NodeId{4}, {5, -1}}};
  CHECK(greedy_next_hop({0, 0}, {10, 0}, tie)->id == NodeId{4});
}

TEST_CASE("enter_perimeter") {
  const NodeId x{1}, y{2}, w{3};
  const std::vector<Neighbor> planar{{y, {4, 2}}, {w, {4, -2}}};
  const auto d = enter_perimeter(header_to(NodeId{9}, {10, 0}), x, {5, 0}, planar);
  REQUIRE(d.forward());
  CHECK(d.forward()->next.id == y);
  CHECK(d.header.mode == GpsrMode::Perimeter);
  CHECK(*d.header.lp == Position{5, 0});
  CHECK(*d.header.lf == Position{5, 0});
  CHECK(*d.header.e0 == DirectedEdge{x, y});
  CHECK(d.header.coherent());
  CHECK(d.header.hop_count == 1);
  CHECK(d.entered_perimeter);

  const auto isolated = enter_perimeter(header_to(NodeId{9}, {10, 0}), x, {5, 0}, {});
  REQUIRE(isolated.drop());
  CHECK(isolated.drop()->reason == DropReason::NoNeighbors);
}

TEST_CASE("perimeter_step recovers to greedy when closer than lp") {
  GpsrHeader h = header_to(NodeId{9}, {10, 0});
  h.mode = GpsrMode::Perimeter;
  h.lp = Position{5, 0};
  h.lf = Position{5, 0};
  h.e0 = DirectedEdge{NodeId{1}, NodeId{2}};
  const std::vector<Neighbor> ns{{NodeId{3}, {8, 1}}, {NodeId{1}, {5, 0}}};
  const auto d = perimeter_step(h, NodeId{2}, {6, 2}, Neighbor{NodeId{1}, {5, 0}}, ns, ns);
  REQUIRE(d.forward());
  CHECK(d.forward()->next.id == NodeId{3});
  CHECK(d.header.mode == GpsrMode::Greedy);
  CHECK(d.header.coherent());
  CHECK(d.exited_perimeter);
}

TEST_CASE("square void around a disconnected destination ends Unreachable") {
  // Nodes 0..3 form a square with side 2 (diagonals out of range); node 4 is far away.
  const std::vector<Position> nodes{{0, 0}, {0, 2}, {2, 2}, {2, 0}, {10, 1}};
  const auto r = route_static(nodes, 2.5, Planarization::GG, 0, 4);
  CHECK(r.path == std::vector<std::uint32_t>{0, 3, 2, 1, 0, 3});
  REQUIRE(r.drop);
  CHECK(*r.drop == DropReason::Unreachable);
  CHECK(r.entries == 1);
}

TEST_CASE("detour around a concave void is delivered") {
  const auto r = route_static(kDetour, 100.0, Planarization::GG, 0, 7);
  CHECK(r.delivered);
  CHECK(r.path == std::vector<std::uint32_t>{0, 1, 3, 4, 5, 6, 7});
  CHECK(r.entries == 1);
  CHECK(r.exits == 1);
  CHECK(r.hop_count == 6);
}

TEST_CASE("handle_packet") {
  const std::vector<Neighbor> ns{{NodeId{2}, {1, 0}}};
  SUBCASE("destination delivers") {
    const NodeView view{NodeId{9}, {10, 0}, ns};
    CHECK(handle_packet(view, header_to(NodeId{9}, {10, 0}), std::nullopt).is_deliver());
  }
  SUBCASE("ttl exhausted") {
    const NodeView view{NodeId{1}, {0, 0}, ns, Planarization::GG, 4};
    GpsrHeader h = header_to(NodeId{9}, {10, 0});
    h.hop_count = 4;
    const auto d = handle_packet(view, h, std::nullopt);
    REQUIRE(d.drop());
    CHECK(d.drop()->reason == DropReason::Ttl);
  }
  SUBCASE("no neighbors") {
    const NodeView view{NodeId{1}, {0, 0}, {}};
    const auto d = handle_packet(view, header_to(NodeId{9}, {10, 0}), std::nullopt);
    REQUIRE(d.drop());
    CHECK(d.drop()->reason == DropReason::NoNeighbors);
  }
  SUBCASE("origination takes the greedy hop") {
    const NodeView view{NodeId{1}, {0, 0}, ns};
    const auto d = handle_packet(view, header_to(NodeId{9}, {10, 0}), std::nullopt);
    REQUIRE(d.forward());
    CHECK(d.forward()->next.id == NodeId{2});
    CHECK(d.header.hop_count == 1);
  }
}

TEST_CASE("dense line is routed greedily with strictly decreasing distance") {
  std::vector<Position> line;
  for (int i = 0; i < 10; ++i) line.push_back({80.0 * i, 0});
  const auto r = route_static(line, 100.0, Planarization::GG, 0, 9);
  REQUIRE(r.delivered);
  CHECK(r.hop_count == 9);
  CHECK(r.entries == 0);
  for (std::size_t k = 1; k < r.path.size(); ++k)
    CHECK(distance(line[r.path[k]], line[9]) < distance(line[r.path[k - 1]], line[9]));
}

TEST_CASE("delivery completeness on random connected graphs") {
  RandomStream rng(404);
  for (int instance = 0; instance < 50; ++instance) {
    const auto nodes = gpsr::testing::connected_positions(rng, 30, 300, 100.0);
    const auto planar = planar_edges_serial(nodes, 100.0, Planarization::GG);
    for (std::uint32_t s = 0; s < nodes.size(); ++s) {
      const auto hops = bfs_hops(nodes, 100.0, s);
      for (std::uint32_t t = 0; t < nodes.size(); ++t) {
        if (s == t) continue;
        const auto r = route_static(nodes, 100.0, Planarization::GG, s, t);
        REQUIRE_MESSAGE(r.delivered, "instance ", instance, " ", s, "->", t);
        CHECK(r.hop_count >= *hops[t]);

        // Greedy monotonicity, header coherence and the per-episode perimeter bound.
        std::size_t episode = 0;
        for (std::size_t k = 0; k < r.headers.size(); ++k) {
          const GpsrHeader& h = r.headers[k];
          CHECK(h.coherent());
          if (h.mode == GpsrMode::Greedy && k > 0 && r.headers[k - 1].mode == GpsrMode::Greedy)
            CHECK(distance(nodes[r.path[k]], nodes[t]) < distance(nodes[r.path[k - 1]], nodes[t]));
          episode = h.mode == GpsrMode::Perimeter ? episode + 1 : 0;
          CHECK(episode <= 2 * planar.size());
        }
      }
    }
  }
}

TEST_CASE("unreachable destinations terminate with a drop") {
  RandomStream rng(505);
  for (int instance = 0; instance < 20; ++instance) {
    // Two clusters separated by more than the radio range.
    auto nodes = gpsr::testing::random_positions(rng, 15, 150, 150);
    for (auto p : gpsr::testing::random_positions(rng, 15, 150, 150)) nodes.push_back({p.x + 300, p.y});
    const auto reach = bfs_reachable(nodes, 100.0);
    for (std::uint32_t s = 0; s < nodes.size(); s += 3) {
      for (std::uint32_t t = 0; t < nodes.size(); ++t) {
        if (s == t) continue;
        const auto r = route_static(nodes, 100.0, Planarization::RNG, s, t);
        if (reach.count({s, t})) {
          CHECK(r.delivered);
        } else {
          REQUIRE(r.drop);
          CHECK((*r.drop == DropReason::Unreachable || *r.drop == DropReason::Ttl));
        }
      }
    }
  }
}
