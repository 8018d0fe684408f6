#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gpsr/types.hpp"

namespace gpsr {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Planarization { RNG, GG };

std::string_view to_string(Planarization method);
// Accepts "RNG" / "GG"; anything else yields nullopt.
std::optional<Planarization> parse_planarization(std::string_view text);

bool is_finite(const Position& p);

// Non-degenerate segment; construction rejects a == b and non-finite endpoints.
class Segment {
 public:
  Segment(Position a, Position b);

  const Position& a() const { return a_; }
  const Position& b() const { return b_; }

 private:
  Position a_;
  Position b_;
};

double distance(const Position& a, const Position& b);
double distance_sq(const Position& a, const Position& b);

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Position& a, const Position& b, const Position& c);

// Bearing of `to` as seen from `from`, radians in [0, 2*pi), counterclockwise from +x.
double bearing(const Position& from, const Position& to);

// Relative neighborhood graph test: keep (u, v) iff d(u,v) <= max(d(u,w), d(v,w)) for every witness.
bool rng_keep_edge(const Position& u, const Position& v, std::span<const Position> witnesses);

// Gabriel graph test: keep (u, v) iff d^2(u,v) < d^2(u,w) + d^2(v,w) for every witness.
bool gg_keep_edge(const Position& u, const Position& v, std::span<const Position> witnesses);

bool keep_edge(Planarization method, const Position& u, const Position& v,
               std::span<const Position> witnesses);

// Local planarization: every other neighbor acts as a witness against the edge self -> neighbor.
// Output preserves input order.
std::vector<Neighbor> planarize(const Position& self, std::span<const Neighbor> neighbors,
                                Planarization method);

// Proper crossing point of two segments. Touching at an endpoint, collinear overlap and
// disjoint segments all report nullopt. The result is bit-identical under swapping the
// arguments or reversing either segment.
std::optional<Position> segments_cross(const Segment& s1, const Segment& s2);

// Right-hand rule sweep: the neighbor first met rotating counterclockwise from
// `reference_bearing`. A neighbor lying exactly on the reference bearing is taken last.
// Equal bearings resolve by smaller distance, then smaller id. Throws on empty input.
Neighbor right_hand_next(const Position& self, double reference_bearing,
                         std::span<const Neighbor> planar_neighbors);

// Same sweep with the reference taken as the bearing toward the node the packet came from.
Neighbor right_hand_next(const Position& self, const Position& came_from,
                         std::span<const Neighbor> planar_neighbors);

}  // namespace gpsr
