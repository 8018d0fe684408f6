#include "gpsr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>

namespace gpsr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(const Position& a, const Position& b, const Position& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool lex_less(const Position& p, const Position& q) { return std::tie(p.x, p.y) < std::tie(q.x, q.y); }

std::pair<Position, Position> canonical(const Segment& s) {
  if (lex_less(s.b(), s.a())) return {s.b(), s.a()};
  return {s.a(), s.b()};
}

}  // namespace

std::string_view to_string(Planarization method) {
  return method == Planarization::RNG ? "RNG" : "GG";
}

std::optional<Planarization> parse_planarization(std::string_view text) {
  if (text == "RNG") return Planarization::RNG;
  if (text == "GG") return Planarization::GG;
  return std::nullopt;
}

bool is_finite(const Position& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Segment::Segment(Position a, Position b) : a_(a), b_(b) {
  if (!is_finite(a) || !is_finite(b)) throw GeometryError("segment endpoint is not finite");
  if (a == b) throw GeometryError("zero-length segment");
}

double distance(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double distance_sq(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

int orientation(const Position& a, const Position& b, const Position& c) {
  const double det = cross(a, b, c);
  return (det > 0.0) - (det < 0.0);
}

double bearing(const Position& from, const Position& to) {
  double angle = std::atan2(to.y - from.y, to.x - from.x);
  if (angle < 0.0) angle += kTwoPi;
  if (angle >= kTwoPi) angle = 0.0;
  return angle;
}

bool rng_keep_edge(const Position& u, const Position& v, std::span<const Position> witnesses) {
  const double duv = distance(u, v);
  return std::all_of(witnesses.begin(), witnesses.end(), [&](const Position& w) {
    return duv <= std::max(distance(u, w), distance(v, w));
  });
}

bool gg_keep_edge(const Position& u, const Position& v, std::span<const Position> witnesses) {
  const double duv = distance_sq(u, v);
  return std::all_of(witnesses.begin(), witnesses.end(), [&](const Position& w) {
    return duv < distance_sq(u, w) + distance_sq(v, w);
  });
}

bool keep_edge(Planarization method, const Position& u, const Position& v,
               std::span<const Position> witnesses) {
  return method == Planarization::RNG ? rng_keep_edge(u, v, witnesses) : gg_keep_edge(u, v, witnesses);
}

std::vector<Neighbor> planarize(const Position& self, std::span<const Neighbor> neighbors,
                                Planarization method) {
  std::vector<Neighbor> kept;
  std::vector<Position> witnesses;
  witnesses.reserve(neighbors.size());
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    witnesses.clear();
    for (std::size_t j = 0; j < neighbors.size(); ++j)
      if (j != i) witnesses.push_back(neighbors[j].position);
    if (keep_edge(method, self, neighbors[i].position, witnesses)) kept.push_back(neighbors[i]);
  }
  return kept;
}

std::optional<Position> segments_cross(const Segment& s1, const Segment& s2) {
  auto [p1, p2] = canonical(s1);
  auto [q1, q2] = canonical(s2);
  if (std::tie(q1.x, q1.y, q2.x, q2.y) < std::tie(p1.x, p1.y, p2.x, p2.y)) {
    std::swap(p1, q1);
    std::swap(p2, q2);
  }

  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 >= 0 || o3 * o4 >= 0) return std::nullopt;

  const double rx = p2.x - p1.x;
  const double ry = p2.y - p1.y;
  const double sx = q2.x - q1.x;
  const double sy = q2.y - q1.y;
  const double denom = rx * sy - ry * sx;
  const double t = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / denom;
  return Position{p1.x + t * rx, p1.y + t * ry};
}

Neighbor right_hand_next(const Position& self, double reference_bearing,
                         std::span<const Neighbor> planar_neighbors) {
  if (planar_neighbors.empty()) throw GeometryError("right_hand_next: no planar neighbors");

  auto sweep_key = [&](const Neighbor& n) {
    double delta = bearing(self, n.position) - reference_bearing;
    if (delta < 0.0) delta += kTwoPi;
    if (delta <= 0.0 || delta > kTwoPi) delta = kTwoPi;
    return std::make_tuple(delta, distance_sq(self, n.position), n.id);
  };

  const Neighbor* best = &planar_neighbors.front();
  auto best_key = sweep_key(*best);
  for (const Neighbor& n : planar_neighbors.subspan(1)) {
    auto key = sweep_key(n);
    if (key < best_key) {
      best = &n;
      best_key = key;
    }
  }
  return *best;
}

Neighbor right_hand_next(const Position& self, const Position& came_from,
                         std::span<const Neighbor> planar_neighbors) {
  return right_hand_next(self, bearing(self, came_from), planar_neighbors);
}

}  // namespace gpsr
