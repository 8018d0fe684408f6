#include "gpsr/graph_kernels.hpp"

#include <algorithm>

namespace gpsr {

namespace {

// Neighbors of u that survive u's local filter, ascending.
std::vector<std::uint32_t> kept_by(std::uint32_t u, std::span<const Position> nodes,
                                   const Adjacency& adj, Planarization method) {
  std::vector<std::uint32_t> kept;
  std::vector<Position> witnesses;
  const auto& around = adj[u];
  for (std::uint32_t v : around) {
    witnesses.clear();
    for (std::uint32_t w : around)
      if (w != v) witnesses.push_back(nodes[w]);
    if (keep_edge(method, nodes[u], nodes[v], witnesses)) kept.push_back(v);
  }
  return kept;
}

bool share_endpoint(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool edges_cross(std::span<const Position> nodes, const Edge& a, const Edge& b) {
  if (share_endpoint(a, b)) return false;
  return segments_cross(Segment(nodes[a.u], nodes[a.v]), Segment(nodes[b.u], nodes[b.v])).has_value();
}

}  // namespace

std::vector<Edge> unit_disk_edges(std::span<const Position> nodes, double range) {
  std::vector<Edge> edges;
  const auto n = static_cast<std::uint32_t>(nodes.size());
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (distance(nodes[u], nodes[v]) <= range) edges.push_back({u, v});
  return edges;
}

Adjacency adjacency_of(std::size_t node_count, std::span<const Edge> edges) {
  Adjacency adj(node_count);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<Edge> planar_edges_serial(std::span<const Position> nodes, double range,
                                      Planarization method) {
  const Adjacency adj = adjacency_of(nodes.size(), unit_disk_edges(nodes, range));
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < nodes.size(); ++u)
    for (std::uint32_t v : kept_by(u, nodes, adj, method))
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<Edge> planar_edges(std::span<const Position> nodes, double range, Planarization method) {
  const Adjacency adj = adjacency_of(nodes.size(), unit_disk_edges(nodes, range));
  const auto n = static_cast<std::int64_t>(nodes.size());
  std::vector<std::vector<std::uint32_t>> per_node(nodes.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < n; ++u)
    per_node[u] = kept_by(static_cast<std::uint32_t>(u), nodes, adj, method);

  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < nodes.size(); ++u)
    for (std::uint32_t v : per_node[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::size_t count_crossings_serial(std::span<const Position> nodes, std::span<const Edge> edges) {
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_cross(nodes, edges[i], edges[j])) ++crossings;
  return crossings;
}

std::size_t count_crossings(std::span<const Position> nodes, std::span<const Edge> edges) {
  const auto m = static_cast<std::int64_t>(edges.size());
  std::size_t crossings = 0;

#pragma omp parallel for schedule(dynamic, 32) reduction(+ : crossings)
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j)
      if (edges_cross(nodes, edges[i], edges[j])) ++crossings;
  return crossings;
}

}  // namespace gpsr
