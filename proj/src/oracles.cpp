#include "gpsr/oracles.hpp"

#include <algorithm>
#include <deque>

namespace gpsr {

namespace {

std::vector<std::optional<std::uint32_t>> bfs(const Adjacency& adj, std::uint32_t source) {
  std::vector<std::optional<std::uint32_t>> hops(adj.size());
  std::deque<std::uint32_t> frontier{source};
  hops[source] = 0;
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop_front();
    for (std::uint32_t v : adj[u]) {
      if (hops[v]) continue;
      hops[v] = *hops[u] + 1;
      frontier.push_back(v);
    }
  }
  return hops;
}

}  // namespace

std::set<IndexPair> bfs_reachable(std::span<const Position> nodes, double range) {
  const Adjacency adj = adjacency_of(nodes.size(), unit_disk_edges(nodes, range));
  std::set<IndexPair> pairs;
  for (std::uint32_t u = 0; u < nodes.size(); ++u) {
    const auto hops = bfs(adj, u);
    for (std::uint32_t v = 0; v < nodes.size(); ++v)
      if (hops[v]) pairs.emplace(u, v);
  }
  return pairs;
}

std::vector<std::optional<std::uint32_t>> bfs_hops(std::span<const Position> nodes, double range,
                                                   std::uint32_t source) {
  return bfs(adjacency_of(nodes.size(), unit_disk_edges(nodes, range)), source);
}

std::vector<std::uint32_t> components(std::size_t node_count, std::span<const Edge> edges) {
  const Adjacency adj = adjacency_of(node_count, edges);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(node_count, kUnset);
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < node_count; ++s) {
    if (label[s] != kUnset) continue;
    const auto hops = bfs(adj, s);
    for (std::uint32_t v = 0; v < node_count; ++v)
      if (hops[v]) label[v] = next;
    ++next;
  }
  return label;
}

bool is_connected(std::size_t node_count, std::span<const Edge> edges) {
  if (node_count == 0) return true;
  const auto label = components(node_count, edges);
  return std::all_of(label.begin(), label.end(), [&](std::uint32_t l) { return l == label.front(); });
}

}  // namespace gpsr
