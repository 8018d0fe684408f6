#include "gpsr/random.hpp"

namespace gpsr {

namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint32_t node, std::uint32_t purpose) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), node,
                       purpose};
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, NodeId node, StreamPurpose purpose) {
  auto seq = make_seq(seed, node.value, static_cast<std::uint32_t>(purpose));
  engine_.seed(seq);
}

RandomStream::RandomStream(std::uint64_t seed) {
  auto seq = make_seq(seed, 0xffffffffu, 0);
  engine_.seed(seq);
}

double RandomStream::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

}  // namespace gpsr
