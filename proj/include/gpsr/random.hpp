#pragma once

#include <cstdint>
#include <random>

#include "gpsr/types.hpp"

namespace gpsr {

enum class StreamPurpose : std::uint32_t { BeaconJitter = 1, Loss = 2, Flows = 3, Placement = 4 };

// Independent deterministic stream derived from (seed, node, purpose).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, NodeId node, StreamPurpose purpose);
  explicit RandomStream(std::uint64_t seed);

  // Uniform in [0, 1) with 53 random bits; identical across standard libraries.
  double uniform01();
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gpsr
