#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gpsr/forwarding.hpp"
#include "gpsr/types.hpp"

namespace gpsr {

enum class TraceTag { Send, Fwd, Recv, Drop, Beacon, Heard, Evict, EnterPerim, ExitPerim, Move };

std::string_view to_string(TraceTag tag);

struct TraceRecord {
  double time = 0.0;
  TraceTag tag = TraceTag::Beacon;
  NodeId node;
  std::optional<std::uint64_t> packet;
  std::optional<NodeId> src;
  std::optional<NodeId> dst;
  std::optional<GpsrMode> mode;
  Position position;
  std::string extra;  // empty prints as "-"
};

// <time> <TAG> <node> <pkt|-> <src|-> <dst|-> <mode|-> <x> <y> <extra|->
// time, x and y with six decimals. No trailing newline.
std::string format_trace(const TraceRecord& record);

// Appends formatted records to a stream and optionally keeps them in memory.
// Records must arrive in nondecreasing time order; a violation is fatal.
class TraceSink {
 public:
  explicit TraceSink(std::ostream* out = nullptr, bool capture = false) : out_(out), capture_(capture) {}

  void emit(const TraceRecord& record);

  std::size_t count() const { return count_; }
  const std::vector<TraceRecord>& records() const { return records_; }

 private:
  std::ostream* out_;
  bool capture_;
  std::size_t count_ = 0;
  std::optional<double> last_time_;
  std::vector<TraceRecord> records_;
};

}  // namespace gpsr
