#include "gpsr/trace.hpp"

#include <fmt/format.h>

#include "gpsr/event_queue.hpp"

namespace gpsr {

namespace {

template <typename T>
std::string or_dash(const std::optional<T>& value) {
  return value ? fmt::format("{}", *value) : std::string("-");
}

}  // namespace

std::string_view to_string(TraceTag tag) {
  switch (tag) {
    case TraceTag::Send: return "SEND";
    case TraceTag::Fwd: return "FWD";
    case TraceTag::Recv: return "RECV";
    case TraceTag::Drop: return "DROP";
    case TraceTag::Beacon: return "BEACON";
    case TraceTag::Heard: return "HEARD";
    case TraceTag::Evict: return "EVICT";
    case TraceTag::EnterPerim: return "ENTER_PERIM";
    case TraceTag::ExitPerim: return "EXIT_PERIM";
    case TraceTag::Move: return "MOVE";
  }
  return "UNKNOWN";
}

std::string format_trace(const TraceRecord& r) {
  auto id = [](const std::optional<NodeId>& n) { return n ? fmt::format("{}", n->value) : std::string("-"); };
  return fmt::format("{:.6f} {} {} {} {} {} {} {:.6f} {:.6f} {}", r.time, to_string(r.tag), r.node.value,
                     or_dash(r.packet), id(r.src), id(r.dst), r.mode ? to_string(*r.mode) : "-", r.position.x,
                     r.position.y, r.extra.empty() ? "-" : r.extra);
}

void TraceSink::emit(const TraceRecord& record) {
  if (last_time_ && record.time < *last_time_)
    throw SimulationError(fmt::format("trace record at {:.6f} after {:.6f}", record.time, *last_time_));
  last_time_ = record.time;
  ++count_;
  if (out_) *out_ << format_trace(record) << '\n';
  if (capture_) records_.push_back(record);
}

}  // namespace gpsr
