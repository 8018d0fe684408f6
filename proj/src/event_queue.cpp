#include "gpsr/event_queue.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace gpsr {

namespace {

// Max-heap comparator turned into a min-heap on (time, sequence).
bool later(const Event& a, const Event& b) {
  return std::tie(a.time, a.sequence) > std::tie(b.time, b.sequence);
}

}  // namespace

void EventQueue::schedule(double time, EventPayload payload) {
  if (std::isnan(time) || time < now_)
    throw SimulationError("event scheduled at t=" + std::to_string(time) + " before now=" + std::to_string(now_));
  heap_.push_back(Event{time, next_sequence_++, std::move(payload)});
  std::push_heap(heap_.begin(), heap_.end(), later);
}

const Event& EventQueue::top() const {
  if (heap_.empty()) throw SimulationError("top() on empty event queue");
  return heap_.front();
}

Event EventQueue::pop() {
  if (heap_.empty()) throw SimulationError("pop() on empty event queue");
  std::pop_heap(heap_.begin(), heap_.end(), later);
  Event e = std::move(heap_.back());
  heap_.pop_back();
  now_ = e.time;
  return e;
}

}  // namespace gpsr
