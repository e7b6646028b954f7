#pragma once

#include <algorithm>
#include <cstddef>

#include "gridbench/probe.hpp"

namespace gridbench::detail {

// Binary heap with lazy deletion. Entries are never removed or re-keyed in
// place; callers push a fresh entry and discard stale ones when they surface.
// `Before(a, b)` is true when a must be popped before b.
template <class Entry, class Before>
class OpenList {
public:
  explicit OpenList(SearchProbe& probe, Before before = {})
      : heap_(ProbeAllocator<Entry>(probe)), before_(before) {}

  void push(const Entry& e) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(), comparator());
  }

  const Entry& top() const { return heap_.front(); }

  void pop() {
    std::pop_heap(heap_.begin(), heap_.end(), comparator());
    heap_.pop_back();
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  void clear() { heap_.clear(); }

private:
  ProbedVector<Entry> heap_;
  Before before_;

  // std heaps are max-heaps on `less`; invert so the earliest entry is on top.
  auto comparator() const {
    return [this](const Entry& a, const Entry& b) { return before_(b, a); };
  }
};

}  // namespace gridbench::detail
