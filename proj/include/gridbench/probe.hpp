#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <new>
#include <unordered_map>
#include <vector>

#include "gridbench/grid.hpp"

namespace gridbench {

// Instrumentation hook handed to every solver. Solvers route the allocations
// of their open lists, value maps and tag stores through a ProbeAllocator
// bound to this object, and report each node expansion. peak_bytes() is the
// high-water mark of live search-structure bytes, independent of the
// process allocator and of machine load.
class SearchProbe {
public:
  virtual ~SearchProbe() = default;

  virtual void on_allocate(std::size_t bytes) {
    live_ += bytes;
    if (live_ > peak_) peak_ = live_;
  }
  virtual void on_deallocate(std::size_t bytes) { live_ -= bytes; }
  virtual void on_expand(GridCoord) { ++expansions_; }

  std::size_t live_bytes() const { return live_; }
  std::size_t peak_bytes() const { return peak_; }
  std::size_t expansions() const { return expansions_; }

  void reset() {
    live_ = 0;
    peak_ = 0;
    expansions_ = 0;
  }

private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t expansions_ = 0;
};

template <class T>
class ProbeAllocator {
public:
  using value_type = T;

  explicit ProbeAllocator(SearchProbe& probe) noexcept : probe_(&probe) {}
  template <class U>
  ProbeAllocator(const ProbeAllocator<U>& other) noexcept : probe_(other.probe()) {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    probe_->on_allocate(n * sizeof(T));
    return p;
  }

  void deallocate(T* p, std::size_t n) noexcept {
    probe_->on_deallocate(n * sizeof(T));
    std::allocator<T>{}.deallocate(p, n);
  }

  SearchProbe* probe() const noexcept { return probe_; }

  template <class U>
  friend bool operator==(const ProbeAllocator& a, const ProbeAllocator<U>& b) noexcept {
    return a.probe_ == b.probe();
  }

private:
  SearchProbe* probe_;
};

template <class T>
using ProbedVector = std::vector<T, ProbeAllocator<T>>;

template <class K, class V>
using ProbedMap =
    std::unordered_map<K, V, std::hash<K>, std::equal_to<K>, ProbeAllocator<std::pair<const K, V>>>;

template <class K, class V>
ProbedMap<K, V> make_probed_map(SearchProbe& probe) {
  return ProbedMap<K, V>(0, std::hash<K>{}, std::equal_to<K>{},
                         ProbeAllocator<std::pair<const K, V>>(probe));
}

template <class T>
ProbedVector<T> make_probed_vector(SearchProbe& probe) {
  return ProbedVector<T>(ProbeAllocator<T>(probe));
}

}  // namespace gridbench
