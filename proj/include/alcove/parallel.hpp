#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace alcove {

inline std::atomic<int>& thread_setting() {
  static std::atomic<int> n{1};
  return n;
}
inline void set_threads(int n) { thread_setting() = n < 1 ? 1 : n; }
inline int threads() { return thread_setting().load(); }

// out[k] = f(k) for k < n; work split over threads(), results in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<T> out(n);
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads()), n);
  if (nt <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = f(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> err(nt);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k; (k = next++) < n;) out[k] = f(k);
      } catch (...) {
        err[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace alcove
