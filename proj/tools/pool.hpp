#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "linezero/error.hpp"

namespace linezero::cli {

template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;
  bool nonconvergence = false;
};

// Runs fn(i) for i in [0, count) on a fixed set of threads. Results land in
// slot i, so the order of the output never depends on scheduling.
template <class T, class F>
std::vector<Outcome<T>> parallel_map(size_t count, unsigned threads, F fn) {
  std::vector<Outcome<T>> out(count);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        out[i].value.emplace(fn(i));
      } catch (const ConvergenceError& e) {
        out[i].error = e.what();
        out[i].nonconvergence = true;
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, count));
  if (threads <= 1) {
    worker();
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }  // joined here, before out is handed back
  return out;
}

}  // namespace linezero::cli
