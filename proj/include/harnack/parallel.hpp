#pragma once
// Static-partition parallel loop. Each index writes only its own slot, so the
// result does not depend on the number of threads.

#include <algorithm>
#include <thread>
#include <vector>

namespace harnack {

template <class F>
void parallel_for(int n, int threads, F&& f) {
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace harnack
