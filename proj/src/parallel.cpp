#include "qpl/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace qpl {

int env_worker_count() {
  const char* env = std::getenv("QPL_WORKERS");
  if (!env) return 1;
  const int value = std::atoi(env);
  return value > 0 ? value : 1;
}

void run_chunked(std::size_t count, int workers,
                 const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (workers <= 1 || count < 2) {
    fn(0, 0, count);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, count);
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::size_t chunk = (count + w - 1) / w;
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t begin = i * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&fn, i, begin, end] {
      fn(static_cast<int>(i), begin, end);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace qpl
