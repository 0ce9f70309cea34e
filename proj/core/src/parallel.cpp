#include "ck/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "ck/errors.hpp"

namespace ck {
namespace {

int override_threads = 0;  // 0 = no override

int env_cap() {
  const char* raw = std::getenv("CONSENSUS_KINETICS_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const long v = std::strtol(raw, nullptr, 10);
  return v >= 1 ? static_cast<int>(v) : 1;
}

}  // namespace

int max_threads() {
  if (override_threads >= 1) return override_threads;
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  const int cap = env_cap();
  if (cap >= 1 && cap < n) n = cap;
  return n;
}

void set_max_threads(int n) { override_threads = n < 1 ? 0 : n; }

void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (chunk_size == 0) fail(errc::invalid_parameter, "chunk_size must be positive");
  if (n == 0) return;
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;

  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = begin + chunk_size < n ? begin + chunk_size : n;
    fn(c, begin, end);
  };

  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
        run_chunk(c);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ck
