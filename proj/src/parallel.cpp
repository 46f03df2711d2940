#include "coauthor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coauthor {
namespace {

constexpr std::size_t kMaxBlocks = 32;

std::atomic<unsigned> requested_threads{0};

}  // namespace

std::size_t block_count(std::size_t n) { return std::min(n, kMaxBlocks); }

void set_thread_count(unsigned threads) { requested_threads.store(threads); }

unsigned thread_count() {
  unsigned t = requested_threads.load();
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

void parallel_blocks(std::size_t n, const std::function<void(const Block&)>& body) {
  const std::size_t blocks = block_count(n);
  if (blocks == 0) return;
  auto block_at = [n, blocks](std::size_t b) {
    return Block{b, n * b / blocks, n * (b + 1) / blocks};
  };

  const std::size_t workers = std::min<std::size_t>(thread_count(), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(block_at(b));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      try {
        body(block_at(b));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace coauthor
