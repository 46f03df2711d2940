#pragma once

#include <cstddef>
#include <functional>

namespace coauthor {

// Work over [0, n) is cut into blocks whose boundaries depend only on n,
// never on the number of threads. Callers that keep one partial result per
// block and reduce blocks in index order get bit-identical output whatever
// the thread count.
std::size_t block_count(std::size_t n);

struct Block {
  std::size_t index;
  std::size_t begin;
  std::size_t end;
};

void parallel_blocks(std::size_t n, const std::function<void(const Block&)>& body);

// 0 restores the default (hardware concurrency).
void set_thread_count(unsigned threads);
unsigned thread_count();

}  // namespace coauthor
