#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace glcode {

/// Splits [0, count) into `workers` contiguous chunks, evaluates
/// chunk(begin, end) for each (on its own thread when workers > 1) and folds
/// the partial results left to right with merge. The chunk boundaries depend
/// only on count and workers, and merging happens in chunk order, so the
/// result is the same for every schedule.
template <class T, class Chunk, class Merge>
T parallel_reduce(std::size_t count, unsigned workers, T init, Chunk chunk,
                  Merge merge) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) return merge(std::move(init), chunk(std::size_t{0}, count));

  const std::size_t parts = std::min<std::size_t>(workers, count);
  std::vector<T> partial(parts);
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> threads;
  threads.reserve(parts);
  for (std::size_t w = 0; w < parts; ++w) {
    const std::size_t begin = count * w / parts;
    const std::size_t end = count * (w + 1) / parts;
    threads.emplace_back([&, w, begin, end] {
      try {
        partial[w] = chunk(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  T acc = std::move(init);
  for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace glcode
