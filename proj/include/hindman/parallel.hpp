#ifndef HINDMAN_PARALLEL_HPP_
#define HINDMAN_PARALLEL_HPP_

#include <algorithm>  // for min
#include <atomic>    // for atomic
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <thread>    // for thread
#include <vector>    // for vector

namespace hindman {

  //! Worker cap: HINDMAN_LAB_THREADS if set and positive, else the
  //! hardware concurrency.
  std::size_t worker_count();

  namespace detail {

    //! Evaluates f(0), f(1), ..., f(count-1) (each returning an optional)
    //! on up to worker_count() threads and returns the result of the least
    //! index that produced a value. Indices above the best found so far
    //! are skipped, so the answer does not depend on scheduling.
    template <typename Result, typename Func>
    std::optional<Result> least_success(std::size_t count, Func&& f) {
      std::vector<std::optional<Result>> results(count);
      std::atomic<std::size_t>           next{0};
      std::atomic<std::size_t>           best{count};
      auto                               work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
          if (i > best.load()) {
            continue;
          }
          results[i] = f(i);
          if (results[i]) {
            auto b = best.load();
            while (i < b && !best.compare_exchange_weak(b, i)) {
            }
          }
        }
      };
      auto const threads = std::min(worker_count(), count);
      if (threads <= 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back(work);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      if (best.load() == count) {
        return std::nullopt;
      }
      return std::move(results[best.load()]);
    }

  }  // namespace detail

}  // namespace hindman

#endif  // HINDMAN_PARALLEL_HPP_
