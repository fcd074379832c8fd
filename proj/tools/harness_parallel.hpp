#pragma once

#include <atomic>
#include <condition_variable>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lct::harness {

template <class Out>
void ordered_parallel(std::size_t count, int workers, const std::function<Out(std::size_t)>& work,
                      const std::function<void(std::size_t, Out&&)>& sink) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) sink(i, work(i));
    return;
  }
  std::vector<std::optional<Out>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        std::optional<Out> r;
        std::exception_ptr err;
        try {
          r.emplace(work(i));
        } catch (...) {
          err = std::current_exception();
        }
        std::lock_guard lock(mu);
        if (err) {
          errors[i] = err;
          next = count;
        } else {
          slots[i] = std::move(r);
        }
        ready.notify_all();
      }
    });
  for (std::size_t i = 0; i < count; ++i) {
    Out r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value() || errors[i]; });
      if (errors[i]) {
        next = count;
        std::rethrow_exception(errors[i]);
      }
      r = std::move(*slots[i]);
      slots[i].reset();
    }
    sink(i, std::move(r));
  }
}

}  // namespace lct::harness
