#include "ffl/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace ffl {
namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) noexcept { g_threads = n == 0 ? 1 : n; }
unsigned thread_count() noexcept { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(g_threads, n));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ffl
