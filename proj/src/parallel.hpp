#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace gaussprob::detail {

// Sums task(i) for i in [0, num_tasks) on `threads` workers. Tasks are
// claimed dynamically; the integer total is independent of the schedule.
template <typename Task>
std::uint64_t parallel_sum(std::uint64_t num_tasks, unsigned threads, Task task) {
    if (threads <= 1 || num_tasks <= 1) {
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i < num_tasks; ++i) total += task(i);
        return total;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                std::uint64_t local = 0;
                for (std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed); i < num_tasks;
                     i = next.fetch_add(1, std::memory_order_relaxed))
                    local += task(i);
                partial[w] = local;
            });
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

}  // namespace gaussprob::detail
