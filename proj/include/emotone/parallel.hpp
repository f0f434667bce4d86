#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace emotone {

// Applies fn(i) for i in [0, n) with at most `limit` threads in flight.
// Results land at their index, so output order is independent of
// scheduling. The lowest-index exception is rethrown.
template <typename Result>
std::vector<Result> parallel_map(std::size_t n, std::size_t limit,
                                 const std::function<Result(std::size_t)>& fn) {
    std::vector<Result> results(n);
    if (n == 0) return results;
    if (limit < 1) limit = 1;

    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::min(limit, n);

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
        for (std::thread& t : threads) t.join();
    }

    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return results;
}

}  // namespace emotone
