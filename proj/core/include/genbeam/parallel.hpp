#ifndef GENBEAM_PARALLEL_HPP
#define GENBEAM_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace genbeam {

/// Name of the environment variable that caps worker threads.
inline constexpr const char* workers_env_var = "GENBEAM_WORKERS";

/// GENBEAM_WORKERS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads using a
/// static contiguous partition. Bodies must only write to their own slot;
/// ordering of results is then independent of scheduling. Each worker stops
/// at its first failure; the failure from the lowest range is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (std::size_t w = 0; w < workers; ++w)
        if (errors[w])
            std::rethrow_exception(errors[w]);
}

} // namespace genbeam

#endif // GENBEAM_PARALLEL_HPP
