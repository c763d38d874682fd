#include "mvsbm/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mvsbm {

namespace {
thread_local bool inside_worker = false;
}

int worker_count()
{
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1)
        n = 1;
    if (const char* cap = std::getenv("MVSBM_THREADS")) {
        try {
            const int limit = std::stoi(cap);
            if (limit >= 1)
                n = std::min(n, limit);
        } catch (const std::exception&) {
            // unparsable value: ignore
        }
    }
    return n;
}

void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body)
{
    if (end <= begin)
        return;
    const std::size_t count = end - begin;
    // nested calls run inline on the worker that issued them
    const auto workers =
        inside_worker ? std::size_t{1} : std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi)
            break;
        threads.emplace_back([&, lo, hi] {
            inside_worker = true;
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace mvsbm
