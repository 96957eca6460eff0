#ifndef NULLPROP_PARALLEL_HPP
#define NULLPROP_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nullprop
{

/// Number of workers to use when the caller passes 0.
inline unsigned default_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls body(i) for i in [0, count) on up to `workers` threads. Indices are
/// handed out in small chunks; body must only write to per-index state.
/// The first exception thrown by any call is rethrown on the caller's thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    if (workers == 0)
        workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    constexpr std::size_t chunk = 16;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed))
        {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count)
                return;
            const std::size_t end = std::min(begin + chunk, count);
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    if (error)
        std::rethrow_exception(error);
}

} // namespace nullprop

#endif // NULLPROP_PARALLEL_HPP
