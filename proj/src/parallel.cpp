#include "invdeg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace invdeg {

unsigned resolve_threads(unsigned requested) noexcept
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t begin, std::size_t end, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body)
{
    if (end <= begin)
        return;
    const std::size_t total = end - begin;
    chunks = std::clamp<std::size_t>(chunks, 1, total);
    auto bounds = [&](std::size_t c) { return begin + total * c / chunks; };

    threads = std::min<std::size_t>(resolve_threads(threads), chunks);
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            body(c, bounds(c), bounds(c + 1));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            try {
                body(c, bounds(c), bounds(c + 1));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace invdeg
