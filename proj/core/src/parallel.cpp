#include "fgbm/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fgbm {

std::size_t resolve_threads(std::size_t requested) {
    std::size_t t = requested;
    if (t == 0) {
        if (const char* env = std::getenv("FGBM_THREADS")) {
            try {
                t = static_cast<std::size_t>(std::stoul(env));
            } catch (...) {
                t = 1;
            }
        } else {
            t = 1;
        }
    }
    if (t == 0) t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    return t;
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = n;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace fgbm
