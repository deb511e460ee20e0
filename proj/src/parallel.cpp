#include "thetapark/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace thetapark {

int default_thread_count() {
    if (const char* env = std::getenv("THETA_PARK_THREADS")) {
        int value = std::atoi(env);
        if (value >= 1) return value;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& job) {
    if (count <= 0) return;
    threads = std::min(std::max(threads, 1), count);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace thetapark
