// Fixed-shard thread pool with deterministic index assignment.
#include "spectree/worker.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>

namespace spectree {

namespace {
int g_workers = 0;  // 0 = not set explicitly
}

int worker_count() {
    if (g_workers > 0) return g_workers;
    if (const char* env = std::getenv("SPECTREE_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

void set_worker_count(int w) { g_workers = w >= 1 ? w : 0; }

void parallel_indexed(int n, const std::function<void(int)>& job) {
    const int w = worker_count();
    if (w <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) job(i);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) {
        threads.emplace_back([&, t]() {
            try {
                for (int i = t; i < n; i += w) job(i);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& th : threads) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace spectree
