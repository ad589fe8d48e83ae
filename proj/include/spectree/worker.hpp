// Deterministic work sharding: a fixed-size thread pool where task i is
// always handled by worker i mod W and results are merged back in index
// order, so output is byte-identical for every worker count.
#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace spectree {

// Resolution order: explicit set_worker_count() (CLI flag), else the
// SPECTREE_WORKERS environment variable, else 1.
int worker_count();
void set_worker_count(int w);

// Runs job(i) for i in [0, n) across the configured workers; each worker w
// processes the indices congruent to w.  Exceptions are rethrown on the
// caller's thread after all workers join.
void parallel_indexed(int n, const std::function<void(int)>& job);

// Convenience: maps [0, n) through fn, preserving index order.
template <typename T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
    std::vector<T> out(static_cast<std::size_t>(n));
    parallel_indexed(n, [&](int i) { out[static_cast<std::size_t>(i)] = fn(i); });
    return out;
}

}  // namespace spectree
