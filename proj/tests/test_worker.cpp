// Deterministic sharding: results must be identical for every worker count,
// every index must run exactly once, and worker exceptions must surface on
// the calling thread.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <vector>

#include "spectree/base.hpp"
#include "spectree/worker.hpp"

using namespace spectree;

TEST_CASE("map output is index-ordered for any worker count") {
    std::vector<int> reference;
    for (int i = 0; i < 100; ++i) reference.push_back(i * i);
    for (int w : {1, 2, 7}) {
        set_worker_count(w);
        CHECK(worker_count() == w);
        std::vector<int> got =
            parallel_map<int>(100, [](int i) { return i * i; });
        CHECK(got == reference);
    }
    set_worker_count(1);
}

TEST_CASE("every index runs exactly once") {
    set_worker_count(4);
    std::vector<std::atomic<int>> hits(50);
    parallel_indexed(50, [&](int i) { hits[static_cast<std::size_t>(i)]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
    set_worker_count(1);
}

TEST_CASE("worker exceptions are rethrown on the caller's thread") {
    set_worker_count(3);
    bool caught = false;
    try {
        parallel_indexed(10, [](int i) {
            if (i == 7) fail(Err::Internal, "planted failure");
        });
    } catch (const Error& e) {
        caught = e.code() == Err::Internal;
    }
    CHECK(caught);
    set_worker_count(1);

    // zero tasks is a no-op
    parallel_indexed(0, [](int) { fail(Err::Internal, "must not run"); });
}
