#include "thetalab/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

namespace thetalab {

namespace {

std::atomic<int> g_thread_budget{0};  // 0 = automatic

int auto_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

}  // namespace

int thread_budget() {
    if (const char* env = std::getenv("THETA_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    int n = g_thread_budget.load();
    return n > 0 ? n : auto_threads();
}

void set_thread_budget(int n) { g_thread_budget.store(n > 0 ? n : 0); }

std::vector<double> parallel_map(int n, const std::function<double(int)>& fn) {
    if (n <= 0) return {};
    std::vector<double> out(static_cast<std::size_t>(n));
    int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[std::size_t(i)] = fn(i);
        return out;
    }
    // shared index counter; each worker pulls the next unprocessed index, so
    // every out[i] is computed exactly once regardless of scheduling
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            out[std::size_t(i)] = fn(i);
    };
    std::vector<std::future<void>> futs;
    futs.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace thetalab
