#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace compsub {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Scans indices 0..total-1 for the success with the LOWEST index. Workers
// claim fixed-size chunks; a chunk is skipped once a success below its first
// index is known, so the returned (index, value) pair is independent of
// thread count and scheduling.
template <class R>
std::optional<std::pair<std::uint64_t, R>> parallel_first(
    std::uint64_t total, int threads,
    const std::function<std::optional<R>(std::uint64_t)>& probe,
    std::uint64_t chunk = 1024) {
    threads = resolve_threads(threads);
    if (total == 0) return std::nullopt;
    if (threads <= 1 || total <= chunk) {
        for (std::uint64_t i = 0; i < total; ++i)
            if (auto r = probe(i)) return std::make_pair(i, std::move(*r));
        return std::nullopt;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::mutex m;
    std::vector<std::pair<std::uint64_t, R>> hits;

    auto worker = [&]() {
        while (true) {
            std::uint64_t start = next.fetch_add(chunk);
            if (start >= total) return;
            if (start >= best.load(std::memory_order_relaxed)) return;
            std::uint64_t end = std::min(total, start + chunk);
            for (std::uint64_t i = start; i < end; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) break;
                if (auto r = probe(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                    std::lock_guard<std::mutex> lk(m);
                    hits.emplace_back(i, std::move(*r));
                    break;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::optional<std::pair<std::uint64_t, R>> out;
    for (auto& h : hits)
        if (!out || h.first < out->first) out = std::move(h);
    return out;
}

// Plain parallel loop over 0..total-1; fn must be safe to run concurrently.
inline void parallel_for(std::uint64_t total, int threads,
                         const std::function<void(std::uint64_t)>& fn,
                         std::uint64_t chunk = 256) {
    threads = resolve_threads(threads);
    if (threads <= 1 || total <= chunk) {
        for (std::uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::uint64_t start = next.fetch_add(chunk);
            if (start >= total) return;
            std::uint64_t end = std::min(total, start + chunk);
            for (std::uint64_t i = start; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace compsub
