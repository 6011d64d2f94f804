#pragma once

// Deterministic parallel sweeps. Work is split into ordered chunks; workers
// claim chunks through an atomic counter and the reported hit is always the
// one in the lowest-numbered chunk, so results do not depend on scheduling
// or worker count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace fintop {

using SweepDeadline = std::optional<std::chrono::steady_clock::time_point>;

inline bool deadline_passed(const SweepDeadline& d) {
    return d && std::chrono::steady_clock::now() >= *d;
}

template <class Payload>
struct SweepOutcome {
    bool time_exceeded = false;
    std::optional<std::pair<std::uint64_t, Payload>> first;  ///< lowest chunk with a hit
};

/// Find the first chunk (by index) whose scan reports a payload.
/// `scan(chunk)` must be a pure function of the chunk index. With
/// full_scan=false, chunks beyond the best hit so far are skipped.
template <class Payload, class Scan>
SweepOutcome<Payload> sweep_first_hit(std::uint64_t chunk_count, unsigned workers,
                                      const SweepDeadline& deadline, Scan&& scan,
                                      bool full_scan = false) {
    SweepOutcome<Payload> outcome;
    if (chunk_count == 0) return outcome;

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{chunk_count};
    std::atomic<bool> expired{false};
    std::mutex mu;
    std::map<std::uint64_t, Payload> hits;
    std::exception_ptr first_error;

    auto body = [&]() {
        for (;;) {
            if (expired.load(std::memory_order_relaxed)) return;
            const std::uint64_t chunk = next.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= chunk_count) return;
            if (!full_scan && chunk > best.load(std::memory_order_relaxed)) continue;
            if (deadline_passed(deadline)) {
                expired.store(true, std::memory_order_relaxed);
                return;
            }
            std::optional<Payload> hit;
            try {
                hit = scan(chunk);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
                expired.store(true, std::memory_order_relaxed);
                return;
            }
            if (hit) {
                std::lock_guard<std::mutex> lock(mu);
                hits.emplace(chunk, std::move(*hit));
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (chunk < cur && !best.compare_exchange_weak(cur, chunk)) {
                }
            }
        }
    };

    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }

    if (first_error) std::rethrow_exception(first_error);
    if (expired.load()) {
        outcome.time_exceeded = true;
        return outcome;
    }
    if (!hits.empty()) outcome.first = *hits.begin();
    return outcome;
}

template <class Payload>
struct AccumulateOutcome {
    bool time_exceeded = false;
    std::optional<std::pair<std::uint64_t, Payload>> first;
    std::uint64_t stat_total = 0;  ///< deterministic sum of per-chunk stats
};

/// Full scan that also aggregates a per-chunk counter (for example, how many
/// instances had to be skipped). Every chunk is visited exactly once.
template <class Payload, class Scan>
AccumulateOutcome<Payload> sweep_accumulate(std::uint64_t chunk_count, unsigned workers,
                                            const SweepDeadline& deadline, Scan&& scan) {
    // Scan: (uint64_t chunk, uint64_t& stat) -> std::optional<Payload>
    AccumulateOutcome<Payload> outcome;
    if (chunk_count == 0) return outcome;

    std::vector<std::uint64_t> stats(chunk_count, 0);
    auto wrapped = [&](std::uint64_t chunk) { return scan(chunk, stats[chunk]); };
    SweepOutcome<Payload> inner =
        sweep_first_hit<Payload>(chunk_count, workers, deadline, wrapped, /*full_scan=*/true);
    outcome.time_exceeded = inner.time_exceeded;
    outcome.first = std::move(inner.first);
    if (!outcome.time_exceeded)
        for (std::uint64_t s : stats) outcome.stat_total += s;
    return outcome;
}

}  // namespace fintop
