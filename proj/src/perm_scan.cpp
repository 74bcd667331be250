#include "cyclequiv/perm_scan.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace cyclequiv {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw Error(ErrorCode::CapExceeded, "factorial argument out of range");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = factorial(n - 1 - i);
        std::uint64_t idx = rank / f;
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return out;
}

namespace {

struct ChunkPlan {
    std::uint64_t total;
    std::uint64_t chunk_size;
    std::uint64_t chunks;
};

ChunkPlan plan_chunks(int n) {
    const std::uint64_t total = factorial(n);
    std::uint64_t chunks = static_cast<std::uint64_t>(omp_get_max_threads()) * 8;
    if (chunks < 1) chunks = 1;
    std::uint64_t chunk_size = (total + chunks - 1) / chunks;
    if (chunk_size < 1024) chunk_size = std::min<std::uint64_t>(1024, total);
    chunks = (total + chunk_size - 1) / chunk_size;
    return {total, chunk_size, chunks};
}

} // namespace

ScanHit scan_first(int n, const PermPred& pred, Exec exec) {
    const std::uint64_t total = factorial(n);
    if (exec == Exec::Serial) {
        std::vector<int> v = unrank_permutation(n, 0);
        for (std::uint64_t r = 0; r < total; ++r) {
            if (pred(v)) return {true, r, v};
            std::next_permutation(v.begin(), v.end());
        }
        return {};
    }

    const ChunkPlan plan = plan_chunks(n);
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long c = 0; c < static_cast<long long>(plan.chunks); ++c) {
        const std::uint64_t start = static_cast<std::uint64_t>(c) * plan.chunk_size;
        if (start >= best.load(std::memory_order_relaxed)) continue;
        const std::uint64_t end = std::min(start + plan.chunk_size, plan.total);
        std::vector<int> v = unrank_permutation(n, start);
        for (std::uint64_t r = start; r < end; ++r) {
            if (r >= best.load(std::memory_order_relaxed)) break;
            if (pred(v)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (r < cur && !best.compare_exchange_weak(cur, r)) {
                }
                break;
            }
            std::next_permutation(v.begin(), v.end());
        }
    }
    const std::uint64_t hit = best.load();
    if (hit == std::numeric_limits<std::uint64_t>::max()) return {};
    return {true, hit, unrank_permutation(n, hit)};
}

std::vector<std::vector<int>> scan_collect(int n, const PermPred& pred, Exec exec) {
    const std::uint64_t total = factorial(n);
    if (exec == Exec::Serial) {
        std::vector<std::vector<int>> out;
        std::vector<int> v = unrank_permutation(n, 0);
        for (std::uint64_t r = 0; r < total; ++r) {
            if (pred(v)) out.push_back(v);
            std::next_permutation(v.begin(), v.end());
        }
        return out;
    }

    const ChunkPlan plan = plan_chunks(n);
    std::vector<std::vector<std::vector<int>>> per_chunk(plan.chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long c = 0; c < static_cast<long long>(plan.chunks); ++c) {
        const std::uint64_t start = static_cast<std::uint64_t>(c) * plan.chunk_size;
        const std::uint64_t end = std::min(start + plan.chunk_size, plan.total);
        std::vector<int> v = unrank_permutation(n, start);
        auto& local = per_chunk[c];
        for (std::uint64_t r = start; r < end; ++r) {
            if (pred(v)) local.push_back(v);
            std::next_permutation(v.begin(), v.end());
        }
    }
    std::vector<std::vector<int>> out;
    for (auto& chunk : per_chunk) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Exec exec) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        body(static_cast<std::size_t>(i));
    }
}

} // namespace cyclequiv
