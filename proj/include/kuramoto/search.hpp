#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "kuramoto/condition2.hpp"
#include "kuramoto/equitable.hpp"
#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"

namespace kuramoto {

struct SearchOptions {
    std::size_t max_vertices = 22;
    bool force = false;
    /// 0 means std::thread::hardware_concurrency().
    std::size_t jobs = 0;
    /// Bipartitions classified per parallel round before results are handed
    /// to the visitor.
    std::size_t batch_size = 1 << 14;
};

struct SearchSummary {
    std::size_t vertex_count = 0;
    std::uint64_t bipartitions = 0;
    std::array<std::uint64_t, 5> counts{};

    std::uint64_t count(Classification c) const { return counts[static_cast<std::size_t>(c)]; }
};

struct SearchReport {
    SearchSummary summary;
    /// rows[m] analyses Bipartitions(n)[m].
    std::vector<BipartitionAnalysis> rows;

    std::uint64_t count(Classification c) const { return summary.count(c); }
};

using SearchVisitor = std::function<void(std::uint64_t index, const BipartitionAnalysis&)>;

/// Classifies every bipartition and calls visit in index order on the
/// calling thread. Each batch is cut into contiguous chunks, one per
/// worker, so the visit sequence is the same for any worker count.
inline SearchSummary search_all_bipartitions(const Graph& g, const SearchOptions& options,
                                             const SearchVisitor& visit) {
    const auto n = g.size();
    if (n > options.max_vertices && !options.force)
        throw Error(ErrorCode::TooLarge, "search capped at n=" + std::to_string(options.max_vertices) + ", got " +
                                             std::to_string(n) + " (use force to override)");
    const Bipartitions range(n);
    const auto total = range.size();
    const std::size_t jobs =
        options.jobs ? options.jobs : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::uint64_t batch = std::max<std::size_t>(options.batch_size, 1);

    SearchSummary summary;
    summary.vertex_count = n;
    summary.bipartitions = total;

    std::vector<BipartitionAnalysis> rows;
    for (std::uint64_t first = 0; first < total; first += batch) {
        const auto count = std::min(batch, total - first);
        rows.assign(count, {});
        const auto work = [&](std::uint64_t begin, std::uint64_t end) {
            for (auto i = begin; i < end; ++i) rows[i] = classify_bipartition(g, range[first + i]);
        };
        const auto workers_needed = static_cast<std::size_t>(std::min<std::uint64_t>(jobs, count));
        if (workers_needed <= 1) {
            work(0, count);
        } else {
            std::vector<std::exception_ptr> errors(workers_needed);
            std::vector<std::thread> workers;
            workers.reserve(workers_needed);
            for (std::size_t w = 0; w < workers_needed; ++w) {
                const auto begin = count * w / workers_needed;
                const auto end = count * (w + 1) / workers_needed;
                workers.emplace_back([&, w, begin, end] {
                    try {
                        work(begin, end);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : workers) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            ++summary.counts[static_cast<std::size_t>(rows[i].classification)];
            if (visit) visit(first + i, rows[i]);
        }
    }
    return summary;
}

/// Collecting form; keeps every row in memory.
inline SearchReport search_all_bipartitions(const Graph& g, const SearchOptions& options = {}) {
    SearchReport report;
    report.summary = search_all_bipartitions(
        g, options, [&](std::uint64_t, const BipartitionAnalysis& row) { report.rows.push_back(row); });
    return report;
}

} // namespace kuramoto
