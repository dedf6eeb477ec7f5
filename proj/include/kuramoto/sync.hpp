#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/partition.hpp"
#include "kuramoto/trajectory.hpp"

namespace kuramoto {

enum class PairStatus { Synchronised, Asymptotic, Desynchronised };

inline const char* to_string(PairStatus s) {
    switch (s) {
    case PairStatus::Synchronised: return "synchronised";
    case PairStatus::Asymptotic: return "asymptotic";
    case PairStatus::Desynchronised: return "desynchronised";
    }
    return "?";
}

/// Vertex pair (0-indexed, i < j) that ended up in one block only through
/// transitive closure: its own maximum distance is at least the tolerance.
struct ChainedPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double max_distance = 0.0;
};

struct ExactSyncResult {
    VertexPartition partition;
    std::vector<ChainedPair> chained;
};

struct PairDeviation {
    std::size_t i = 0;
    std::size_t j = 0;
    double max_all = 0.0;
    double tail_max = 0.0;
    double preceding_max = 0.0;
    PairStatus status = PairStatus::Desynchronised;
};

struct SyncReport {
    double exact_tol = 0.0;
    double asymptotic_tol = 0.0;
    double tail_fraction = 0.0;
    std::size_t tail_points = 0;

    VertexPartition exact_partition;
    std::vector<ChainedPair> chained;
    /// Clusters from the tail-window test; each exact block lies inside one.
    VertexPartition clusters;
    /// block_means[c][s]: mean phase of cluster c at recorded time s.
    std::vector<std::vector<double>> block_means;
    /// Per cluster, max |theta_i - cluster mean| over the tail window.
    std::vector<double> tail_max_deviation;
    std::vector<PairDeviation> pairs;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
    VertexPartition partition() {
        std::vector<std::size_t> assignment(parent_.size());
        for (std::size_t v = 0; v < parent_.size(); ++v) assignment[v] = find(v);
        return VertexPartition::from_assignment(assignment);
    }

private:
    std::vector<std::size_t> parent_;
};

inline double max_pair_distance(const Trajectory& traj, std::size_t i, std::size_t j, std::size_t from,
                                std::size_t to) {
    double worst = 0.0;
    for (std::size_t s = from; s < to; ++s) worst = std::max(worst, std::abs(traj.states[s][i] - traj.states[s][j]));
    return worst;
}

inline ExactSyncResult exact_sync(const Trajectory& traj, double tol, std::vector<double>* distances) {
    const auto n = traj.dimension();
    DisjointSets sets(n);
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i * n + j] = max_pair_distance(traj, i, j, 0, traj.size());
            if (dist[i * n + j] < tol) sets.unite(i, j);
        }
    ExactSyncResult result{sets.partition(), {}};
    for (const auto& block : result.partition.blocks())
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (dist[block[a] * n + block[b]] >= tol)
                    result.chained.push_back({block[a], block[b], dist[block[a] * n + block[b]]});
    if (distances) *distances = std::move(dist);
    return result;
}

} // namespace detail

/// Vertices i and j share a block when |theta_i - theta_j| < tol at every
/// recorded time, closed transitively (single linkage). Phases are compared
/// unwrapped, never modulo 2 pi.
inline VertexPartition exact_sync_partition(const Trajectory& traj, double tol = 1e-8) {
    if (traj.empty()) throw Error(ErrorCode::EmptyTrajectory, "trajectory has no points");
    if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");
    return detail::exact_sync(traj, tol, nullptr).partition;
}

/// Same relation as exact_sync_partition, also listing chained pairs.
inline ExactSyncResult exact_sync_detail(const Trajectory& traj, double tol = 1e-8) {
    if (traj.empty()) throw Error(ErrorCode::EmptyTrajectory, "trajectory has no points");
    if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");
    return detail::exact_sync(traj, tol, nullptr);
}

/// Finite-horizon proxy for asymptotic phase synchronisation.
///
/// The tail window is the last ceil(tail_fraction * size) recorded points
/// and the preceding window the same number of points just before it. A
/// pair is clustered when its tail maximum distance is below tol and no
/// greater than its preceding-window maximum. Distances under exact_tol
/// count as zero, so pairs that are exactly synchronised up to round-off
/// always cluster. Clusters are the single-linkage closure.
inline SyncReport asymptotic_sync_clusters(const Trajectory& traj, double tail_fraction = 0.2, double tol = 1e-4,
                                           double exact_tol = 1e-8) {
    if (traj.empty()) throw Error(ErrorCode::EmptyTrajectory, "trajectory has no points");
    if (!(tail_fraction > 0.0 && tail_fraction <= 0.5))
        throw Error(ErrorCode::BadParameter, "tail_fraction must lie in (0, 0.5]");
    if (!(tol > 0.0) || !(exact_tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerances must be positive");
    const auto total = traj.size();
    const auto tail = static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(total)));
    if (tail < 10)
        throw Error(ErrorCode::TooShort, "tail window holds " + std::to_string(tail) + " points, need at least 10");

    SyncReport report;
    report.exact_tol = exact_tol;
    report.asymptotic_tol = tol;
    report.tail_fraction = tail_fraction;
    report.tail_points = tail;

    std::vector<double> dist;
    auto exact = detail::exact_sync(traj, exact_tol, &dist);
    report.exact_partition = std::move(exact.partition);
    report.chained = std::move(exact.chained);

    const auto n = traj.dimension();
    const auto tail_begin = total - tail;
    const auto preceding_begin = tail_begin - std::min(tail, tail_begin);
    const auto floor_to_zero = [&](double d) { return d < exact_tol ? 0.0 : d; };
    detail::DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PairDeviation pd;
            pd.i = i;
            pd.j = j;
            pd.max_all = dist[i * n + j];
            pd.tail_max = detail::max_pair_distance(traj, i, j, tail_begin, total);
            pd.preceding_max = detail::max_pair_distance(traj, i, j, preceding_begin, tail_begin);
            const bool clustered = pd.tail_max < tol && floor_to_zero(pd.tail_max) <= floor_to_zero(pd.preceding_max);
            if (pd.max_all < exact_tol)
                pd.status = PairStatus::Synchronised;
            else if (clustered)
                pd.status = PairStatus::Asymptotic;
            if (clustered || pd.max_all < exact_tol) sets.unite(i, j);
            report.pairs.push_back(pd);
        }
    report.clusters = sets.partition();

    for (const auto& block : report.clusters.blocks()) {
        auto& means = report.block_means.emplace_back(total, 0.0);
        double deviation = 0.0;
        for (std::size_t s = 0; s < total; ++s) {
            double sum = 0.0;
            for (auto v : block) sum += traj.states[s][v];
            means[s] = sum / static_cast<double>(block.size());
            if (s >= tail_begin)
                for (auto v : block) deviation = std::max(deviation, std::abs(traj.states[s][v] - means[s]));
        }
        report.tail_max_deviation.push_back(deviation);
    }
    return report;
}

} // namespace kuramoto
