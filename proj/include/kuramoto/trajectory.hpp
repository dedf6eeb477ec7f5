#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/model.hpp"
#include "kuramoto/partition.hpp"

namespace kuramoto {

/// Time grid starting at 0 plus one phase vector per recorded time.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;

    std::size_t size() const noexcept { return times.size(); }
    bool empty() const noexcept { return times.empty(); }
    std::size_t dimension() const noexcept { return states.empty() ? 0 : states.front().size(); }

    void push_back(double t, PhaseState state) {
        times.push_back(t);
        states.push_back(std::move(state));
    }

    /// Throws unless times start at 0, increase strictly and match states.
    void validate() const {
        if (times.empty()) throw Error(ErrorCode::EmptyTrajectory, "trajectory has no points");
        if (times.size() != states.size())
            throw Error(ErrorCode::DimensionMismatch, "times and states differ in length");
        if (times.front() != 0.0) throw Error(ErrorCode::BadParameter, "trajectory must start at t = 0");
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (!(times[i] > times[i - 1]))
                throw Error(ErrorCode::BadParameter, "trajectory times must increase strictly");
            if (states[i].size() != states[0].size())
                throw Error(ErrorCode::DimensionMismatch, "ragged trajectory");
        }
    }
};

/// Copies each block's quotient phase onto every vertex of the block.
inline Trajectory lift_quotient_trajectory(const VertexPartition& p, const Trajectory& quotient) {
    if (quotient.dimension() != p.block_count())
        throw Error(ErrorCode::DimensionMismatch, "quotient trajectory has " + std::to_string(quotient.dimension()) +
                                                      " components for " + std::to_string(p.block_count()) +
                                                      " blocks");
    Trajectory lifted;
    lifted.times = quotient.times;
    lifted.states.reserve(quotient.size());
    for (const auto& f : quotient.states) {
        PhaseState theta(p.vertex_count());
        for (std::size_t v = 0; v < theta.size(); ++v) theta[v] = f[p.block_of(v)];
        lifted.states.push_back(std::move(theta));
    }
    return lifted;
}

inline double max_abs_difference(const Trajectory& a, const Trajectory& b) {
    if (a.size() != b.size() || a.dimension() != b.dimension())
        throw Error(ErrorCode::DimensionMismatch, "trajectories have different shapes");
    double worst = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a.times[s] != b.times[s]) throw Error(ErrorCode::DimensionMismatch, "trajectories on different grids");
        for (std::size_t i = 0; i < a.dimension(); ++i)
            worst = std::max(worst, std::abs(a.states[s][i] - b.states[s][i]));
    }
    return worst;
}

/// 17 significant digits, same text as printf "%.17g".
inline std::string format_real(double x) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, end);
}

/// CSV with header "t,theta_1,...,theta_n" and one row per recorded time.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t";
    for (std::size_t i = 1; i <= traj.dimension(); ++i) out << ",theta_" << i;
    out << '\n';
    for (std::size_t s = 0; s < traj.size(); ++s) {
        out << format_real(traj.times[s]);
        for (double x : traj.states[s]) out << ',' << format_real(x);
        out << '\n';
    }
}

inline Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("t", 0) != 0)
        throw Error(ErrorCode::ParseError, "trajectory CSV needs a \"t,theta_1,...\" header");
    const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    Trajectory traj;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            const auto stop = std::min(line.find(',', start), line.size());
            double x = 0.0;
            const auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + stop, x);
            if (ec != std::errc{} || ptr != line.data() + stop)
                throw Error(ErrorCode::ParseError, "bad number in trajectory CSV: " + line);
            row.push_back(x);
            start = stop + 1;
        }
        if (row.size() != columns) throw Error(ErrorCode::ParseError, "wrong column count in trajectory CSV");
        traj.push_back(row.front(), PhaseState(row.begin() + 1, row.end()));
    }
    return traj;
}

} // namespace kuramoto
