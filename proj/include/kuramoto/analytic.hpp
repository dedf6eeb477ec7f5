#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/model.hpp"
#include "kuramoto/trajectory.hpp"

namespace kuramoto {

/// theta_i(t) = offsets[i] + slope * t, with its derivative in closed form.
struct LinearPhaseSolution {
    PhaseState offsets;
    double slope = 0.0;

    std::size_t dimension() const noexcept { return offsets.size(); }

    PhaseState at(double t) const {
        PhaseState theta(offsets.size());
        for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = offsets[i] + slope * t;
        return theta;
    }

    Trajectory sample(std::span<const double> grid) const {
        Trajectory traj;
        for (double t : grid) traj.push_back(t, at(t));
        return traj;
    }
};

/// Common phase (omega - lambda d sin(alpha)) t on a d-regular graph; with
/// the default omega = 0, lambda = 1 this is -d sin(alpha) t.
inline LinearPhaseSolution regular_solution(std::size_t d, std::size_t n, const ModelParams& params) {
    return {PhaseState(n, 0.0), params.omega - params.lambda * static_cast<double>(d) * std::sin(params.alpha)};
}

inline Trajectory analytic_regular_solution(std::size_t d, double alpha, std::size_t n, std::span<const double> grid) {
    return regular_solution(d, n, ModelParams{alpha}).sample(grid);
}

/// n+1 equally spaced points covering [t0, t1].
inline std::vector<double> uniform_grid(double t0, double t1, std::size_t intervals) {
    std::vector<double> grid(intervals + 1);
    for (std::size_t s = 0; s <= intervals; ++s)
        grid[s] = t0 + (t1 - t0) * static_cast<double>(s) / static_cast<double>(intervals);
    return grid;
}

/// max over the grid of |d theta/dt - kuramoto_rhs(theta)|_inf, using the
/// exact derivative of the closed form.
inline double residual_max(const Graph& g, const LinearPhaseSolution& solution, const ModelParams& params,
                           std::span<const double> grid) {
    if (solution.dimension() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "solution dimension differs from graph size");
    double worst = 0.0;
    PhaseState rate(g.size());
    for (double t : grid) {
        kuramoto_rhs(g, solution.at(t), params, rate);
        for (double r : rate) worst = std::max(worst, std::abs(solution.slope - r));
    }
    return worst;
}

/// Residual of a sampled trajectory at its interior recorded points. The
/// derivative is the second-order three-point difference on the (possibly
/// non-uniform) grid, so the result is bounded below by the
/// finite-difference truncation error.
inline double residual_max(const Graph& g, const Trajectory& traj, const ModelParams& params) {
    traj.validate();
    if (traj.dimension() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "trajectory dimension differs from graph size");
    if (traj.size() < 3) throw Error(ErrorCode::TooShort, "need at least three recorded points");
    double worst = 0.0;
    PhaseState rate(g.size());
    for (std::size_t s = 1; s + 1 < traj.size(); ++s) {
        const double h0 = traj.times[s] - traj.times[s - 1];
        const double h1 = traj.times[s + 1] - traj.times[s];
        const double w_prev = -h1 / (h0 * (h0 + h1));
        const double w_mid = (h1 - h0) / (h0 * h1);
        const double w_next = h0 / (h1 * (h0 + h1));
        kuramoto_rhs(g, traj.states[s], params, rate);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double derivative =
                w_prev * traj.states[s - 1][i] + w_mid * traj.states[s][i] + w_next * traj.states[s + 1][i];
            worst = std::max(worst, std::abs(derivative - rate[i]));
        }
    }
    return worst;
}

} // namespace kuramoto
