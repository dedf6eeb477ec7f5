#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/model.hpp"
#include "kuramoto/partition.hpp"
#include "kuramoto/trajectory.hpp"

namespace kuramoto {

enum class Method { Rk4, Rk45 };

struct IntegratorConfig {
    Method method = Method::Rk45;
    /// Step for Rk4; initial step guess for Rk45.
    double dt = 1e-3;
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double t_end = 10.0;
    /// Keep every N-th accepted step (the final state is always kept).
    std::size_t record_every = 1;
    /// Rk45 only: when positive, record exactly at multiples of sample_dt
    /// (steps are shortened to land on them) instead of at accepted steps.
    double sample_dt = 0.0;

    void validate() const {
        if (!(dt > 0.0)) throw Error(ErrorCode::BadParameter, "dt must be positive");
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerances must be positive");
        if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw Error(ErrorCode::BadParameter, "t_end must be >= 0");
        if (record_every == 0) throw Error(ErrorCode::BadParameter, "record_every must be >= 1");
        if (sample_dt < 0.0) throw Error(ErrorCode::BadParameter, "sample_dt must be >= 0");
        if (sample_dt > 0.0 && method == Method::Rk4)
            throw Error(ErrorCode::BadParameter, "sample_dt applies to the adaptive method only");
    }
};

constexpr double min_adaptive_step = 1e-12;

namespace detail {

inline void require_finite(const PhaseState& x, double t) {
    for (double v : x)
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteState, "non-finite phase at t = " + std::to_string(t));
}

template <class Rhs>
Trajectory integrate_fixed(Rhs&& rhs, PhaseState x, const IntegratorConfig& cfg) {
    namespace odeint = boost::numeric::odeint;
    odeint::runge_kutta4<PhaseState> stepper;
    Trajectory traj;
    traj.push_back(0.0, x);
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    for (std::size_t k = 0; k < steps; ++k) {
        // Grid points are k*dt rather than an accumulated sum; the last step
        // is shortened to end on t_end.
        const double t0 = static_cast<double>(k) * cfg.dt;
        const double t1 = k + 1 == steps ? cfg.t_end : static_cast<double>(k + 1) * cfg.dt;
        stepper.do_step(rhs, x, t0, t1 - t0);
        require_finite(x, t1);
        if ((k + 1) % cfg.record_every == 0 || k + 1 == steps) traj.push_back(t1, x);
    }
    return traj;
}

template <class Rhs>
Trajectory integrate_adaptive(Rhs&& rhs, PhaseState x, const IntegratorConfig& cfg) {
    namespace odeint = boost::numeric::odeint;
    using ErrorStepper = odeint::runge_kutta_dopri5<PhaseState>;
    using Checker = odeint::default_error_checker<double, ErrorStepper::algebra_type, ErrorStepper::operations_type>;
    // a_dxdt = 0: the accepted local error is abs_tol + rel_tol * |theta|.
    odeint::controlled_runge_kutta<ErrorStepper, Checker> stepper(Checker(cfg.abs_tol, cfg.rel_tol, 1.0, 0.0));

    Trajectory traj;
    traj.push_back(0.0, x);
    double t = 0.0;
    double dt = std::min(cfg.dt, cfg.t_end);
    std::size_t accepted = 0;
    std::size_t next_sample = 1;
    while (t < cfg.t_end) {
        double target = cfg.t_end;
        if (cfg.sample_dt > 0.0) target = std::min(target, static_cast<double>(next_sample) * cfg.sample_dt);
        const bool capped = dt >= target - t;
        double h = capped ? target - t : dt;
        const double t_before = t;
        if (stepper.try_step(rhs, x, t, h) == odeint::fail) {
            if (h < min_adaptive_step)
                throw Error(ErrorCode::StepUnderflow, "adaptive step fell below 1e-12 at t = " + std::to_string(t));
            dt = h;
            continue;
        }
        if (capped) t = target;
        // A capped step says nothing about how large the next step may be.
        dt = capped ? std::max(dt, h) : h;
        require_finite(x, t);
        if (t <= t_before) throw Error(ErrorCode::StepUnderflow, "time stopped advancing at t = " + std::to_string(t));
        ++accepted;
        if (cfg.sample_dt > 0.0) {
            if (t == target) {
                traj.push_back(t, x);
                ++next_sample;
            }
        } else if (accepted % cfg.record_every == 0 || t >= cfg.t_end) {
            traj.push_back(t, x);
        }
    }
    if (traj.times.back() != t) traj.push_back(t, x);
    return traj;
}

} // namespace detail

/// Integrates x' = rhs(x) from t = 0 to cfg.t_end. rhs has the signature
/// void(const PhaseState&, PhaseState&, double).
template <class Rhs>
Trajectory integrate_system(Rhs&& rhs, const PhaseState& init, const IntegratorConfig& cfg) {
    cfg.validate();
    detail::require_finite(init, 0.0);
    if (cfg.t_end == 0.0) {
        Trajectory traj;
        traj.push_back(0.0, init);
        return traj;
    }
    return cfg.method == Method::Rk4 ? detail::integrate_fixed(rhs, init, cfg)
                                     : detail::integrate_adaptive(rhs, init, cfg);
}

inline Trajectory integrate(const Graph& g, const PhaseState& init, const ModelParams& params,
                            const IntegratorConfig& cfg) {
    if (init.size() != g.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "initial state has " + std::to_string(init.size()) + " phases, graph has " + std::to_string(g.size()));
    const auto rhs = [&](const PhaseState& x, PhaseState& dxdt, double) { kuramoto_rhs(g, x, params, dxdt); };
    return integrate_system(rhs, init, cfg);
}

inline Trajectory integrate_quotient(const QuotientMatrix& gamma, const PhaseState& init, const ModelParams& params,
                                     const IntegratorConfig& cfg) {
    if (init.size() != gamma.size())
        throw Error(ErrorCode::DimensionMismatch, "initial state has " + std::to_string(init.size()) +
                                                      " entries, quotient has " + std::to_string(gamma.size()));
    const auto rhs = [&](const PhaseState& f, PhaseState& dfdt, double) { quotient_rhs(gamma, f, params, dfdt); };
    return integrate_system(rhs, init, cfg);
}

} // namespace kuramoto
