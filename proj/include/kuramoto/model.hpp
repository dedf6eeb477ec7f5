#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/partition.hpp"

namespace kuramoto {

/// Unwrapped phases, one per vertex (or per block for quotient systems).
using PhaseState = std::vector<double>;

/// Phase frustration alpha, natural frequency omega, coupling lambda.
struct ModelParams {
    double alpha = 0.0;
    double omega = 0.0;
    double lambda = 1.0;

    /// alpha = pi/2 is accepted as the boundary extension of the model.
    bool alpha_at_boundary() const noexcept { return alpha == std::numbers::pi / 2; }

    void validate() const {
        if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2))
            throw Error(ErrorCode::BadParameter, "alpha must lie in (0, pi/2], got " + std::to_string(alpha));
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw Error(ErrorCode::BadParameter, "lambda must be positive, got " + std::to_string(lambda));
        if (!std::isfinite(omega)) throw Error(ErrorCode::BadParameter, "omega must be finite");
    }
};

/// out[i] = omega + lambda * sum_j A_ij sin(theta_j - theta_i - alpha)
inline void kuramoto_rhs(const Graph& g, std::span<const double> theta, const ModelParams& params,
                         std::span<double> out) {
    if (theta.size() != g.size() || out.size() != g.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "state has " + std::to_string(theta.size()) + " phases, graph has " + std::to_string(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        double sum = 0.0;
        for (auto j : g.neighbours(i)) sum += std::sin(theta[j] - theta[i] - params.alpha);
        out[i] = params.omega + params.lambda * sum;
    }
}

inline PhaseState kuramoto_rhs(const Graph& g, std::span<const double> theta, const ModelParams& params) {
    PhaseState out(theta.size());
    kuramoto_rhs(g, theta, params, out);
    return out;
}

/// Block dynamics of an equitable partition:
/// out[a] = omega + lambda * sum_b gamma_ab sin(f_b - f_a - alpha).
inline void quotient_rhs(const QuotientMatrix& gamma, std::span<const double> f, const ModelParams& params,
                         std::span<double> out) {
    const auto k = gamma.size();
    if (f.size() != k || out.size() != k)
        throw Error(ErrorCode::DimensionMismatch,
                    "state has " + std::to_string(f.size()) + " entries, quotient has " + std::to_string(k));
    for (std::size_t a = 0; a < k; ++a) {
        double sum = 0.0;
        for (std::size_t b = 0; b < k; ++b)
            if (gamma(a, b) != 0) sum += gamma(a, b) * std::sin(f[b] - f[a] - params.alpha);
        out[a] = params.omega + params.lambda * sum;
    }
}

inline PhaseState quotient_rhs(const QuotientMatrix& gamma, std::span<const double> f, double alpha) {
    PhaseState out(f.size());
    quotient_rhs(gamma, f, ModelParams{alpha}, out);
    return out;
}

} // namespace kuramoto
