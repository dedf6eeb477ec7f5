#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuramoto/analytic.hpp"
#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/model.hpp"
#include "kuramoto/partition.hpp"
#include "kuramoto/rational.hpp"

namespace kuramoto {

/// One equation mu1_coeff*mu1 + mu2_coeff*mu2 - r = rhs.
///
/// A vertex i of S1 contributes delta(i,2)*mu1 - r = delta(i,1); a vertex j
/// of S2 contributes delta(j,1)*mu2 - r = delta(j,2).
struct Condition2Row {
    std::size_t vertex = 0;
    int mu1_coeff = 0;
    int mu2_coeff = 0;
    int rhs = 0;
};

struct Condition2System {
    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    std::vector<Condition2Row> rows;

    /// Unknown order is (mu1, mu2, r).
    SolutionSet solve() const {
        std::vector<RationalVector> a;
        RationalVector b;
        a.reserve(rows.size());
        for (const auto& row : rows) {
            a.push_back({Rational(row.mu1_coeff), Rational(row.mu2_coeff), Rational(-1)});
            b.emplace_back(row.rhs);
        }
        return solve_linear_system(std::move(a), std::move(b));
    }
};

inline void require_bipartition(const Graph& g, const VertexPartition& bip) {
    require_partition_of(g, bip);
    if (bip.block_count() != 2)
        throw Error(ErrorCode::NotBipartition, "expected 2 blocks, got " + std::to_string(bip.block_count()));
}

/// S1 is the block listed first unless swap is set.
inline Condition2System build_condition2_system(const Graph& g, const VertexPartition& bip, bool swap = false) {
    require_bipartition(g, bip);
    const std::size_t first = swap ? 1 : 0;
    const auto profile = degree_profile(g, bip);
    Condition2System sys;
    sys.s1.assign(bip.block(first).begin(), bip.block(first).end());
    sys.s2.assign(bip.block(1 - first).begin(), bip.block(1 - first).end());
    for (auto i : sys.s1) sys.rows.push_back({i, profile(i, 1 - first), 0, profile(i, first)});
    for (auto j : sys.s2) sys.rows.push_back({j, 0, profile(j, first), profile(j, 1 - first)});
    return sys;
}

inline SolutionSet solve_condition2(const Condition2System& sys) { return sys.solve(); }

enum class BoundaryKind { None, EqualMu, SumMagnitudeTwo };

inline const char* to_string(BoundaryKind kind) {
    switch (kind) {
    case BoundaryKind::None: return "none";
    case BoundaryKind::EqualMu: return "mu1_equals_mu2";
    case BoundaryKind::SumMagnitudeTwo: return "abs_sum_equals_2";
    }
    return "?";
}

struct AlphaValue {
    double alpha = 0.0;
    BoundaryKind boundary = BoundaryKind::None;
};

/// alpha = arctan( sqrt(4 - (mu1+mu2)^2) / (mu1 - mu2) ).
///
/// Requires |mu1+mu2| <= 2 and mu1 >= mu2. mu1 == mu2 gives exactly pi/2
/// and |mu1+mu2| == 2 gives 0, each flagged; both at once has no angle.
inline AlphaValue alpha_from_mu(const Rational& mu1, const Rational& mu2) {
    const Rational sum = mu1 + mu2;
    const Rational diff = mu1 - mu2;
    const Rational radicand = 4 - sum * sum;
    if (radicand < 0 || diff < 0)
        throw Error(ErrorCode::InfeasibleMu, "need |mu1+mu2| <= 2 and mu1 >= mu2, got mu1 = " + to_fraction_string(mu1) +
                                                 ", mu2 = " + to_fraction_string(mu2));
    if (diff == 0) {
        if (radicand == 0) throw Error(ErrorCode::InfeasibleMu, "alpha undefined at mu1 = mu2 = +-1");
        return {std::numbers::pi / 2, BoundaryKind::EqualMu};
    }
    if (radicand == 0) return {0.0, BoundaryKind::SumMagnitudeTwo};
    return {std::atan(std::sqrt(to_double(radicand)) / to_double(diff)), BoundaryKind::None};
}

/// alpha + beta = arccos(-(mu1+mu2)/2), the phase lead of S2 over S1.
inline double offset_from_mu(const Rational& mu1, const Rational& mu2) {
    const Rational half = -(mu1 + mu2) / 2;
    if (half > 1 || half < -1) throw Error(ErrorCode::InfeasibleMu, "|mu1+mu2| exceeds 2");
    return std::acos(to_double(half));
}

/// beta = arccos(-(mu1+mu2)/2) - alpha, taking the 2 pi k branch k = 0.
inline double beta_from_mu(const Rational& mu1, const Rational& mu2) {
    const double offset = offset_from_mu(mu1, mu2);
    return offset - alpha_from_mu(mu1, mu2).alpha;
}

enum class Classification { Equitable, Condition2Unique, Condition2Family, Boundary, Infeasible };

inline const char* to_string(Classification c) {
    switch (c) {
    case Classification::Equitable: return "Equitable";
    case Classification::Condition2Unique: return "Condition2Unique";
    case Classification::Condition2Family: return "Condition2Family";
    case Classification::Boundary: return "Boundary";
    case Classification::Infeasible: return "Infeasible";
    }
    return "?";
}

/// Exact (mu1, mu2, r) with the angles derived from them.
struct Condition2Certificate {
    Rational mu1;
    Rational mu2;
    Rational r;
    /// NaN when the angles are undefined for this (mu1, mu2).
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    double offset = std::numeric_limits<double>::quiet_NaN();
    /// Strict: |mu1+mu2| < 2 and mu1 > mu2.
    bool feasible = false;
    BoundaryKind boundary = BoundaryKind::None;

    bool has_angles() const noexcept { return !std::isnan(alpha); }
};

inline Condition2Certificate make_certificate(Rational mu1, Rational mu2, Rational r) {
    Condition2Certificate cert{std::move(mu1), std::move(mu2), std::move(r)};
    try {
        const auto a = alpha_from_mu(cert.mu1, cert.mu2);
        cert.alpha = a.alpha;
        cert.boundary = a.boundary;
        cert.offset = offset_from_mu(cert.mu1, cert.mu2);
        cert.beta = cert.offset - cert.alpha;
        cert.feasible = a.boundary == BoundaryKind::None;
    } catch (const Error&) {
        cert.feasible = false;
    }
    return cert;
}

/// Where a positive-dimensional solution set meets the open region
/// |mu1+mu2| < 2, mu1 > mu2.
///
/// For a line basepoint + t*direction the feasible parameters form an open
/// interval (t_lo, t_hi), either end possibly unbounded. alpha is evaluated
/// at the interval ends and midpoint for orientation only.
struct FamilyRegion {
    bool feasible = false;
    /// Set when the feasible region was reduced to a single line.
    std::optional<RationalVector> basepoint;
    std::optional<RationalVector> direction;
    std::optional<Rational> t_lo;
    std::optional<Rational> t_hi;
    std::optional<double> alpha_lo;
    std::optional<double> alpha_mid;
    std::optional<double> alpha_hi;
};

namespace detail {

// (mu1 + mu2, mu1 - mu2) of a vector in (mu1, mu2, r) coordinates.
inline std::pair<Rational, Rational> sum_diff(const RationalVector& v) { return {v[0] + v[1], v[0] - v[1]}; }

inline std::optional<double> alpha_at(const RationalVector& point) {
    try {
        return alpha_from_mu(point[0], point[1]).alpha;
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline RationalVector point_on(const RationalVector& base, const RationalVector& dir, const Rational& t) {
    RationalVector p(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + t * dir[i];
    return p;
}

inline FamilyRegion line_region(const RationalVector& base, const RationalVector& dir) {
    FamilyRegion region;
    region.basepoint = base;
    region.direction = dir;
    const auto [s0, q0] = sum_diff(base);
    const auto [s1, q1] = sum_diff(dir);
    std::optional<Rational> lo, hi;
    const auto raise_lo = [&](const Rational& x) {
        if (!lo || x > *lo) lo = x;
    };
    const auto lower_hi = [&](const Rational& x) {
        if (!hi || x < *hi) hi = x;
    };
    if (s1 == 0) {
        if (!(s0 < 2 && s0 > -2)) return region;
    } else {
        Rational a = (-2 - s0) / s1, b = (2 - s0) / s1;
        if (a > b) std::swap(a, b);
        raise_lo(a);
        lower_hi(b);
    }
    if (q1 == 0) {
        if (!(q0 > 0)) return region;
    } else if (q1 > 0) {
        raise_lo(-q0 / q1);
    } else {
        lower_hi(-q0 / q1);
    }
    if (lo && hi && !(*lo < *hi)) return region;
    region.feasible = true;
    region.t_lo = lo;
    region.t_hi = hi;
    Rational mid = lo && hi ? (*lo + *hi) / 2 : lo ? *lo + 1 : hi ? *hi - 1 : Rational(0);
    if (lo) region.alpha_lo = alpha_at(point_on(base, dir, *lo));
    if (hi) region.alpha_hi = alpha_at(point_on(base, dir, *hi));
    region.alpha_mid = alpha_at(point_on(base, dir, mid));
    return region;
}

} // namespace detail

inline FamilyRegion family_region(const SolutionSet& set) {
    if (set.dimension() == 0) return {};
    // Directions that move (mu1 + mu2, mu1 - mu2); those that only move r
    // do not change feasibility.
    std::vector<const RationalVector*> moving;
    for (const auto& d : set.directions) {
        const auto [s, q] = detail::sum_diff(d);
        if (s != 0 || q != 0) moving.push_back(&d);
    }
    if (moving.empty()) {
        FamilyRegion region;
        const auto [s, q] = detail::sum_diff(set.basepoint);
        region.feasible = s < 2 && s > -2 && q > 0;
        if (region.feasible) region.alpha_mid = detail::alpha_at(set.basepoint);
        return region;
    }
    for (std::size_t a = 0; a < moving.size(); ++a)
        for (std::size_t b = a + 1; b < moving.size(); ++b) {
            const auto [sa, qa] = detail::sum_diff(*moving[a]);
            const auto [sb, qb] = detail::sum_diff(*moving[b]);
            if (sa * qb - sb * qa != 0) {
                // Projection covers an open set of the (sum, diff) plane,
                // which always meets the open feasible region.
                FamilyRegion region;
                region.feasible = true;
                return region;
            }
        }
    return detail::line_region(set.basepoint, *moving.front());
}

/// Outcome of testing one bipartition. s1 and s2 record the orientation the
/// parameters refer to (S1 first in every condition-2 equation).
struct BipartitionAnalysis {
    Classification classification = Classification::Infeasible;
    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    SolutionSet solutions;
    std::optional<QuotientMatrix> gamma;
    std::optional<Condition2Certificate> certificate;
    std::optional<FamilyRegion> family;
};

namespace detail {

inline BipartitionAnalysis analyse_oriented(const Graph& g, const VertexPartition& bip, bool swap) {
    const auto sys = build_condition2_system(g, bip, swap);
    BipartitionAnalysis out;
    out.s1 = sys.s1;
    out.s2 = sys.s2;
    out.solutions = sys.solve();
    if (out.solutions.empty()) return out;
    if (out.solutions.kind == SolutionKind::Point) {
        const auto& p = out.solutions.basepoint;
        auto cert = make_certificate(p[0], p[1], p[2]);
        if (cert.feasible)
            out.classification = Classification::Condition2Unique;
        else if (cert.has_angles())
            out.classification = Classification::Boundary;
        out.certificate = std::move(cert);
        return out;
    }
    out.family = family_region(out.solutions);
    if (out.family->feasible) out.classification = Classification::Condition2Family;
    return out;
}

} // namespace detail

/// Equitable bipartitions are reported as such (they are alpha-Kuramoto for
/// every alpha). Otherwise the condition-2 system is solved with the first
/// block as S1; when that orientation has a solution but no admissible
/// alpha, the swapped orientation is tried, since exchanging S1 and S2
/// exchanges mu1 and mu2.
inline BipartitionAnalysis classify_bipartition(const Graph& g, const VertexPartition& bip) {
    require_bipartition(g, bip);
    if (auto gamma = is_equitable(g, bip)) {
        auto out = detail::analyse_oriented(g, bip, false);
        out.classification = Classification::Equitable;
        out.gamma = std::move(gamma);
        return out;
    }
    auto out = detail::analyse_oriented(g, bip, false);
    if (out.classification == Classification::Infeasible && !out.solutions.empty()) {
        auto swapped = detail::analyse_oriented(g, bip, true);
        if (swapped.classification != Classification::Infeasible) return swapped;
    }
    return out;
}

/// Closed-form synchronised solution carried by a certificate.
struct ClosedFormSolution {
    ModelParams params;
    LinearPhaseSolution solution;
    PhaseState initial() const { return solution.at(0.0); }
};

/// theta = c + slope t on S1 and c + (alpha + beta) + slope t on S2, with
/// slope = omega + lambda r sin(alpha).
inline ClosedFormSolution certificate_to_solution(const BipartitionAnalysis& analysis, double c, double omega = 0.0,
                                                  double lambda = 1.0) {
    const bool usable = analysis.certificate &&
                        (analysis.classification == Classification::Condition2Unique ||
                         (analysis.classification == Classification::Boundary &&
                          analysis.certificate->boundary == BoundaryKind::EqualMu));
    if (!usable)
        throw Error(ErrorCode::NoCertificate,
                    std::string("no closed-form solution for a ") + to_string(analysis.classification) + " bipartition");
    if (analysis.s1.empty() || analysis.s2.empty())
        throw Error(ErrorCode::NotBipartition, "both blocks must be non-empty");
    const auto& cert = *analysis.certificate;
    ClosedFormSolution out;
    out.params = ModelParams{cert.alpha, omega, lambda};
    out.solution.offsets.assign(analysis.s1.size() + analysis.s2.size(), c);
    for (auto j : analysis.s2) out.solution.offsets[j] = c + cert.offset;
    out.solution.slope = omega + lambda * to_double(cert.r) * std::sin(cert.alpha);
    return out;
}

constexpr double certificate_residual_limit = 1e-9;

/// Residual of the closed form under the model's right-hand side; the
/// bipartition is certified alpha-Kuramoto when it is at most 1e-9.
inline double verify_certificate(const Graph& g, const BipartitionAnalysis& analysis, double c,
                                 std::span<const double> grid) {
    const auto closed = certificate_to_solution(analysis, c);
    if (closed.solution.dimension() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "certificate does not match the graph");
    return residual_max(g, closed.solution, closed.params, grid);
}

} // namespace kuramoto
