#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <json.hpp>

#include "kuramoto/analytic.hpp"
#include "kuramoto/condition2.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/graph_io.hpp"
#include "kuramoto/search.hpp"
#include "kuramoto/sync.hpp"

namespace kuramoto {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json labels_of(const std::vector<std::size_t>& vertices) {
    auto out = ordered_json::array();
    for (auto v : vertices) out.push_back(v + 1);
    return out;
}

inline ordered_json real_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

template <class T>
ordered_json fraction_or_null(const std::optional<T>& x) {
    return x ? ordered_json(to_fraction_string(*x)) : ordered_json(nullptr);
}

template <class T>
ordered_json real_or_null(const std::optional<T>& x) {
    return x ? real_or_null(*x) : ordered_json(nullptr);
}

inline ordered_json vector_json(const RationalVector& v) {
    auto out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_fraction_string(x));
    return out;
}

} // namespace detail

/// Grid used when a report carries a residual: 101 points over [0, 10].
inline std::vector<double> default_verification_grid() { return uniform_grid(0.0, 10.0, 100); }

inline bool has_closed_form(const BipartitionAnalysis& a) {
    return a.certificate && (a.classification == Classification::Condition2Unique ||
                             (a.classification == Classification::Boundary &&
                              a.certificate->boundary == BoundaryKind::EqualMu));
}

/// Certificate report. Rationals are exact "p/q" strings; quantities that
/// do not exist for the classification are null.
inline ordered_json certificate_report(const Graph& g, const BipartitionAnalysis& a) {
    ordered_json out;
    out["bipartition"] = {{"s1", detail::labels_of(a.s1)}, {"s2", detail::labels_of(a.s2)}};
    out["classification"] = to_string(a.classification);
    const auto& cert = a.certificate;
    out["mu1"] = cert ? ordered_json(to_fraction_string(cert->mu1)) : ordered_json(nullptr);
    out["mu2"] = cert ? ordered_json(to_fraction_string(cert->mu2)) : ordered_json(nullptr);
    out["r"] = cert ? ordered_json(to_fraction_string(cert->r)) : ordered_json(nullptr);
    out["alpha"] = cert ? detail::real_or_null(cert->alpha) : ordered_json(nullptr);
    out["beta"] = cert ? detail::real_or_null(cert->beta) : ordered_json(nullptr);
    out["offset"] = cert ? detail::real_or_null(cert->offset) : ordered_json(nullptr);
    out["residual"] = has_closed_form(a)
                          ? ordered_json(verify_certificate(g, a, 0.0, default_verification_grid()))
                          : ordered_json(nullptr);
    out["boundary"] = cert ? to_string(cert->boundary) : to_string(BoundaryKind::None);
    out["solution_set"] = to_string(a.solutions.kind);
    if (a.gamma) {
        auto rows = ordered_json::array();
        for (std::size_t i = 0; i < a.gamma->size(); ++i) {
            auto row = ordered_json::array();
            for (std::size_t j = 0; j < a.gamma->size(); ++j) row.push_back((*a.gamma)(i, j));
            rows.push_back(std::move(row));
        }
        out["gamma"] = std::move(rows);
    }
    if (a.family) {
        const auto& f = *a.family;
        ordered_json fam;
        fam["feasible"] = f.feasible;
        fam["basepoint"] = f.basepoint ? detail::vector_json(*f.basepoint) : ordered_json(nullptr);
        fam["direction"] = f.direction ? detail::vector_json(*f.direction) : ordered_json(nullptr);
        fam["t_lo"] = detail::fraction_or_null(f.t_lo);
        fam["t_hi"] = detail::fraction_or_null(f.t_hi);
        fam["alpha_lo"] = detail::real_or_null(f.alpha_lo);
        fam["alpha_mid"] = detail::real_or_null(f.alpha_mid);
        fam["alpha_hi"] = detail::real_or_null(f.alpha_hi);
        out["family"] = std::move(fam);
    }
    return out;
}

inline ordered_json quotient_report(const VertexPartition& p, const std::optional<QuotientMatrix>& gamma) {
    ordered_json out;
    out["partition"] = p.labels();
    out["equitable"] = gamma.has_value();
    if (gamma) {
        auto rows = ordered_json::array();
        for (std::size_t i = 0; i < gamma->size(); ++i) {
            auto row = ordered_json::array();
            for (std::size_t j = 0; j < gamma->size(); ++j) row.push_back((*gamma)(i, j));
            rows.push_back(std::move(row));
        }
        out["gamma"] = std::move(rows);
    } else {
        out["gamma"] = nullptr;
    }
    return out;
}

inline ordered_json search_summary_json(const SearchSummary& s) {
    ordered_json counts;
    for (auto c : {Classification::Equitable, Classification::Condition2Unique, Classification::Condition2Family,
                   Classification::Boundary, Classification::Infeasible})
        counts[to_string(c)] = s.count(c);
    return {{"summary", {{"n", s.vertex_count}, {"bipartitions", s.bipartitions}, {"counts", counts}}}};
}

inline ordered_json sync_report_json(const SyncReport& r) {
    ordered_json out;
    out["thresholds"] = {{"exact_tol", r.exact_tol},
                         {"asymptotic_tol", r.asymptotic_tol},
                         {"tail_fraction", r.tail_fraction},
                         {"tail_points", r.tail_points}};
    out["exact_partition"] = r.exact_partition.labels();
    auto chained = ordered_json::array();
    for (const auto& c : r.chained) chained.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"max_distance", c.max_distance}});
    out["chained_pairs"] = std::move(chained);
    out["clusters"] = r.clusters.labels();
    out["tail_max_deviation"] = r.tail_max_deviation;
    auto final_means = ordered_json::array();
    for (const auto& m : r.block_means) final_means.push_back(m.empty() ? 0.0 : m.back());
    out["final_block_means"] = std::move(final_means);
    auto pairs = ordered_json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"i", p.i + 1},
                         {"j", p.j + 1},
                         {"status", to_string(p.status)},
                         {"max_all", p.max_all},
                         {"tail_max", p.tail_max},
                         {"preceding_max", p.preceding_max}});
    out["pairs"] = std::move(pairs);
    return out;
}

} // namespace kuramoto
