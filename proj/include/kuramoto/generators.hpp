#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/partition.hpp"

namespace kuramoto {

struct GraphWithPartition {
    Graph graph;
    VertexPartition partition;
};

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(v), static_cast<int>(v + 1));
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::BadParameter, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v <= n; ++v)
        edges.emplace_back(static_cast<int>(v), static_cast<int>(v % n + 1));
    return Graph::from_edge_list(n, edges);
}

/// K_{1,leaves} with vertex 1 as the centre.
inline Graph star_graph(std::size_t leaves) {
    if (leaves < 1) throw Error(ErrorCode::BadParameter, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (std::size_t v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, static_cast<int>(v));
    return Graph::from_edge_list(leaves + 1, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph::from_edge_list(n, edges);
}

/// Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(1 + i, 1 + (i + 1) % 5);
        edges.emplace_back(6 + i, 6 + (i + 2) % 5);
        edges.emplace_back(1 + i, 6 + i);
    }
    return Graph::from_edge_list(10, edges);
}

/// Hub 1 joined to 2..p+1, a perfect matching i -- i+p between 2..p+1 and
/// p+2..2p+1, and p/2 independent edges pairing p+2..2p+1 consecutively.
/// Partition {1} | {2,...,2p+1}.
inline GraphWithPartition linear_family_graph(int p) {
    if (p < 4 || p % 2 != 0)
        throw Error(ErrorCode::BadParameter, "linear family needs even p >= 4, got " + std::to_string(p));
    const auto n = static_cast<std::size_t>(2 * p + 1);
    std::vector<Edge> edges;
    for (int i = 2; i <= p + 1; ++i) edges.emplace_back(1, i);
    for (int i = 2; i <= p + 1; ++i) edges.emplace_back(i, i + p);
    for (int i = p + 2; i <= 2 * p + 1; i += 2) edges.emplace_back(i, i + 1);
    auto g = Graph::from_edge_list(n, edges);
    std::vector<std::size_t> assignment(n, 1);
    assignment[0] = 0;
    return {std::move(g), VertexPartition::from_assignment(assignment)};
}

/// Seven vertices, S1 = {1}, S2 = {2..7}: vertex 1 has four neighbours in
/// S2, four vertices of S2 have profile (1,1) and two have (0,2). The
/// condition-2 parameters depend only on this profile.
inline GraphWithPartition latoro_profile_graph() {
    auto g = Graph::from_edge_list(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 5}, {6, 7}});
    return {std::move(g), VertexPartition::from_labels(7, {{1}, {2, 3, 4, 5, 6, 7}})};
}

/// Eight vertices with a non-equitable bipartition whose unique condition-2
/// solution is mu1 = mu2 = 1/2, r = 0 (so alpha = pi/2).
///
/// S1 = {1,2,3,4} and S2 = {5,6,7,8} each induce a path; the cross edges
/// form K_{4,4} minus the four edges joining the path ends {1,4} x {5,8}.
/// S1 profiles are (1,2) and (2,4), S2 profiles are (2,1) and (4,2).
inline GraphWithPartition boundary_profile_graph() {
    std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}};
    for (int u = 1; u <= 4; ++u)
        for (int v = 5; v <= 8; ++v) {
            const bool u_end = u == 1 || u == 4;
            const bool v_end = v == 5 || v == 8;
            if (!(u_end && v_end)) edges.emplace_back(u, v);
        }
    auto g = Graph::from_edge_list(8, edges);
    return {std::move(g), VertexPartition::from_labels(8, {{1, 2, 3, 4}, {5, 6, 7, 8}})};
}

} // namespace kuramoto
