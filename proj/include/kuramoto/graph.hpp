#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kuramoto/error.hpp"

namespace kuramoto {

/// A 1-indexed vertex pair as it appears in edge lists and reports.
using Edge = std::pair<int, int>;

/// Simple undirected connected graph.
///
/// Vertices are stored 0-indexed; everything that crosses the I/O boundary
/// (edge lists, partitions, reports) uses 1-indexed labels.
class Graph {
public:
    /// Builds a graph from 1-indexed pairs. Duplicate pairs, in either
    /// orientation, collapse to a single edge. Throws on self-loops,
    /// out-of-range labels, n == 0, and disconnected input.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
        if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");
        Graph g;
        g.n_ = n;
        g.adjacency_.assign(n * n, 0);
        g.neighbours_.resize(n);
        for (const auto& [u, v] : pairs) {
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
                throw Error(ErrorCode::VertexOutOfRange,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." +
                                std::to_string(n));
            if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
            const auto a = static_cast<std::size_t>(u - 1);
            const auto b = static_cast<std::size_t>(v - 1);
            if (g.adjacency_[a * n + b]) continue;
            g.adjacency_[a * n + b] = g.adjacency_[b * n + a] = 1;
            g.neighbours_[a].push_back(b);
            g.neighbours_[b].push_back(a);
            ++g.edge_count_;
        }
        for (auto& list : g.neighbours_) std::sort(list.begin(), list.end());
        if (!g.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
        return g;
    }

    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
        return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const std::size_t> neighbours(std::size_t v) const { return neighbours_[v]; }
    std::size_t degree(std::size_t v) const { return neighbours_[v].size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * n_ + v] != 0; }

    /// Sorted 1-indexed edges with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v : neighbours_[u])
                if (u < v) out.emplace_back(static_cast<int>(u + 1), static_cast<int>(v + 1));
        return out;
    }

    /// Returns d when every vertex has degree d.
    std::optional<std::size_t> regular_degree() const {
        for (std::size_t v = 1; v < n_; ++v)
            if (degree(v) != degree(0)) return std::nullopt;
        return degree(0);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
    }

private:
    Graph() = default;

    bool connected() const {
        std::vector<char> seen(n_, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbours_[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
        return reached == n_;
    }

    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<std::size_t>> neighbours_;
};

} // namespace kuramoto
