#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/partition.hpp"

namespace kuramoto {

/// Colour refinement: repeatedly split every block by the vector of
/// neighbour counts into the current blocks until nothing splits. The
/// fixpoint is the coarsest equitable partition refining seed.
inline VertexPartition coarsest_equitable_refinement(const Graph& g, const VertexPartition& seed) {
    require_partition_of(g, seed);
    const auto n = g.size();
    VertexPartition current = seed;
    for (;;) {
        const auto k = current.block_count();
        std::map<std::vector<std::size_t>, std::size_t> colour_of;
        std::vector<std::size_t> assignment(n);
        std::vector<std::size_t> signature(k + 1);
        for (std::size_t v = 0; v < n; ++v) {
            std::fill(signature.begin(), signature.end(), 0);
            signature[0] = current.block_of(v);
            for (auto w : g.neighbours(v)) ++signature[1 + current.block_of(w)];
            assignment[v] = colour_of.try_emplace(signature, colour_of.size()).first->second;
        }
        auto next = VertexPartition::from_assignment(assignment);
        if (next.block_count() == k) return next;
        current = std::move(next);
    }
}

/// Orbit partitions of all automorphisms, by exhaustive search.
///
/// Each automorphism contributes the partition into the cycles of that one
/// permutation; duplicates are dropped and the result is sorted. Candidate
/// images are pruned by degree and by adjacency to already-mapped vertices.
inline std::vector<VertexPartition> orbit_partition_brute_force(const Graph& g, std::size_t limit = 10) {
    const auto n = g.size();
    if (n > limit)
        throw Error(ErrorCode::TooLarge,
                    "automorphism search capped at n=" + std::to_string(limit) + ", got " + std::to_string(n));

    std::set<VertexPartition> found;
    std::vector<std::size_t> image(n);
    std::vector<char> used(n, 0);

    const auto record = [&] {
        std::vector<std::size_t> assignment(n, n);
        for (std::size_t start = 0; start < n; ++start) {
            if (assignment[start] != n) continue;
            for (auto v = start; assignment[v] == n; v = image[v]) assignment[v] = start;
        }
        found.insert(VertexPartition::from_assignment(assignment));
    };

    std::function<void(std::size_t)> extend = [&](std::size_t v) {
        if (v == n) {
            record();
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool consistent = true;
            for (std::size_t u = 0; u < v && consistent; ++u)
                consistent = g.adjacent(u, v) == g.adjacent(image[u], w);
            if (!consistent) continue;
            used[w] = 1;
            image[v] = w;
            extend(v + 1);
            used[w] = 0;
        }
    };
    extend(0);
    return {found.begin(), found.end()};
}

/// All unordered bipartitions of {0,...,n-1}, each exactly once.
///
/// Index m encodes the block containing vertex 0 (always listed first): it
/// holds vertex 0 plus every v >= 1 whose bit v-1 is set in m. Indices run
/// over [0, 2^(n-1) - 1), which excludes the all-ones mask whose second
/// block would be empty. Random access makes the range easy to split
/// across workers.
class Bipartitions {
public:
    explicit Bipartitions(std::size_t n) : n_(n) {
        if (n < 2) throw Error(ErrorCode::BadParameter, "bipartitions need n >= 2");
        if (n > 63) throw Error(ErrorCode::TooLarge, "bipartition enumeration limited to n <= 63");
    }

    std::uint64_t size() const noexcept { return (std::uint64_t{1} << (n_ - 1)) - 1; }

    VertexPartition operator[](std::uint64_t m) const {
        std::vector<std::size_t> assignment(n_, 1);
        assignment[0] = 0;
        for (std::size_t v = 1; v < n_; ++v)
            if ((m >> (v - 1)) & 1U) assignment[v] = 0;
        return VertexPartition::from_assignment(assignment);
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = VertexPartition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Bipartitions* range, std::uint64_t m) : range_(range), m_(m) {}

        VertexPartition operator*() const { return (*range_)[m_]; }
        iterator& operator++() {
            ++m_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++m_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.m_ == b.m_; }

    private:
        const Bipartitions* range_ = nullptr;
        std::uint64_t m_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    std::size_t n_;
};

inline Bipartitions enumerate_bipartitions(const Graph& g) { return Bipartitions(g.size()); }

} // namespace kuramoto
