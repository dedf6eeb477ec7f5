#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"

namespace kuramoto {

/// Ordered blocks covering {0,...,n-1}.
///
/// Blocks are kept sorted internally and ordered by their smallest vertex,
/// so two partitions with the same blocks compare equal regardless of how
/// they were written down.
class VertexPartition {
public:
    VertexPartition() = default;

    /// 0-indexed blocks; validated and canonicalised.
    static VertexPartition from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
        VertexPartition p;
        p.block_of_.assign(n, npos);
        for (auto& block : blocks) {
            if (block.empty()) throw Error(ErrorCode::PartitionMismatch, "empty block");
            std::sort(block.begin(), block.end());
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (auto v : blocks[b]) {
                if (v >= n)
                    throw Error(ErrorCode::PartitionMismatch,
                                "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
                if (p.block_of_[v] != npos)
                    throw Error(ErrorCode::PartitionMismatch,
                                "vertex " + std::to_string(v + 1) + " appears in two blocks");
                p.block_of_[v] = b;
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (p.block_of_[v] == npos)
                throw Error(ErrorCode::PartitionMismatch, "vertex " + std::to_string(v + 1) + " not covered");
        p.blocks_ = std::move(blocks);
        return p;
    }

    /// 1-indexed labels, as read from partition files.
    static VertexPartition from_labels(std::size_t n, const std::vector<std::vector<int>>& labels) {
        std::vector<std::vector<std::size_t>> blocks;
        blocks.reserve(labels.size());
        for (const auto& block : labels) {
            auto& out = blocks.emplace_back();
            for (int v : block) {
                if (v < 1 || static_cast<std::size_t>(v) > n)
                    throw Error(ErrorCode::PartitionMismatch,
                                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
                out.push_back(static_cast<std::size_t>(v - 1));
            }
        }
        return from_blocks(n, std::move(blocks));
    }

    /// Block b[v] for every vertex v; labels need not be contiguous.
    static VertexPartition from_assignment(std::span<const std::size_t> assignment) {
        std::vector<std::vector<std::size_t>> blocks;
        std::vector<std::size_t> index_of;
        for (std::size_t v = 0; v < assignment.size(); ++v) {
            const auto label = assignment[v];
            if (label >= index_of.size()) index_of.resize(label + 1, npos);
            if (index_of[label] == npos) {
                index_of[label] = blocks.size();
                blocks.emplace_back();
            }
            blocks[index_of[label]].push_back(v);
        }
        return from_blocks(assignment.size(), std::move(blocks));
    }

    static VertexPartition single_block(std::size_t n) {
        return from_assignment(std::vector<std::size_t>(n, 0));
    }

    static VertexPartition discrete(std::size_t n) {
        std::vector<std::size_t> assignment(n);
        for (std::size_t v = 0; v < n; ++v) assignment[v] = v;
        return from_assignment(assignment);
    }

    std::size_t vertex_count() const noexcept { return block_of_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::span<const std::size_t> block(std::size_t b) const { return blocks_[b]; }
    std::size_t block_of(std::size_t v) const { return block_of_[v]; }

    std::vector<std::vector<int>> labels() const {
        std::vector<std::vector<int>> out;
        for (const auto& block : blocks_) {
            auto& o = out.emplace_back();
            for (auto v : block) o.push_back(static_cast<int>(v + 1));
        }
        return out;
    }

    /// True when every block of *this lies inside a block of coarser.
    bool refines(const VertexPartition& coarser) const {
        if (coarser.vertex_count() != vertex_count()) return false;
        for (const auto& block : blocks_)
            for (auto v : block)
                if (coarser.block_of(v) != coarser.block_of(block.front())) return false;
        return true;
    }

    friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const VertexPartition& a, const VertexPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += b ? ",{" : "{";
            for (std::size_t i = 0; i < blocks_[b].size(); ++i)
                s += (i ? "," : "") + std::to_string(blocks_[b][i] + 1);
            s += "}";
        }
        return s + "}";
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// delta(i, B) = number of neighbours of vertex i inside block B.
class DegreeProfile {
public:
    DegreeProfile(std::size_t n, std::size_t k) : n_(n), k_(k), delta_(n * k, 0) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return k_; }

    int operator()(std::size_t v, std::size_t b) const { return delta_[v * k_ + b]; }
    int& operator()(std::size_t v, std::size_t b) { return delta_[v * k_ + b]; }

    std::span<const int> row(std::size_t v) const { return {delta_.data() + v * k_, k_}; }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<int> delta_;
};

/// gamma(a, b): neighbours in block b of any vertex in block a.
class QuotientMatrix {
public:
    explicit QuotientMatrix(std::size_t k) : k_(k), gamma_(k * k, 0) {}
    QuotientMatrix(std::initializer_list<std::initializer_list<int>> rows) : k_(rows.size()) {
        for (const auto& row : rows) {
            if (row.size() != k_) throw Error(ErrorCode::DimensionMismatch, "quotient matrix must be square");
            gamma_.insert(gamma_.end(), row.begin(), row.end());
        }
    }

    std::size_t size() const noexcept { return k_; }
    int operator()(std::size_t a, std::size_t b) const { return gamma_[a * k_ + b]; }
    int& operator()(std::size_t a, std::size_t b) { return gamma_[a * k_ + b]; }

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
    std::size_t k_;
    std::vector<int> gamma_;
};

inline void require_partition_of(const Graph& g, const VertexPartition& p) {
    if (p.vertex_count() != g.size())
        throw Error(ErrorCode::PartitionMismatch, "partition covers " + std::to_string(p.vertex_count()) +
                                                      " vertices, graph has " + std::to_string(g.size()));
}

inline DegreeProfile degree_profile(const Graph& g, const VertexPartition& p) {
    require_partition_of(g, p);
    DegreeProfile profile(g.size(), p.block_count());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g.neighbours(v)) ++profile(v, p.block_of(w));
    return profile;
}

/// The quotient matrix when p is equitable, nothing otherwise.
inline std::optional<QuotientMatrix> is_equitable(const Graph& g, const VertexPartition& p) {
    const auto profile = degree_profile(g, p);
    const auto k = p.block_count();
    QuotientMatrix gamma(k);
    for (std::size_t a = 0; a < k; ++a) {
        const auto block = p.block(a);
        const auto first = profile.row(block.front());
        for (auto v : block.subspan(1))
            if (!std::equal(first.begin(), first.end(), profile.row(v).begin())) return std::nullopt;
        for (std::size_t b = 0; b < k; ++b) gamma(a, b) = first[b];
    }
    return gamma;
}

} // namespace kuramoto
