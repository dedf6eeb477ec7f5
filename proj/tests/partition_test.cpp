#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kuramoto/equitable.hpp"
#include "kuramoto/error.hpp"
#include "kuramoto/generators.hpp"
#include "kuramoto/graph_io.hpp"
#include "kuramoto/partition.hpp"
#include "oracles.hpp"

using namespace kuramoto;

namespace {

VertexPartition from_oracle(const oracle::Assignment& a) { return VertexPartition::from_assignment(a); }

VertexPartition coarsest(const Graph& g) {
    return coarsest_equitable_refinement(g, VertexPartition::single_block(g.size()));
}

/// Cycle partitions of every automorphism, by trying all n! permutations.
std::set<VertexPartition> orbit_oracle(const Graph& g) {
    const auto n = g.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<VertexPartition> out;
    do {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = 0; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
        if (!ok) continue;
        std::vector<std::size_t> assignment(n, n);
        for (std::size_t s = 0; s < n; ++s)
            for (auto v = s; assignment[v] == n; v = perm[v]) assignment[v] = s;
        out.insert(VertexPartition::from_assignment(assignment));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST(Partition, CanonicalForm) {
    const auto a = VertexPartition::from_labels(4, {{4, 2}, {3, 1}});
    const auto b = VertexPartition::from_blocks(4, {{0, 2}, {1, 3}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), "{{1,3},{2,4}}");
    EXPECT_EQ(a.block_of(3), 1u);
    EXPECT_EQ(a.labels(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
    EXPECT_TRUE(VertexPartition::discrete(4).refines(a));
    EXPECT_TRUE(a.refines(VertexPartition::single_block(4)));
    EXPECT_FALSE(a.refines(VertexPartition::from_labels(4, {{1, 2}, {3, 4}})));
}

TEST(Partition, Errors) {
    EXPECT_THROW(VertexPartition::from_labels(3, {{1, 2}}), Error);
    EXPECT_THROW(VertexPartition::from_labels(3, {{1, 2}, {2, 3}}), Error);
    EXPECT_THROW(VertexPartition::from_labels(3, {{1, 2, 3}, {}}), Error);
    EXPECT_THROW(VertexPartition::from_labels(3, {{1, 2, 4}}), Error);
    try {
        degree_profile(path_graph(3), VertexPartition::single_block(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PartitionMismatch);
    }
}

TEST(DegreeProfile, LinearFamilyTable) {
    const auto gp = linear_family_graph(4);
    const auto delta = degree_profile(gp.graph, gp.partition);
    EXPECT_EQ(delta(0, 0), 0);
    EXPECT_EQ(delta(0, 1), 4);
    for (std::size_t v = 1; v <= 4; ++v) {
        EXPECT_EQ(delta(v, 0), 1) << v;
        EXPECT_EQ(delta(v, 1), 1) << v;
    }
    for (std::size_t v = 5; v <= 8; ++v) {
        EXPECT_EQ(delta(v, 0), 0) << v;
        EXPECT_EQ(delta(v, 1), 2) << v;
    }
}

TEST(DegreeProfile, SmallGraphs) {
    const auto p3 = degree_profile(path_graph(3), VertexPartition::from_labels(3, {{1, 3}, {2}}));
    EXPECT_EQ(p3(0, 0), 0);
    EXPECT_EQ(p3(0, 1), 1);
    EXPECT_EQ(p3(1, 0), 2);
    EXPECT_EQ(p3(1, 1), 0);
    const auto k3 = degree_profile(complete_graph(3), VertexPartition::single_block(3));
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(k3(v, 0), 2);
}

TEST(Equitable, Examples) {
    const auto star = is_equitable(star_graph(4), VertexPartition::from_labels(5, {{1}, {2, 3, 4, 5}}));
    ASSERT_TRUE(star);
    EXPECT_EQ(*star, (QuotientMatrix{{0, 4}, {1, 0}}));

    const auto gp = linear_family_graph(4);
    EXPECT_FALSE(is_equitable(gp.graph, gp.partition));

    const auto c4 = is_equitable(cycle_graph(4), VertexPartition::from_labels(4, {{1, 3}, {2, 4}}));
    ASSERT_TRUE(c4);
    EXPECT_EQ(*c4, (QuotientMatrix{{0, 2}, {2, 0}}));
    EXPECT_FALSE(is_equitable(cycle_graph(4), VertexPartition::from_labels(4, {{1, 2}, {3}, {4}})));
}

TEST(Equitable, AgreesWithDefinitionOnRandomPartitions) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = 2 + rng() % 7;
        const auto g = oracle::random_connected_graph(n, 0.4, rng);
        oracle::Assignment a(n);
        const auto k = 1 + rng() % n;
        for (auto& b : a) b = rng() % k;
        EXPECT_EQ(is_equitable(g, from_oracle(a)).has_value(), oracle::equitable(oracle::adjacency(g), a));
    }
}

// Expected partitions below were produced by oracle::coarsest_equitable and
// are re-derived here so the frozen values stay honest.
TEST(Refinement, FrozenExamples) {
    struct Case {
        Graph g;
        std::string expected;
    };
    const std::vector<Case> cases{
        {path_graph(3), "{{1,3},{2}}"},
        {complete_graph(3), "{{1,2,3}}"},
        {star_graph(4), "{{1},{2,3,4,5}}"},
        {path_graph(4), "{{1,4},{2,3}}"},
        {linear_family_graph(4).graph, "{{1},{2,3,4,5},{6,7,8,9}}"},
        {latoro_profile_graph().graph, "{{1},{2,3},{4,5},{6,7}}"},
    };
    for (const auto& c : cases) {
        bool unique = false;
        EXPECT_EQ(from_oracle(oracle::coarsest_equitable(oracle::adjacency(c.g), &unique)).to_string(), c.expected);
        EXPECT_TRUE(unique);
        EXPECT_EQ(coarsest(c.g).to_string(), c.expected);
    }
    EXPECT_EQ(coarsest(petersen_graph()).block_count(), 1u);
}

TEST(Refinement, RespectsSeed) {
    const auto g = cycle_graph(6);
    const auto seed = VertexPartition::from_labels(6, {{1}, {2, 3, 4, 5, 6}});
    const auto r = coarsest_equitable_refinement(g, seed);
    EXPECT_EQ(r.to_string(), "{{1},{2,6},{3,5},{4}}");
    EXPECT_TRUE(r.refines(seed));
    EXPECT_TRUE(is_equitable(g, r));
}

TEST(RefinementProperty, FixpointAndRefinesSeed) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 1 + rng() % 14;
        const auto g = oracle::random_connected_graph(n, 0.25, rng);
        std::vector<std::size_t> seed_assignment(n);
        for (auto& b : seed_assignment) b = rng() % 3;
        const auto seed = VertexPartition::from_assignment(seed_assignment);
        const auto r = coarsest_equitable_refinement(g, seed);
        EXPECT_TRUE(r.refines(seed));
        EXPECT_TRUE(is_equitable(g, r));
        EXPECT_EQ(coarsest_equitable_refinement(g, r), r);
    }
}

TEST(RefinementProperty, ExhaustiveUpToFiveVertices) {
    for (std::size_t n = 1; n <= 5; ++n)
        oracle::for_each_connected_graph(n, [&](const Graph& g) {
            EXPECT_EQ(coarsest(g), from_oracle(oracle::coarsest_equitable(oracle::adjacency(g)))) << format_edge_list(g);
        });
}

TEST(Orbits, SmallGraphs) {
    const auto k2 = orbit_partition_brute_force(complete_graph(2));
    EXPECT_EQ(std::set<VertexPartition>(k2.begin(), k2.end()),
              (std::set<VertexPartition>{VertexPartition::discrete(2), VertexPartition::single_block(2)}));
    const auto p3 = orbit_partition_brute_force(path_graph(3));
    EXPECT_EQ(std::set<VertexPartition>(p3.begin(), p3.end()),
              (std::set<VertexPartition>{VertexPartition::discrete(3), VertexPartition::from_labels(3, {{1, 3}, {2}})}));
    EXPECT_TRUE(std::is_sorted(p3.begin(), p3.end()));
}

TEST(Orbits, MatchPermutationOracle) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_connected_graph(1 + rng() % 7, 0.35, rng);
        const auto found = orbit_partition_brute_force(g);
        EXPECT_EQ(std::set<VertexPartition>(found.begin(), found.end()), orbit_oracle(g));
    }
}

TEST(Orbits, TooLarge) {
    try {
        orbit_partition_brute_force(path_graph(11));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

// The single block of the Petersen graph is equitable, yet no automorphism
// permutes all ten vertices in one cycle.
TEST(Orbits, EquitableNeedNotBeOrbit) {
    const auto g = petersen_graph();
    const auto single = VertexPartition::single_block(10);
    ASSERT_TRUE(is_equitable(g, single));
    const auto orbits = orbit_partition_brute_force(g);
    EXPECT_EQ(std::count(orbits.begin(), orbits.end(), single), 0);
}

TEST(Bipartitions, Counts) {
    EXPECT_EQ(Bipartitions(2).size(), 1u);
    EXPECT_EQ(Bipartitions(4).size(), 7u);
    EXPECT_EQ(Bipartitions(10).size(), 511u);
    EXPECT_THROW(Bipartitions(1), Error);
}

TEST(Bipartitions, DistinctAndTwoBlocks) {
    for (std::size_t n = 2; n <= 8; ++n) {
        std::set<VertexPartition> seen;
        for (const auto& p : Bipartitions(n)) {
            EXPECT_EQ(p.block_count(), 2u);
            EXPECT_EQ(p.block(0)[0], 0u);
            seen.insert(p);
        }
        EXPECT_EQ(seen.size(), Bipartitions(n).size());
    }
}
