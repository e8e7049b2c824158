#include <fanograph/graph_io.hpp>
#include <fanograph/oracle.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace fanograph;

namespace {

oracle::ArrowSet as_set(const Digraph& g) {
    oracle::ArrowSet s;
    s.d = g.vertex_count();
    for (const Arrow& a : g.arrows()) s.arrows.insert({a.tail, a.head});
    return s;
}

// Straight filter over all arrow subsets on exactly d vertices.
std::size_t brute_fano_count(int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            if (i != j) pairs.push_back({i, j});
        }
    }
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        oracle::ArrowSet s;
        s.d = d;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (mask >> b & 1) s.arrows.insert(pairs[b]);
        }
        if (s.arrows.empty()) continue;
        if (oracle::brute_connected(s) && oracle::brute_every_arrow_on_cycle(s)) ++count;
    }
    return count;
}

// Lexicographically least sorted arrow list over all relabelings.
std::vector<Arrow> brute_canonical(const Digraph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Arrow> best;
    do {
        std::vector<Arrow> a;
        for (const Arrow& e : g.arrows()) a.push_back({perm[e.tail - 1], perm[e.head - 1]});
        std::sort(a.begin(), a.end());
        if (best.empty() || a < best) best = a;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST(CandidateSpace, Counts) {
    EXPECT_EQ(all_possible_arrows(3).size(), 6u);
    EXPECT_EQ(candidate_count(2), 4u);
    EXPECT_EQ(candidate_count(3), 64u);
    EXPECT_EQ(total_candidate_count(3), 68u);
    EXPECT_EQ(total_candidate_count(4), 68u + 4096u);
    auto c = candidate_at(5, 3);
    EXPECT_EQ(c.vertices, 3);
    EXPECT_EQ(c.mask, 1u);
    auto g = candidate_graph(3, 0b101);
    EXPECT_EQ(arrow_mask(g), 0b101u);
}

TEST(Enumerate, SmallCounts) {
    auto two = enumerate_fano_digraphs(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], Digraph::from_arrows(2, {{1, 2}, {2, 1}}));
    EXPECT_TRUE(enumerate_fano_digraphs(1).empty());
    auto three = enumerate_fano_digraphs(3);
    EXPECT_EQ(three.size(), 1 + brute_fano_count(3));
    std::size_t on_four = 0;
    for (const auto& g : enumerate_fano_digraphs(4)) on_four += g.vertex_count() == 4;
    EXPECT_EQ(on_four, brute_fano_count(4));
}

TEST(Enumerate, DedupKeepsOnePerIsomorphismClass) {
    auto all = enumerate_fano_digraphs(3);
    auto reps = enumerate_fano_digraphs(3, true);
    EXPECT_LT(reps.size(), all.size());
    std::set<std::vector<Arrow>> forms;
    for (const auto& g : reps) forms.insert(brute_canonical(g));
    EXPECT_EQ(forms.size(), reps.size());
    std::set<std::vector<Arrow>> all_forms;
    for (const auto& g : all) all_forms.insert(brute_canonical(g));
    EXPECT_EQ(all_forms, forms);
}

TEST(Limits, Refusal) {
    EXPECT_THROW(sweep(6), sweep_limit_error);
    SweepOptions opt;
    opt.max_vertices = 9;
    opt.force = true;
    EXPECT_THROW(sweep(opt), sweep_limit_error);
    opt.max_vertices = 0;
    EXPECT_THROW(sweep(opt), std::invalid_argument);
    EXPECT_NO_THROW(check_limit(5, 6, false));
    EXPECT_NO_THROW(check_limit(6, 5, true));
}

TEST(Sweep, SmallExamples) {
    auto r2 = sweep(2);
    EXPECT_EQ(r2.graphs_classified, 1u);
    EXPECT_EQ(r2.smooth, 1u);
    EXPECT_EQ(r2.symmetric_checked, 1u);
    EXPECT_TRUE(r2.discrepancies.empty());

    auto r3 = sweep(3);
    EXPECT_EQ(r3.graphs_enumerated, 68u);
    EXPECT_EQ(r3.graphs_classified, 1 + brute_fano_count(3));
    EXPECT_EQ(r3.smooth, r3.graphs_classified);
    EXPECT_TRUE(r3.discrepancies.empty());
}

TEST(Sweep, FourVerticesAgreeEverywhere) {
    auto r = sweep(4);
    EXPECT_EQ(r.graphs_enumerated, 4164u);
    EXPECT_TRUE(r.discrepancies.empty());
    EXPECT_EQ(r.smooth + r.non_simplicial + r.simplicial_not_smooth + r.not_fano + r.not_full_dimensional,
              r.graphs_classified);
    EXPECT_EQ(r.not_fano, 0u);
    EXPECT_EQ(r.not_full_dimensional, 0u);
    EXPECT_GT(r.non_simplicial, 0u);
    EXPECT_GT(r.symmetric_checked, 0u);
}

TEST(Sweep, ConnectedScopeSeesNonFano) {
    SweepOptions opt;
    opt.max_vertices = 4;
    opt.scope = SweepScope::connected;
    auto r = sweep(opt);
    EXPECT_TRUE(r.discrepancies.empty());
    EXPECT_GT(r.not_fano, 0u);
    EXPECT_GT(r.not_full_dimensional, 0u);
}

TEST(Sweep, ChunksCoverTheWhole) {
    SweepOptions opt;
    opt.max_vertices = 4;
    auto whole = sweep(opt);
    SweepReport merged;
    for (std::uint64_t i = 0; i < 5; ++i) {
        opt.chunk_index = i;
        opt.chunk_count = 5;
        auto part = sweep(opt);
        merged.merge(part);
    }
    EXPECT_EQ(merged.graphs_enumerated, whole.graphs_enumerated);
    EXPECT_EQ(merged.graphs_classified, whole.graphs_classified);
    EXPECT_EQ(merged.smooth, whole.smooth);
    EXPECT_EQ(merged.non_simplicial, whole.non_simplicial);

    std::uint64_t covered = 0;
    for (std::uint64_t i = 0; i < 7; ++i) {
        auto [b, e] = chunk_range(100, i, 7);
        EXPECT_EQ(b, covered);
        covered = e;
    }
    EXPECT_EQ(covered, 100u);
}

TEST(Sweep, DeterministicAndThreadIndependent) {
    SweepOptions opt;
    opt.max_vertices = 4;
    opt.scope = SweepScope::connected;
    auto a = sweep(opt);
    auto b = sweep(opt);
    EXPECT_EQ(a, b);
    opt.threads = 3;
    auto c = sweep(opt);
    EXPECT_EQ(a, c);
    opt.threads = 1;
    opt.stride = 7;
    auto s1 = sweep(opt);
    opt.threads = 4;
    EXPECT_EQ(sweep(opt), s1);
}

TEST(Sweep, DedupCountsIsomorphismClasses) {
    SweepOptions opt;
    opt.max_vertices = 3;
    opt.dedup_isomorphic = true;
    auto r = sweep(opt);
    EXPECT_EQ(r.graphs_classified, enumerate_fano_digraphs(3, true).size());
}

TEST(Sweep, SampledFiveVertices) {
    SweepOptions opt;
    opt.max_vertices = 5;
    opt.stride = 997;
    opt.scope = SweepScope::connected;
    auto r = sweep(opt);
    EXPECT_GT(r.graphs_classified, 100u);
    EXPECT_TRUE(r.discrepancies.empty());
}

TEST(CrossValidate, MatchesBruteCriterion) {
    for (const auto& g : enumerate_fano_digraphs(4, true)) {
        auto rec = cross_validate(g);
        EXPECT_TRUE(rec.agrees()) << format_graph(g);
        ASSERT_TRUE(rec.graph_verdict.smoothness.has_value());
        EXPECT_EQ(rec.graph_verdict.smoothness->smooth, oracle::brute_cycle_criterion_smooth(as_set(g)));
        EXPECT_EQ(rec.symmetric.has_value(), g.is_symmetric());
        if (rec.symmetric) {
            EXPECT_TRUE(rec.symmetric->consistent());
        }
    }
}
