#include <fanograph/constructions.hpp>
#include <fanograph/digraph.hpp>
#include <fanograph/graph_io.hpp>
#include <fanograph/oracle.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fanograph;

namespace {

oracle::ArrowSet as_set(const Digraph& g) {
    oracle::ArrowSet s;
    s.d = g.vertex_count();
    for (const Arrow& a : g.arrows()) s.arrows.insert({a.tail, a.head});
    return s;
}

Digraph random_digraph(int d, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Arrow> a;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            if (i != j && coin(rng)) a.push_back({i, j});
        }
    }
    return Digraph::from_arrows(d, a);
}

std::set<std::vector<std::pair<int, int>>> arrow_keys(const std::vector<OrientedCycle>& cs) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& c : cs) {
        std::vector<std::pair<int, int>> k;
        for (const Arrow& a : c.arrows()) k.push_back({a.tail, a.head});
        std::sort(k.begin(), k.end());
        out.insert(k);
    }
    return out;
}

}  // namespace

TEST(Digraph, FromArrows) {
    auto g = Digraph::from_arrows(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}});
    EXPECT_EQ(g.arrow_count(), 4u);
    EXPECT_EQ(Digraph::from_arrows(2, {{1, 2}, {1, 2}}).arrow_count(), 1u);
    EXPECT_THROW(Digraph::from_arrows(1, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Digraph::from_arrows(2, {{1, 3}}), std::invalid_argument);
    EXPECT_THROW(Digraph::from_arrows(0, {}), std::invalid_argument);
    EXPECT_TRUE(g.has_arrow(2, 3));
    EXPECT_FALSE(g.has_arrow(3, 2));
    EXPECT_TRUE(g.is_connected());
    EXPECT_FALSE(g.is_symmetric());
    EXPECT_TRUE(symmetric_cycle_graph(5).is_symmetric());
    EXPECT_FALSE(Digraph::from_arrows(4, {{1, 2}, {3, 4}}).is_connected());
}

TEST(Digraph, EveryArrowInDirectedCycle) {
    EXPECT_TRUE(every_arrow_in_directed_cycle(Digraph::from_arrows(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}})));
    EXPECT_FALSE(every_arrow_in_directed_cycle(Digraph::from_arrows(3, {{1, 2}, {2, 3}})));
    EXPECT_TRUE(every_arrow_in_directed_cycle(directed_cycle_graph(3)));
    auto g = Digraph::from_arrows(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
    EXPECT_EQ(arrows_off_directed_cycles(g), (std::vector<Arrow>{{3, 4}}));
}

TEST(Digraph, EveryArrowOnCycleIffReturnPathExists) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        auto g = random_digraph(2 + t % 5, 0.35, rng);
        bool expected = true;
        for (const Arrow& a : g.arrows()) expected = expected && distance(g, a.head, a.tail).has_value();
        EXPECT_EQ(every_arrow_in_directed_cycle(g), expected);
        EXPECT_EQ(expected, oracle::brute_every_arrow_on_cycle(as_set(g)));
    }
}

TEST(Digraph, Distances) {
    auto c3 = directed_cycle_graph(3);
    EXPECT_EQ(distance(c3, 1, 3), 2);
    EXPECT_FALSE(distance(Digraph::from_arrows(3, {{1, 2}, {2, 3}}), 3, 1).has_value());
    EXPECT_EQ(distance(symmetric_edge_graph(), 2, 1), 1);
    EXPECT_THROW(distance(c3, 2, 2), std::invalid_argument);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto g = random_digraph(5, 0.3, rng);
        auto fw = oracle::all_distances(as_set(g));
        DistanceTable table(g);
        for (int i = 1; i <= 5; ++i) {
            for (int j = 1; j <= 5; ++j) {
                if (i == j) continue;
                Distance dij = table.at(i, j);
                EXPECT_EQ(dij.value_or(-1), fw[i][j]);
            }
        }
    }
}

TEST(Cycles, SpecExamples) {
    auto edge = enumerate_oriented_cycles(symmetric_edge_graph());
    ASSERT_EQ(edge.size(), 1u);
    EXPECT_EQ(edge[0].length(), 2u);
    EXPECT_FALSE(is_homogeneous(edge[0]));

    auto tri = enumerate_oriented_cycles(directed_cycle_graph(3));
    ASSERT_EQ(tri.size(), 1u);
    EXPECT_TRUE(tri[0].is_directed());

    auto sq = enumerate_oriented_cycles(symmetric_cycle_graph(4));
    std::size_t twos = 0, fours = 0;
    for (const auto& c : sq) (c.length() == 2 ? twos : fours)++;
    EXPECT_EQ(twos, 4u);
    EXPECT_EQ(fours, 16u);
}

TEST(Cycles, EnumerationMatchesBruteForce) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 150; ++t) {
        auto g = random_digraph(2 + t % 5, 0.4, rng);
        auto cycles = enumerate_oriented_cycles(g);
        auto brute = oracle::brute_oriented_cycles(as_set(g));
        std::set<std::vector<std::pair<int, int>>> bk;
        for (const auto& c : brute) bk.insert(c.arrows);
        EXPECT_EQ(arrow_keys(cycles).size(), cycles.size()) << "duplicate cycle emitted";
        EXPECT_EQ(arrow_keys(cycles), bk);
        for (std::size_t i = 1; i < cycles.size(); ++i) EXPECT_LE(cycles[i - 1].length(), cycles[i].length());
    }
}

TEST(Cycles, CanonicalRepresentative) {
    for (const auto& c : enumerate_oriented_cycles(symmetric_cycle_graph(5))) {
        const auto& v = c.vertices();
        EXPECT_EQ(*std::min_element(v.begin(), v.end()), v.front());
        if (v.size() > 2) {
            EXPECT_LT(v[1], v.back());
        }
    }
}

TEST(Cycles, OrientedCycleValidation) {
    using O = Orientation;
    EXPECT_THROW(OrientedCycle({1}, {O::forward}), std::invalid_argument);
    EXPECT_THROW(OrientedCycle({1, 2, 1}, {O::forward, O::forward, O::forward}), std::invalid_argument);
    EXPECT_THROW(OrientedCycle({1, 2}, {O::forward, O::backward}), std::invalid_argument);
    EXPECT_THROW(OrientedCycle(directed_cycle_graph(3), {1, 2, 3}, {O::backward, O::forward, O::forward}),
                 std::invalid_argument);
    OrientedCycle c({1, 2, 3, 4}, {O::forward, O::forward, O::forward, O::backward});
    EXPECT_EQ(c.delta_plus_size() + c.delta_minus_size(), 4u);
    EXPECT_GE(c.delta_plus_size(), c.delta_minus_size());
    EXPECT_EQ(to_string(c), "(1,2,3,4) [+++-]");
}

TEST(Cycles, Homogeneity) {
    using O = Orientation;
    EXPECT_FALSE(is_homogeneous(OrientedCycle({1, 2}, {O::forward, O::forward})));
    for (unsigned flags = 0; flags < 32; ++flags) {
        std::vector<O> f;
        for (int j = 0; j < 5; ++j) f.push_back(flags >> j & 1 ? O::forward : O::backward);
        EXPECT_FALSE(is_homogeneous(OrientedCycle({1, 2, 3, 4, 5}, f)));
    }
    EXPECT_TRUE(is_homogeneous(OrientedCycle({1, 2, 3, 4}, {O::forward, O::backward, O::forward, O::backward})));
}

TEST(Cycles, MuExamples) {
    using O = Orientation;
    auto m = mu(OrientedCycle({1, 2, 3, 4}, {O::forward, O::backward, O::forward, O::backward}));
    EXPECT_EQ(m.values, (std::vector<int>{1, 0, 1, 0}));
    EXPECT_EQ(m.at(3), 1);
    auto six = mu(OrientedCycle({1, 2, 3, 4, 5, 6}, {O::forward, O::backward, O::forward, O::backward, O::forward,
                                                    O::backward}));
    EXPECT_EQ(six.values, (std::vector<int>{1, 0, 1, 0, 1, 0}));
    auto ffbb = mu(OrientedCycle({5, 6, 7, 8}, {O::forward, O::forward, O::backward, O::backward}));
    EXPECT_EQ(ffbb.values, (std::vector<int>{2, 1, 0, 1}));
    EXPECT_EQ(ffbb.max(), 2);
    EXPECT_THROW(mu(OrientedCycle({1, 2, 3}, {O::forward, O::forward, O::forward})), std::domain_error);
}

TEST(Cycles, MuStepsCloseUpAndAgreeWithBruteForceAndReversal) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        auto g = random_digraph(5, 0.5, rng);
        auto brute = oracle::brute_oriented_cycles(as_set(g));
        std::map<std::vector<std::pair<int, int>>, std::map<int, int>> brute_mu;
        for (const auto& c : brute) {
            if (!oracle::brute_homogeneous(c)) continue;
            auto h = oracle::brute_mu(c);
            std::map<int, int> m;
            for (std::size_t j = 0; j < h.size(); ++j) m[c.vertices[j]] = h[j];
            brute_mu[c.arrows] = m;
        }
        for (const auto& c : enumerate_oriented_cycles(g)) {
            if (!is_homogeneous(c)) continue;
            auto m = mu(c);
            const std::size_t l = c.length();
            for (std::size_t j = 0; j < l; ++j) {
                const int step = m.values[(j + 1) % l] - m.values[j];
                EXPECT_EQ(step, c.orientations()[j] == Orientation::forward ? -1 : 1);
            }
            EXPECT_EQ(*std::min_element(m.values.begin(), m.values.end()), 0);
            auto r = mu(c.reversed());
            for (std::size_t j = 0; j < l; ++j) EXPECT_EQ(r.at(m.vertices[j]), m.values[j]);
            std::vector<std::pair<int, int>> key;
            for (const Arrow& a : c.arrows()) key.push_back({a.tail, a.head});
            std::sort(key.begin(), key.end());
            std::map<int, int> mine;
            for (std::size_t j = 0; j < l; ++j) mine[m.vertices[j]] = m.values[j];
            EXPECT_EQ(mine, brute_mu.at(key));
        }
    }
}

TEST(Predicates, NonhomogeneousCycles) {
    EXPECT_TRUE(has_nonhomogeneous_cycle(directed_cycle_graph(4)));
    EXPECT_FALSE(has_nonhomogeneous_cycle(Digraph::from_arrows(2, {{1, 2}})));
    EXPECT_TRUE(has_nonhomogeneous_cycle(symmetric_cycle_graph(3)));
    EXPECT_FALSE(has_nonhomogeneous_cycle(Digraph::from_arrows(4, {{1, 2}, {3, 2}, {3, 4}, {1, 4}})));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        auto g = random_digraph(2 + t % 5, 0.3, rng);
        EXPECT_EQ(has_nonhomogeneous_cycle(g), oracle::brute_has_nonhomogeneous_cycle(as_set(g)));
    }
}

TEST(Predicates, EvenCyclesAndBlocks) {
    EXPECT_TRUE(has_even_cycle(symmetric_cycle_graph(4)));
    EXPECT_FALSE(has_even_cycle(symmetric_cycle_graph(3)));
    auto bowtie = wedge(symmetric_cycle_graph(3), 1, symmetric_cycle_graph(3), 1);
    EXPECT_FALSE(has_even_cycle(bowtie));

    auto tri = two_connected_components(symmetric_cycle_graph(3));
    ASSERT_EQ(tri.size(), 1u);
    EXPECT_EQ(tri[0].kind, BlockKind::odd_cycle);
    auto path = two_connected_components(Digraph::from_arrows(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}));
    ASSERT_EQ(path.size(), 2u);
    EXPECT_EQ(path[0].kind, BlockKind::single_edge);
    EXPECT_EQ(path[1].kind, BlockKind::single_edge);
    auto sq = two_connected_components(symmetric_cycle_graph(4));
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0].kind, BlockKind::other);
    EXPECT_STREQ(to_string(BlockKind::odd_cycle), "odd-cycle");
}

TEST(Predicates, EvenCycleIffSomeBlockIsNotAnEdgeOrOddCycleUpToSevenVertices) {
    // Connected graphs on up to 5 vertices exhaustively, then random ones on 6 and 7.
    auto check = [](const Digraph& g) {
        bool blocks_ok = true;
        for (const auto& b : two_connected_components(g)) blocks_ok = blocks_ok && b.kind != BlockKind::other;
        EXPECT_EQ(!has_even_cycle(g), blocks_ok) << format_graph(g);
        EXPECT_EQ(has_even_cycle(g), oracle::brute_has_even_cycle(as_set(g))) << format_graph(g);
    };
    for (int d = 2; d <= 5; ++d) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= d; ++i) {
            for (int j = i + 1; j <= d; ++j) pairs.push_back({i, j});
        }
        for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
            std::vector<Arrow> a;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (mask >> k & 1) {
                    a.push_back({pairs[k].first, pairs[k].second});
                    a.push_back({pairs[k].second, pairs[k].first});
                }
            }
            auto g = Digraph::from_arrows(d, a);
            if (g.is_connected()) check(g);
        }
    }
    std::mt19937_64 rng(6);
    for (int t = 0; t < 300; ++t) {
        auto g = random_digraph(6 + t % 2, 0.25, rng);
        if (g.is_connected()) check(g);
    }
}

TEST(GraphIo, ParseAndFormat) {
    auto g = parse_graph("# comment\n3\n1 2\n\n2 1\n2 3\n3 1\n1 2\n");
    EXPECT_EQ(g.arrow_count(), 4u);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
    EXPECT_THROW(parse_graph("3\n1 x\n"), parse_error);
    EXPECT_THROW(parse_graph("3\n1 4\n"), parse_error);
    EXPECT_THROW(parse_graph("3\n2 2\n"), parse_error);
    EXPECT_THROW(parse_graph(""), parse_error);
    EXPECT_THROW(parse_graph("0\n"), parse_error);
    EXPECT_THROW(parse_graph("3 4\n"), parse_error);
    try {
        parse_graph("3\n1 2\n1 x\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_EQ(read_graph_file(std::string(FANOGRAPH_DATA_DIR) + "/quadrilateral.txt").arrow_count(), 4u);
    EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), std::runtime_error);
}
