#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "isienergy/graph.hpp"

using namespace isienergy;

TEST_CASE("from_edge_list basics") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.degrees() == std::vector<int>{2, 2, 2});
    CHECK(k3.edge_count() == 3);

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.degrees() == std::vector<int>{1, 2, 1});

    // symmetric duplicates collapse
    Graph k2 = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("standard families") {
    Graph s4 = star_graph(4);
    auto deg = s4.degrees();
    std::sort(deg.begin(), deg.end(), std::greater<int>());
    CHECK(deg == std::vector<int>{3, 1, 1, 1});

    Graph c5 = cycle_graph(5);
    CHECK(regular_degree(c5) == 2);

    Graph k23 = complete_bipartite_graph(2, 3);
    auto d23 = k23.degrees();
    std::sort(d23.begin(), d23.end(), std::greater<int>());
    CHECK(d23 == std::vector<int>{3, 3, 2, 2, 2});

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(build_family({FamilyTag::complete, 4}).edge_count() == 6);

    CHECK(regular_degree(petersen_graph()) == 3);
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(regular_degree(prism_graph()) == 3);
}

TEST_CASE("disjoint union keeps component degrees") {
    Graph u = disjoint_union(complete_graph(3), empty_graph(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.degrees() == std::vector<int>{2, 2, 2, 0, 0});

    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    CHECK(two_k2.vertex_count() == 4);
    CHECK(two_k2.edge_count() == 2);
    CHECK(regular_degree(two_k2) == 1);

    CHECK(disjoint_union(empty_graph(1), empty_graph(1)) == empty_graph(2));
}

TEST_CASE("complement") {
    CHECK(complement(empty_graph(5)) == complete_graph(5));

    // complement of K_{m,n} is K_m u K_n
    Graph ck23 = complement(complete_bipartite_graph(2, 3));
    auto comps = connected_components(ck23);
    REQUIRE(comps.size() == 2);
    CHECK(ck23.edge_count() == 1 + 3);

    // complement of the 4-cycle is a perfect matching
    Graph cc4 = complement(cycle_graph(4));
    CHECK(cc4.edge_count() == 2);
    CHECK(regular_degree(cc4) == 1);
}

TEST_CASE("double complement is the identity (exhaustive n <= 6)") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : testing::all_graphs(n, false))
            CHECK(complement(complement(g)) == g);
}

TEST_CASE("line graphs") {
    CHECK(line_graph(path_graph(3)) == path_graph(2));
    CHECK(line_graph(complete_graph(3)) == complete_graph(3));

    // k-regular input -> nk/2 vertices, (2k-2)-regular
    std::vector<Graph> regulars = {cycle_graph(5), complete_graph(4), prism_graph(),
                                   petersen_graph(), complete_bipartite_graph(3, 3),
                                   circulant_graph(8, {1, 4}), circulant_graph(8, {1, 2, 3}),
                                   circulant_graph(7, {1, 2, 3})};
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : testing::all_graphs(n, false))
            if (auto k = regular_degree(g); k && *k >= 1) regulars.push_back(g);
    for (const auto& g : regulars) {
        int k = *regular_degree(g);
        Graph lg = line_graph(g);
        CHECK(lg.vertex_count() == g.vertex_count() * k / 2);
        CHECK(regular_degree(lg) == 2 * k - 2);
    }
}

TEST_CASE("iterated line graph") {
    Graph g = iterated_line_graph(complete_graph(4), 2);
    CHECK(g.vertex_count() == 12);
    CHECK(regular_degree(g) == 6);

    Graph same = iterated_line_graph(petersen_graph(), 0);
    CHECK(same == petersen_graph());

    Graph l2 = iterated_line_graph(prism_graph(), 2);
    CHECK(l2.vertex_count() == 18);
    CHECK(regular_degree(l2) == 6);

    CHECK_THROWS_AS(iterated_line_graph(complete_graph(6), 6, 10000), std::length_error);
}

TEST_CASE("graph6 encoding") {
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(empty_graph(1)) == "@");
    CHECK(parse_graph6("@") == empty_graph(1));

    SUBCASE("round trip over all connected graphs n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& g : testing::all_graphs(n, true)) {
                std::string enc = write_graph6(g);
                CHECK(parse_graph6(enc) == g);
                CHECK(write_graph6(parse_graph6(enc)) == enc);
            }
    }

    SUBCASE("long size form") {
        Graph big = disjoint_union(cycle_graph(60), empty_graph(40));
        std::string enc = write_graph6(big);
        CHECK(enc.size() == 4 + (100 * 99 / 2 + 5) / 6);
        CHECK(parse_graph6(enc) == big);
    }

    SUBCASE("malformed inputs") {
        CHECK_THROWS_WITH_AS(parse_graph6("B\x20"), doctest::Contains("position"),
                             std::invalid_argument);
        CHECK_THROWS_AS(parse_graph6("D"), std::invalid_argument);   // truncated bits
        CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument); // trailing bytes
        CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    }
}

TEST_CASE("edge list text format") {
    Graph g = complete_bipartite_graph(2, 3);
    Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);
    CHECK(write_edge_list(path_graph(2)) == "2 1\n1 2\n");
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 3\n"), std::invalid_argument);
}

TEST_CASE("connectivity, diameter, bipartiteness, regularity") {
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(empty_graph(1)) == 0);
    CHECK_FALSE(diameter(disjoint_union(path_graph(2), path_graph(2))).has_value());

    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(cycle_graph(6)));
    auto parts = bipartition(complete_bipartite_graph(2, 3));
    REQUIRE(parts.has_value());
    CHECK((*parts)[0] != (*parts)[2]);

    CHECK_FALSE(regular_degree(complete_bipartite_graph(2, 3)).has_value());
    CHECK(regular_degree(complete_bipartite_graph(3, 3)) == 3);
}

TEST_CASE("handshake identity on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 14;
        Graph g = testing::random_graph(n, 0.4, rng);
        int degree_sum = std::accumulate(g.degrees().begin(), g.degrees().end(), 0);
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("corpus counts match the published sequences") {
    // non-isomorphic simple graphs: 1, 2, 4, 11, 34, 156
    CHECK(testing::all_graphs(1, false).size() == 1);
    CHECK(testing::all_graphs(2, false).size() == 2);
    CHECK(testing::all_graphs(3, false).size() == 4);
    CHECK(testing::all_graphs(4, false).size() == 11);
    CHECK(testing::all_graphs(5, false).size() == 34);
    CHECK(testing::all_graphs(6, false).size() == 156);
    // connected: 1, 1, 2, 6, 21, 112
    CHECK(testing::all_graphs(4, true).size() == 6);
    CHECK(testing::all_graphs(5, true).size() == 21);
    CHECK(testing::all_graphs(6, true).size() == 112);
}
