#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hodge/graph.hpp"
#include "support/corpus.hpp"

using namespace hodge;
namespace ts = hodge::testsupport;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edge(0) == std::pair<int, int>{2, 1});  // ingested order kept
    CHECK(g.adjacent(1, 2));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("triangle enumeration") {
    CHECK(enumerate_triangles(ts::complete_graph_t(3)) == std::vector<Triangle>{{0, 1, 2}});
    CHECK(enumerate_triangles(ts::complete_graph_t(4)).size() == 4);
    CHECK(enumerate_triangles(ts::worked_example_graph()) == std::vector<Triangle>{{3, 6, 7}});
    CHECK(enumerate_triangles(ts::path_graph(5)).empty());
}

TEST_CASE("triangle enumeration agrees with cubic brute force") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = ts::random_graph(rng, n, 1 + rng() % 16);
        std::vector<Triangle> brute;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (g.adjacent(i, j) && g.adjacent(i, k) && g.adjacent(j, k))
                        brute.push_back({i, j, k});
        CHECK(enumerate_triangles(g) == brute);
    }
}

TEST_CASE("triangle degrees") {
    Graph k5 = ts::complete_graph_t(5);
    for (std::size_t e = 0; e < k5.m(); ++e) CHECK(triangle_degree_edge(k5, e) == 3);
    Graph wx = ts::worked_example_graph();
    CHECK(triangle_degree_edge(wx, 7) == 1);  // e8 = v7v8
    CHECK(triangle_degree_vertex(wx, 3) == 1);  // v4
    Graph k4 = ts::complete_graph_t(4);
    for (int v = 0; v < 4; ++v) CHECK(triangle_degree_vertex(k4, v) == 3);
    Graph star = ts::star_graph(5);
    CHECK(triangle_degree_vertex(star, 1) == 0);
    for (std::size_t e = 0; e < star.m(); ++e) CHECK(triangle_degree_edge(star, e) == 0);
    CHECK_THROWS_AS(triangle_degree_edge(star, 99), std::out_of_range);
    CHECK_THROWS_AS(triangle_degree_vertex(star, -1), std::out_of_range);
}

TEST_CASE("edge neighborhood size") {
    CHECK(edge_neighborhood_size(ts::path_graph(2), 0) == 0);
    CHECK(edge_neighborhood_size(ts::worked_example_graph(), 4) == 5);  // e5 = v4v5
    Graph k4 = ts::complete_graph_t(4);
    for (std::size_t e = 0; e < k4.m(); ++e) CHECK(edge_neighborhood_size(k4, e) == 4);
}

TEST_CASE("triangle degree sums") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        Graph g = ts::random_graph(rng, 3 + static_cast<int>(rng() % 9), 1 + rng() % 14);
        std::size_t t = enumerate_triangles(g).size();
        std::size_t edge_sum = 0, vertex_sum = 0;
        for (std::size_t e = 0; e < g.m(); ++e) {
            edge_sum += triangle_degree_edge(g, e);
            CHECK(edge_neighborhood_size(g, e) >= 2 * triangle_degree_edge(g, e));
        }
        for (int v = 0; v < g.n(); ++v) vertex_sum += triangle_degree_vertex(g, v);
        CHECK(edge_sum == 3 * t);
        CHECK(vertex_sum == 3 * t);
    }
}

TEST_CASE("components") {
    Graph split(5, {{0, 1}, {1, 2}, {3, 4}});  // K3 path portion plus K2
    auto c = components(split);
    CHECK(c.count == 2);
    CHECK(c.label[0] == c.label[2]);
    CHECK(c.label[3] != c.label[0]);
    CHECK(components(ts::worked_example_graph()).count == 1);
    CHECK(components(Graph(5, {})).count == 5);
}

TEST_CASE("diameter") {
    CHECK(diameter(ts::complete_graph_t(6)) == 1);
    CHECK(diameter(ts::path_graph(4)) == 3);
    CHECK(diameter(ts::worked_example_graph()) == 3);
    CHECK(!diameter(Graph(4, {{0, 1}})).has_value());
}

TEST_CASE("diameter agrees with Floyd-Warshall") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = ts::random_graph(rng, 2 + static_cast<int>(rng() % 9), 1 + rng() % 12);
        CHECK(diameter(g) == ts::diameter_oracle(g));
    }
}
