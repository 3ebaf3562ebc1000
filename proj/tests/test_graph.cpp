#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "sombor/graph.hpp"

using namespace sombor;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t max_n) {
    const std::size_t n = 1 + rng() % max_n;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng() % 3 == 0) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

std::vector<std::uint32_t> degree_sequence(const Graph& g) {
    std::vector<std::uint32_t> d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("cycle_graph") {
    const auto c3 = cycle_graph(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(degree_sequence(c3) == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(degree_sequence(cycle_graph(4)) == std::vector<std::uint32_t>{2, 2, 2, 2});
    CHECK(cycle_graph(5).has_edge(4, 0));

    for (std::size_t bad : {0, 1, 2}) {
        try {
            (void)cycle_graph(bad);
            FAIL("expected invalid-parameter");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidParameter);
        }
    }
}

TEST_CASE("complete_graph") {
    const auto k1 = complete_graph(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    const auto k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK(degree_sequence(k4) == std::vector<std::uint32_t>{3, 3, 3, 3});
    CHECK(complete_graph(2).edges() == std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS((void)complete_graph(0), Error);
}

TEST_CASE("from_edges rejects loops, parallel edges and bad ids") {
    const std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS((void)Graph::from_edges(2, loop), Error);
    const std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS((void)Graph::from_edges(2, twice), Error);
    const std::vector<Edge> outside{{0, 2}};
    CHECK_THROWS_AS((void)Graph::from_edges(2, outside), Error);
}

TEST_CASE("disjoint_union") {
    const std::vector<Graph> two_k2{complete_graph(2), complete_graph(2)};
    auto u = disjoint_union(two_k2);
    CHECK(u.graph.vertex_count() == 4);
    CHECK(u.graph.edge_count() == 2);
    CHECK(u.maps[1](0) == 2);

    const std::vector<Graph> single{cycle_graph(3)};
    auto s = disjoint_union(single);
    CHECK(s.graph == cycle_graph(3));
    CHECK(s.maps[0] == VertexMap::identity(3));

    const std::vector<Graph> mixed{complete_graph(1), cycle_graph(6)};
    auto m = disjoint_union(mixed);
    CHECK(m.graph.vertex_count() == 7);
    CHECK(m.graph.edge_count() == 6);
    for (VertexId v = 0; v < 6; ++v) CHECK(m.graph.degree(m.maps[1](v)) == 2);
}

TEST_CASE("identify") {
    SUBCASE("two K_2 endpoints give P_3") {
        const std::vector<Graph> parts{complete_graph(2), complete_graph(2)};
        auto u = disjoint_union(parts);
        auto r = identify(u.graph, u.maps[0](1), u.maps[1](0));
        CHECK(r.graph == path_graph(3));
    }
    SUBCASE("two triangles give the bowtie") {
        const std::vector<Graph> parts{cycle_graph(3), cycle_graph(3)};
        auto u = disjoint_union(parts);
        auto r = identify(u.graph, 0, 3);
        // Enumerated by hand: hub 0, wings {1,2} and {3,4} after relabelling.
        const std::vector<Edge> bowtie{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
        CHECK(r.graph.edges() == bowtie);
        CHECK(r.graph.degree(r.map(0)) == 4);
        CHECK(r.map(3) == r.map(0));
    }
    SUBCASE("adjacent vertices conflict") {
        try {
            (void)identify(cycle_graph(3), 0, 1);
            FAIL("expected merge-conflict");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MergeConflict);
        }
    }
    SUBCASE("common neighbour conflicts") {
        try {
            (void)identify(path_graph(3), 0, 2);
            FAIL("expected merge-conflict");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MergeConflict);
        }
    }
    SUBCASE("u == v") {
        try {
            (void)identify(cycle_graph(4), 1, 1);
            FAIL("expected invalid-parameter");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidParameter);
        }
    }
}

TEST_CASE("delete_edge") {
    CHECK(delete_edge(cycle_graph(3), 2, 0) == path_graph(3));
    const auto bare = delete_edge(complete_graph(2), 0, 1);
    CHECK(bare.vertex_count() == 2);
    CHECK(bare.edge_count() == 0);
    CHECK(delete_edge(cycle_graph(6), 5, 0) == path_graph(6));
    try {
        (void)delete_edge(path_graph(3), 0, 2);
        FAIL("expected not-found");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFound);
    }
}

TEST_CASE("delete_vertex") {
    auto r = delete_vertex(cycle_graph(3), 1);
    CHECK(r.graph == complete_graph(2));
    CHECK(r.map(1) == kNoVertex);
    CHECK(r.map(2) == 1);

    auto star = delete_vertex(star_graph(3), 0);
    CHECK(star.graph.vertex_count() == 3);
    CHECK(star.graph.edge_count() == 0);

    auto p3 = delete_vertex(path_graph(3), 1);
    CHECK(p3.graph.vertex_count() == 2);
    CHECK(p3.graph.edge_count() == 0);

    try {
        (void)delete_vertex(path_graph(3), 3);
        FAIL("expected not-found");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFound);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle_graph(6)));
    const std::vector<Graph> two_k2{complete_graph(2), complete_graph(2)};
    CHECK_FALSE(is_connected(disjoint_union(two_k2).graph));
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_connected(Graph{}));
}

TEST_CASE("edge_census") {
    for (std::size_t q = 3; q <= 12; ++q) {
        Census expected;
        expected.add(DegreePair::of(2, 2), q);
        CHECK(edge_census(cycle_graph(q)) == expected);
    }
    Census star;
    star.add(DegreePair::of(3, 1), 3);
    CHECK(edge_census(star_graph(3)) == star);
    CHECK(edge_census(star_graph(3)).to_string() == "{{1,3}:3}");
}

TEST_CASE("property: handshake, identify and union invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, 9);
        std::uint64_t degree_sum = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(edge_census(g).total() == g.edge_count());

        // delete then re-add an edge restores the edge set
        for (const auto& [u, v] : g.edges()) {
            CHECK(delete_edge(g, u, v).with_edge(u, v) == g);
        }

        const auto h = random_graph(rng, 9);
        const std::vector<Graph> parts{g, h};
        auto un = disjoint_union(parts);
        auto sum = edge_census(g);
        sum += edge_census(h);
        CHECK(edge_census(un.graph) == sum);

        // identify a vertex of g with a vertex of h: edges kept, degrees add
        const auto a = un.maps[0](static_cast<VertexId>(rng() % g.vertex_count()));
        const auto b = un.maps[1](static_cast<VertexId>(rng() % h.vertex_count()));
        auto merged = identify(un.graph, a, b);
        CHECK(merged.graph.edge_count() == un.graph.edge_count());
        CHECK(merged.graph.vertex_count() == un.graph.vertex_count() - 1);
        CHECK(merged.graph.degree(merged.map(a)) == un.graph.degree(a) + un.graph.degree(b));
        for (VertexId w = 0; w < un.graph.vertex_count(); ++w) {
            if (w != a && w != b) CHECK(merged.graph.degree(merged.map(w)) == un.graph.degree(w));
        }
    }
}
