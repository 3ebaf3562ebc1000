#include "doctest.h"

#include <random>

#include "sombor/constructions.hpp"
#include "sombor/index.hpp"

using namespace sombor;

namespace {

RootedUnit k2() { return RootedUnit(complete_graph(2), 0, 1); }
RootedUnit triangle() { return RootedUnit(cycle_graph(3), 0, 1); }

Census census_of(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> items) {
    Census c;
    for (const auto& [a, b, n] : items) c.add(DegreePair::of(a, b), n);
    return c;
}

RootedUnit random_unit(std::mt19937_64& rng, bool two_contacts) {
    Graph g;
    switch (rng() % 3) {
        case 0: g = cycle_graph(3 + rng() % 5); break;
        case 1: g = complete_graph(2 + rng() % 4); break;
        default: g = path_graph(2 + rng() % 4); break;
    }
    const auto n = g.vertex_count();
    const auto x = static_cast<VertexId>(rng() % n);
    if (!two_contacts) return RootedUnit(std::move(g), x);
    auto y = static_cast<VertexId>(rng() % (n - 1));
    if (y >= x) ++y;
    return RootedUnit(std::move(g), x, y);
}

}  // namespace

TEST_CASE("RootedUnit validation") {
    CHECK_THROWS_AS(RootedUnit(cycle_graph(3), 3), Error);
    CHECK_THROWS_AS(RootedUnit(cycle_graph(3), 0, 0), Error);
    const std::vector<Graph> parts{complete_graph(2), complete_graph(2)};
    try {
        RootedUnit(disjoint_union(parts).graph, 0);
        FAIL("expected invalid-unit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidUnit);
    }
}

TEST_CASE("link") {
    const std::vector<RootedUnit> two{k2(), k2()};
    const auto a = link(two);
    CHECK(a.graph == path_graph(4));
    CHECK(a.contact_ids.size() == 4);

    const std::vector<RootedUnit> one{triangle()};
    CHECK(link(one).graph == cycle_graph(3));

    const std::vector<RootedUnit> missing{k2(), RootedUnit(complete_graph(2), 0)};
    try {
        (void)link(missing);
        FAIL("expected invalid-unit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidUnit);
    }
}

TEST_CASE("chain") {
    const std::vector<RootedUnit> two{k2(), k2()};
    CHECK(chain(two).graph == path_graph(3));

    const std::vector<RootedUnit> tris{triangle(), triangle()};
    const auto bowtie = chain(tris);
    CHECK(bowtie.graph.edge_count() == 6);
    CHECK(bowtie.graph.degree(bowtie.unit_maps[0](1)) == 4);
    CHECK(bowtie.unit_maps[0](1) == bowtie.unit_maps[1](0));
    CHECK(bowtie.contact_ids.size() == 3);
}

TEST_CASE("circuit") {
    const std::vector<RootedUnit> points(3, RootedUnit(complete_graph(1), 0));
    CHECK(circuit(points).graph == cycle_graph(3));

    const std::vector<RootedUnit> tris(3, RootedUnit(cycle_graph(3), 0));
    const auto t1 = circuit(tris);
    CHECK(t1.graph.edge_count() == 12);
    CHECK(edge_census(t1.graph) == census_of({{4, 4, 3}, {4, 2, 6}, {2, 2, 3}}));

    const std::vector<RootedUnit> two(2, RootedUnit(cycle_graph(3), 0));
    try {
        (void)circuit(two);
        FAIL("expected invalid-parameter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
}

TEST_CASE("bouquet") {
    const std::vector<RootedUnit> spokes(3, RootedUnit(complete_graph(2), 1));
    const auto star = bouquet(spokes);
    CHECK(edge_census(star.graph) == edge_census(star_graph(3)));
    CHECK(star.graph.vertex_count() == 4);

    const std::vector<RootedUnit> tris(2, RootedUnit(cycle_graph(3), 2));
    const std::vector<RootedUnit> chained{triangle(), triangle()};
    CHECK(edge_census(bouquet(tris).graph) == edge_census(chain(chained).graph));
}

TEST_CASE("link lower bound") {
    const std::vector<RootedUnit> two{k2(), k2()};
    const auto a = link(two);
    CHECK(link_lower_bound(a, two) == RadicalSum::term(2, 2));
    CHECK(sombor_index(a.graph) == RadicalSum::term(2, 5) + RadicalSum::term(2, 2));
    CHECK(cmp_numeric(sombor_index(a.graph), link_lower_bound(a, two)) == Ordering::Greater);

    const std::vector<RootedUnit> one{triangle()};
    CHECK(link_lower_bound(link(one), one) == sombor_index(cycle_graph(3)));

    const std::vector<RootedUnit> three{k2(), k2(), k2()};
    CHECK_THROWS_AS((void)link_lower_bound(a, three), Error);
}

TEST_CASE("circuit lower bounds") {
    const std::vector<RootedUnit> points(3, RootedUnit(complete_graph(1), 0));
    CHECK(circuit_lower_bound_2k(points) == RadicalSum::term(6, 2));
    CHECK(eq_exact(sombor_index(circuit(points).graph), circuit_lower_bound_2k(points)));

    const std::vector<RootedUnit> tris(3, RootedUnit(cycle_graph(3), 0));
    const auto t1 = circuit(tris);
    CHECK(circuit_lower_bound_2k(tris) == RadicalSum::term(24, 2));
    CHECK(sombor_index(t1.graph) == RadicalSum::term(18, 2) + RadicalSum::term(12, 5));
    CHECK(sombor_index(t1.graph).to_double() == doctest::Approx(52.29).epsilon(1e-3));

    // identical units: every cyclic degree gap vanishes
    for (auto conv : {DegreeConvention::Unit, DegreeConvention::Assembly}) {
        CHECK(circuit_lower_bound_deg(t1, tris, conv) == RadicalSum::term(18, 2));
    }
}

TEST_CASE("chain lower bounds") {
    const std::vector<RootedUnit> two{k2(), k2()};
    const auto p3 = chain(two);
    CHECK(chain_lower_bound_ii(p3, two) == RadicalSum::term(Rational(3, 2), 2));
    CHECK(chain_lower_bound_i(p3, two) == RadicalSum::term(Rational(3, 2), 2));
    CHECK(cmp_numeric(sombor_index(p3.graph), chain_lower_bound_ii(p3, two)) == Ordering::Greater);
    // unit-local degrees: |1 - 1| for the single neighbour
    CHECK(chain_lower_bound_ii(p3, two, DegreeConvention::Unit) == RadicalSum::term(1, 2));

    const std::vector<RootedUnit> one{triangle()};
    CHECK(chain_lower_bound_ii(chain(one), one) == sombor_index(cycle_graph(3)));
    CHECK_THROWS_AS((void)chain_lower_bound_i(chain(one), one), Error);

    const std::vector<RootedUnit> tris{triangle(), triangle()};
    const auto bowtie = chain(tris);
    for (auto conv : {DegreeConvention::Unit, DegreeConvention::Assembly}) {
        CHECK(cmp_numeric(sombor_index(bowtie.graph), chain_lower_bound_i(bowtie, tris, conv)) == Ordering::Greater);
        CHECK(cmp_numeric(sombor_index(bowtie.graph), chain_lower_bound_ii(bowtie, tris, conv)) == Ordering::Greater);
    }
}

TEST_CASE("bouquet lower bound") {
    const std::vector<RootedUnit> spokes(3, RootedUnit(complete_graph(2), 1));
    const auto star = bouquet(spokes);
    CHECK(bouquet_lower_bound(star, spokes) == RadicalSum::term(3, 2));
    CHECK(sombor_index(star.graph) == RadicalSum::term(3, 10));

    const std::vector<RootedUnit> one{triangle()};
    CHECK(bouquet_lower_bound(bouquet(one), one) == sombor_index(cycle_graph(3)));

    const std::vector<RootedUnit> tris(2, RootedUnit(cycle_graph(3), 0));
    const auto bowtie = bouquet(tris);
    CHECK(cmp_numeric(sombor_index(bowtie.graph), bouquet_lower_bound(bowtie, tris)) == Ordering::Greater);
}

TEST_CASE("property: size postconditions and strict bounds") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<RootedUnit> pairs;
        std::vector<RootedUnit> singles;
        std::size_t vertices = 0, edges = 0;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back(random_unit(rng, true));
        for (const auto& u : pairs) {
            vertices += u.graph().vertex_count();
            edges += u.graph().edge_count();
            singles.emplace_back(u.graph(), u.x());
        }

        const auto l = link(pairs);
        CHECK(l.graph.vertex_count() == vertices);
        CHECK(l.graph.edge_count() == edges + n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CHECK(l.graph.degree(l.unit_maps[i](*pairs[i].y())) == pairs[i].graph().degree(*pairs[i].y()) + 1);
        }

        const auto c = chain(pairs);
        CHECK(c.graph.vertex_count() == vertices - (n - 1));
        CHECK(c.graph.edge_count() == edges);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CHECK(c.graph.degree(c.unit_maps[i + 1](pairs[i + 1].x())) ==
                  pairs[i].graph().degree(*pairs[i].y()) + pairs[i + 1].graph().degree(pairs[i + 1].x()));
        }

        const auto b = bouquet(singles);
        CHECK(b.graph.vertex_count() == vertices - (n - 1));
        CHECK(b.graph.edge_count() == edges);
        std::uint32_t hub = 0;
        for (const auto& u : singles) hub += u.graph().degree(u.x());
        CHECK(b.graph.degree(b.unit_maps[0](singles[0].x())) == hub);

        if (n >= 3) {
            const auto r = circuit(singles);
            CHECK(r.graph.edge_count() == edges + n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(r.graph.degree(r.unit_maps[i](singles[i].x())) == singles[i].graph().degree(singles[i].x()) + 2);
            }
            CHECK(cmp_numeric(sombor_index(r.graph), circuit_lower_bound_2k(singles)) == Ordering::Greater);
        }

        for (auto conv : {DegreeConvention::Unit, DegreeConvention::Assembly}) {
            CHECK(cmp_numeric(sombor_index(l.graph), link_lower_bound(l, pairs, conv)) == Ordering::Greater);
            CHECK(cmp_numeric(sombor_index(c.graph), chain_lower_bound_ii(c, pairs, conv)) == Ordering::Greater);
            CHECK(cmp_numeric(sombor_index(b.graph), bouquet_lower_bound(b, singles, conv)) == Ordering::Greater);
        }
    }
}
