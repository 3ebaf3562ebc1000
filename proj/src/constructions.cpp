#include "sombor/constructions.hpp"

#include <algorithm>
#include <string>

#include "sombor/index.hpp"

namespace sombor {

RootedUnit::RootedUnit(Graph graph, VertexId x, std::optional<VertexId> y)
    : graph_(std::move(graph)), x_(x), y_(y) {
    if (!graph_.has_vertex(x_)) {
        throw Error(ErrorKind::InvalidUnit, "contact x=" + std::to_string(x_) + " not in unit");
    }
    if (y_ && !graph_.has_vertex(*y_)) {
        throw Error(ErrorKind::InvalidUnit, "contact y=" + std::to_string(*y_) + " not in unit");
    }
    if (y_ && *y_ == x_) throw Error(ErrorKind::InvalidUnit, "contacts x and y coincide");
    if (!is_connected(graph_)) throw Error(ErrorKind::InvalidUnit, "unit graph is disconnected");
}

VertexId RootedUnit::require_y() const {
    if (!y_) throw Error(ErrorKind::InvalidUnit, "unit has no second contact y");
    return *y_;
}

std::string_view to_string(Operator op) noexcept {
    switch (op) {
        case Operator::Link: return "link";
        case Operator::Chain: return "chain";
        case Operator::Circuit: return "circuit";
        case Operator::Bouquet: return "bouquet";
    }
    return "unknown";
}

Operator parse_operator(std::string_view name) {
    for (auto op : {Operator::Link, Operator::Chain, Operator::Circuit, Operator::Bouquet}) {
        if (name == to_string(op)) return op;
    }
    throw Error(ErrorKind::InvalidParameter, "unknown operator `" + std::string(name) + "`");
}

std::string_view to_string(DegreeConvention c) noexcept {
    return c == DegreeConvention::Unit ? "unit" : "assembly";
}

namespace {

struct Workspace {
    Graph graph;
    std::vector<VertexMap> maps;  // one per input graph

    explicit Workspace(std::span<const Graph> parts) {
        auto u = disjoint_union(parts);
        graph = std::move(u.graph);
        maps = std::move(u.maps);
    }

    void merge(VertexId keep, VertexId drop) {
        auto r = identify(graph, keep, drop);
        graph = std::move(r.graph);
        for (auto& m : maps) m = m.then(r.map);
    }
};

std::vector<Graph> unit_graphs(std::span<const RootedUnit> units) {
    std::vector<Graph> out;
    out.reserve(units.size());
    for (const auto& u : units) out.push_back(u.graph());
    return out;
}

void require_units(std::span<const RootedUnit> units, std::size_t min, const char* what) {
    if (units.size() < min) {
        throw Error(ErrorKind::InvalidParameter, std::string(what) + " needs at least " +
                                                     std::to_string(min) + " units");
    }
}

Assembly finish(Workspace ws, std::span<const RootedUnit> units) {
    Assembly out;
    out.graph = std::move(ws.graph);
    out.unit_maps.assign(ws.maps.begin(), ws.maps.begin() + static_cast<std::ptrdiff_t>(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i) {
        std::vector<VertexId> mine{out.unit_maps[i](units[i].x())};
        if (units[i].y()) mine.push_back(out.unit_maps[i](*units[i].y()));
        for (auto c : mine) {
            if (std::find(out.contact_ids.begin(), out.contact_ids.end(), c) == out.contact_ids.end()) {
                out.contact_ids.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace

Assembly link(std::span<const RootedUnit> units) {
    require_units(units, 1, "link");
    for (const auto& u : units) u.require_y();
    const auto parts = unit_graphs(units);
    Workspace ws(parts);
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
        ws.graph = ws.graph.with_edge(ws.maps[i](*units[i].y()), ws.maps[i + 1](units[i + 1].x()));
    }
    return finish(std::move(ws), units);
}

Assembly chain(std::span<const RootedUnit> units) {
    require_units(units, 1, "chain");
    for (const auto& u : units) u.require_y();
    const auto parts = unit_graphs(units);
    Workspace ws(parts);
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
        ws.merge(ws.maps[i](*units[i].y()), ws.maps[i + 1](units[i + 1].x()));
    }
    return finish(std::move(ws), units);
}

Assembly circuit(std::span<const RootedUnit> units) {
    require_units(units, 3, "circuit");
    auto parts = unit_graphs(units);
    parts.push_back(cycle_graph(units.size()));
    Workspace ws(parts);
    const auto& ring = ws.maps.back();
    for (std::size_t i = 0; i < units.size(); ++i) {
        // ring is updated in place by every merge
        ws.merge(ws.maps[i](units[i].x()), ring(static_cast<VertexId>(i)));
    }
    return finish(std::move(ws), units);
}

Assembly bouquet(std::span<const RootedUnit> units) {
    require_units(units, 1, "bouquet");
    const auto parts = unit_graphs(units);
    Workspace ws(parts);
    for (std::size_t i = 1; i < units.size(); ++i) {
        ws.merge(ws.maps[0](units[0].x()), ws.maps[i](units[i].x()));
    }
    return finish(std::move(ws), units);
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

void check_pairing(const Assembly& a, std::span<const RootedUnit> units) {
    if (a.unit_maps.size() != units.size()) {
        throw Error(ErrorKind::InvalidParameter, "assembly has " + std::to_string(a.unit_maps.size()) +
                                                     " units, got " + std::to_string(units.size()));
    }
    for (std::size_t i = 0; i < units.size(); ++i) {
        const auto& g = units[i].graph();
        const auto& m = a.unit_maps[i];
        if (m.size() != g.vertex_count()) {
            throw Error(ErrorKind::InvalidParameter, "unit " + std::to_string(i) + " size mismatch");
        }
        for (const auto& [u, v] : g.edges()) {
            if (!a.graph.has_edge(m(u), m(v))) {
                throw Error(ErrorKind::InvalidParameter,
                            "unit " + std::to_string(i) + " edge not present in assembly");
            }
        }
    }
}

RadicalSum sum_of_indices(std::span<const RootedUnit> units) {
    RadicalSum total;
    for (const auto& u : units) total += sombor_index(u.graph());
    return total;
}

RadicalSum index_without_contact(const RootedUnit& unit) {
    return sombor_index(delete_vertex(unit.graph(), unit.x()).graph);
}

/// sum over neighbours u of x_i in G_i of |d_u - d_joint| / sqrt(2).
RadicalSum contact_neighbour_gaps(const Assembly& a, const RootedUnit& unit, const VertexMap& map,
                                  std::uint32_t joint_degree, DegreeConvention convention) {
    RadicalSum total;
    for (auto u : unit.graph().neighbors(unit.x())) {
        const auto du = convention == DegreeConvention::Unit ? unit.graph().degree(u)
                                                             : a.graph.degree(map(u));
        total += half_sqrt2_gap(du, joint_degree);
    }
    return total;
}

}  // namespace

RadicalSum link_lower_bound(const Assembly& assembly, std::span<const RootedUnit> units,
                            DegreeConvention convention) {
    check_pairing(assembly, units);
    auto bound = sum_of_indices(units);
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
        const auto y = units[i].require_y();
        const auto x = units[i + 1].x();
        if (convention == DegreeConvention::Unit) {
            bound += half_sqrt2_gap(units[i + 1].graph().degree(x), units[i].graph().degree(y));
        } else {
            bound += half_sqrt2_gap(assembly.graph.degree(assembly.unit_maps[i + 1](x)),
                                    assembly.graph.degree(assembly.unit_maps[i](y)));
        }
    }
    return bound;
}

RadicalSum circuit_lower_bound_deg(const Assembly& assembly, std::span<const RootedUnit> units,
                                   DegreeConvention convention) {
    check_pairing(assembly, units);
    require_units(units, 3, "circuit");
    auto degree_of = [&](std::size_t i) {
        const auto x = units[i].x();
        return convention == DegreeConvention::Unit ? units[i].graph().degree(x)
                                                    : assembly.graph.degree(assembly.unit_maps[i](x));
    };
    auto bound = sum_of_indices(units);
    for (std::size_t i = 0; i < units.size(); ++i) {
        bound += half_sqrt2_gap(degree_of(i), degree_of((i + 1) % units.size()));
    }
    return bound;
}

RadicalSum circuit_lower_bound_2k(std::span<const RootedUnit> units) {
    require_units(units, 3, "circuit");
    return RadicalSum::term(Rational(2 * units.size()), 2) + sum_of_indices(units);
}

namespace {

RadicalSum chain_tail_term(const Assembly& assembly, std::span<const RootedUnit> units,
                           std::size_t i, DegreeConvention convention) {
    // Unit i (>= 1) was glued to unit i-1 at x_i == y_{i-1}.
    const auto joint_degree = convention == DegreeConvention::Unit
                                  ? units[i - 1].graph().degree(units[i - 1].require_y())
                                  : assembly.graph.degree(assembly.unit_maps[i](units[i].x()));
    return index_without_contact(units[i]) +
           contact_neighbour_gaps(assembly, units[i], assembly.unit_maps[i], joint_degree, convention);
}

}  // namespace

RadicalSum chain_lower_bound_i(const Assembly& assembly, std::span<const RootedUnit> units,
                               DegreeConvention convention) {
    check_pairing(assembly, units);
    require_units(units, 2, "chain bound (i)");
    const auto head = chain(units.first(units.size() - 1));
    return sombor_index(head.graph) + chain_tail_term(assembly, units, units.size() - 1, convention);
}

RadicalSum chain_lower_bound_ii(const Assembly& assembly, std::span<const RootedUnit> units,
                                DegreeConvention convention) {
    check_pairing(assembly, units);
    require_units(units, 1, "chain");
    auto bound = sombor_index(units[0].graph());
    for (std::size_t i = 1; i < units.size(); ++i) {
        bound += chain_tail_term(assembly, units, i, convention);
    }
    return bound;
}

RadicalSum bouquet_lower_bound(const Assembly& assembly, std::span<const RootedUnit> units,
                               DegreeConvention convention) {
    check_pairing(assembly, units);
    require_units(units, 1, "bouquet");
    auto bound = sombor_index(units[0].graph());
    for (std::size_t i = 1; i < units.size(); ++i) {
        const auto& unit = units[i];
        const auto hub_degree = convention == DegreeConvention::Unit
                                    ? unit.graph().degree(unit.x())
                                    : assembly.graph.degree(assembly.unit_maps[i](unit.x()));
        bound += index_without_contact(unit) +
                 contact_neighbour_gaps(assembly, unit, assembly.unit_maps[i], hub_degree, convention);
    }
    return bound;
}

}  // namespace sombor
