#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// A connected monomer with one or two designated contact vertices.
class RootedUnit {
public:
    /// Throws InvalidUnit if the graph is disconnected, a contact is out of
    /// range, or x == y.
    RootedUnit(Graph graph, VertexId x, std::optional<VertexId> y = std::nullopt);

    const Graph& graph() const noexcept { return graph_; }
    VertexId x() const noexcept { return x_; }
    const std::optional<VertexId>& y() const noexcept { return y_; }
    /// Throws InvalidUnit for single-contact units.
    VertexId require_y() const;

private:
    Graph graph_;
    VertexId x_;
    std::optional<VertexId> y_;
};

enum class Operator { Link, Chain, Circuit, Bouquet };
std::string_view to_string(Operator op) noexcept;
Operator parse_operator(std::string_view name);

/// An assembled polymer plus where each input unit ended up.
struct Assembly {
    Graph graph;
    std::vector<VertexMap> unit_maps;
    /// Images of x_1, y_1, x_2, ... in input order, duplicates dropped.
    std::vector<VertexId> contact_ids;
};

/// Joins y_i to x_{i+1} with a new edge.
Assembly link(std::span<const RootedUnit> units);
/// Identifies y_i with x_{i+1}.
Assembly chain(std::span<const RootedUnit> units);
/// Identifies x_i with the i-th vertex of a fresh cycle C_k, k >= 3.
Assembly circuit(std::span<const RootedUnit> units);
/// Identifies every x_i into one hub vertex.
Assembly bouquet(std::span<const RootedUnit> units);

/// Which graph the degrees in a bound formula are read from: the unit before
/// assembly, or the assembled polymer.
enum class DegreeConvention { Unit, Assembly };
std::string_view to_string(DegreeConvention c) noexcept;

// Lower bounds on SO(assembly). Each throws InvalidParameter when the assembly
// does not match the units (count, sizes, or an unmapped unit edge).

/// sum SO(G_i) + sum_{i<n} |d(x_{i+1}) - d(y_i)| / sqrt(2)
RadicalSum link_lower_bound(const Assembly& assembly, std::span<const RootedUnit> units,
                            DegreeConvention convention = DegreeConvention::Unit);

/// sum SO(G_i) + cyclic sum |d(x_i) - d(x_{i+1})| / sqrt(2)
RadicalSum circuit_lower_bound_deg(const Assembly& assembly, std::span<const RootedUnit> units,
                                   DegreeConvention convention = DegreeConvention::Unit);

/// 2k sqrt(2) + sum SO(G_i); attained exactly when every unit is K_1.
RadicalSum circuit_lower_bound_2k(std::span<const RootedUnit> units);

/// SO(chain of the first n-1 units) + SO(G_n - x_n)
///   + sum_{u ~ x_n in G_n} |d_u - d(joint)| / sqrt(2).   Needs n >= 2.
RadicalSum chain_lower_bound_i(const Assembly& assembly, std::span<const RootedUnit> units,
                               DegreeConvention convention = DegreeConvention::Assembly);

/// SO(G_1) + sum_{i>=2} SO(G_i - x_i)
///   + sum_{i>=2} sum_{u ~ x_i in G_i} |d_u - d(joint_i)| / sqrt(2)
RadicalSum chain_lower_bound_ii(const Assembly& assembly, std::span<const RootedUnit> units,
                                DegreeConvention convention = DegreeConvention::Assembly);

/// SO(G_1) + sum_{i>=2} SO(G_i - x_i)
///   + sum_{i>=2} sum_{u ~ x_i in G_i} |d_u - d(hub)| / sqrt(2)
RadicalSum bouquet_lower_bound(const Assembly& assembly, std::span<const RootedUnit> units,
                               DegreeConvention convention = DegreeConvention::Assembly);

}  // namespace sombor
