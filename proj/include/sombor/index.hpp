#pragma once

#include <span>

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// SO(G): sum over edges uv of sqrt(d_u^2 + d_v^2). Isolated vertices
/// contribute nothing and the graph need not be connected.
RadicalSum sombor_index(const Graph& g);

/// Outcome of checking a strict inequality `lhs <relation> rhs` numerically.
struct StrictCheck {
    enum class Relation { Less, Greater };

    Relation relation = Relation::Less;
    bool applicable = true;
    Ordering ordering = Ordering::Inconclusive;
    RadicalSum lhs;
    RadicalSum rhs;
    double gap = 0.0;  // eval(lhs - rhs)

    bool holds() const noexcept {
        return applicable && ordering == (relation == Relation::Less ? Ordering::Less : Ordering::Greater);
    }
};

/// Margin-checked `lhs < rhs` or `lhs > rhs`.
StrictCheck check_strict(RadicalSum lhs, StrictCheck::Relation relation, RadicalSum rhs);

/// SO(G - e) < SO(G) - |d_u - d_v| / sqrt(2), degrees taken in G.
/// Throws NotFound if uv is not an edge.
StrictCheck deletion_bound(const Graph& g, VertexId u, VertexId v);
inline bool deletion_bound_holds(const Graph& g, VertexId u, VertexId v) {
    return deletion_bound(g, u, v).holds();
}

/// SO(G) > sum_i SO(G_i) for a graph assembled by point-attaching `monomers`.
/// Not applicable unless at least two monomers carry an edge: attaching an
/// edgeless monomer leaves the graph unchanged, so the strict form fails.
StrictCheck monomer_sum_bound(const Graph& g, std::span<const Graph> monomers);
inline bool monomer_sum_bound_holds(const Graph& g, std::span<const Graph> monomers) {
    return monomer_sum_bound(g, monomers).holds();
}

/// |a - b| / sqrt(2) as an exact radical sum.
RadicalSum half_sqrt2_gap(std::uint32_t a, std::uint32_t b);

}  // namespace sombor
