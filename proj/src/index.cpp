#include "sombor/index.hpp"

#include <algorithm>
#include <map>

namespace sombor {

RadicalSum sombor_index(const Graph& g) {
    // Group edges by d_u^2 + d_v^2 before canonicalising; each group is one radical.
    std::map<std::uint64_t, std::uint64_t> by_square_sum;
    for (const auto& [u, v] : g.edges()) {
        const std::uint64_t du = g.degree(u);
        const std::uint64_t dv = g.degree(v);
        ++by_square_sum[du * du + dv * dv];
    }
    RadicalSum total;
    for (const auto& [n, count] : by_square_sum) {
        total += radical_of(static_cast<std::int64_t>(n)) * Rational(count);
    }
    return total;
}

StrictCheck check_strict(RadicalSum lhs, StrictCheck::Relation relation, RadicalSum rhs) {
    StrictCheck out;
    out.relation = relation;
    out.ordering = cmp_numeric(lhs, rhs);
    out.gap = (lhs - rhs).to_double();
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

RadicalSum half_sqrt2_gap(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a > b ? a - b : b - a;
    return RadicalSum::term(Rational(diff, 2), 2);
}

StrictCheck deletion_bound(const Graph& g, VertexId u, VertexId v) {
    const auto without = delete_edge(g, u, v);
    auto rhs = sombor_index(g) - half_sqrt2_gap(g.degree(u), g.degree(v));
    return check_strict(sombor_index(without), StrictCheck::Relation::Less, std::move(rhs));
}

StrictCheck monomer_sum_bound(const Graph& g, std::span<const Graph> monomers) {
    RadicalSum parts;
    for (const auto& m : monomers) parts += sombor_index(m);
    auto out = check_strict(sombor_index(g), StrictCheck::Relation::Greater, std::move(parts));
    const auto with_edges = std::count_if(monomers.begin(), monomers.end(),
                                          [](const Graph& m) { return m.edge_count() > 0; });
    out.applicable = with_edges >= 2;
    return out;
}

}  // namespace sombor
