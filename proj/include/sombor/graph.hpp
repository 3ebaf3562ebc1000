#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Maps vertex ids of an input graph to vertex ids of an output graph.
/// Total on the input vertex set.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::vector<VertexId> image) : image_(std::move(image)) {}

    static VertexMap identity(std::size_t n);
    static VertexMap offset(std::size_t n, VertexId by);

    VertexId operator()(VertexId v) const;
    std::size_t size() const noexcept { return image_.size(); }
    std::span<const VertexId> image() const noexcept { return image_; }

    /// `then(after)` maps v to after(this(v)).
    VertexMap then(const VertexMap& after) const;

    friend bool operator==(const VertexMap&, const VertexMap&) = default;

private:
    std::vector<VertexId> image_;
};

/// Unordered pair of endpoint degrees, stored with lo <= hi.
struct DegreePair {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    static DegreePair of(std::uint32_t a, std::uint32_t b) {
        return a <= b ? DegreePair{a, b} : DegreePair{b, a};
    }

    friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

/// Multiset of endpoint-degree pairs over the edges of a graph.
/// Zero counts are never stored.
class Census {
public:
    Census() = default;

    void add(DegreePair pair, std::uint64_t count = 1);
    std::uint64_t count(DegreePair pair) const;
    std::uint64_t total() const;
    const std::map<DegreePair, std::uint64_t>& buckets() const noexcept { return buckets_; }

    Census& operator+=(const Census& other);
    friend bool operator==(const Census&, const Census&) = default;

    /// `{{2,2}:20, {2,4}:28}`
    std::string to_string() const;

private:
    std::map<DegreePair, std::uint64_t> buckets_;
};

/// Immutable simple undirected graph on vertices 0..vertex_count()-1.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidParameter on self-loops, out-of-range ids or repeated edges.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Sorted neighbour list of v.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::uint32_t degree(VertexId v) const;
    bool has_vertex(VertexId v) const noexcept { return v < adjacency_.size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Graph with_edge(VertexId u, VertexId v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::vector<VertexId>> adjacency);

    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph cycle_graph(std::size_t q);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

struct UnionResult {
    Graph graph;
    std::vector<VertexMap> maps;
};
UnionResult disjoint_union(std::span<const Graph> graphs);

struct IdentifyResult {
    Graph graph;
    VertexMap map;
};
/// Merges v into u. The merged vertex inherits both neighbourhoods; ids above v
/// shift down by one. Rejects adjacent pairs and pairs with a common neighbour.
IdentifyResult identify(const Graph& g, VertexId u, VertexId v);

Graph delete_edge(const Graph& g, VertexId u, VertexId v);

struct DeleteVertexResult {
    Graph graph;
    /// Defined for every vertex except the deleted one, which maps to kNoVertex.
    VertexMap map;
};
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
DeleteVertexResult delete_vertex(const Graph& g, VertexId v);

bool is_connected(const Graph& g);

Census edge_census(const Graph& g);

}  // namespace sombor
