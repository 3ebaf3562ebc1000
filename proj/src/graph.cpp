#include "sombor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sombor {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::MergeConflict: return "merge-conflict";
        case ErrorKind::NotFound: return "not-found";
        case ErrorKind::InvalidUnit: return "invalid-unit";
        case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// VertexMap

VertexMap VertexMap::identity(std::size_t n) {
    return offset(n, 0);
}

VertexMap VertexMap::offset(std::size_t n, VertexId by) {
    std::vector<VertexId> image(n);
    std::iota(image.begin(), image.end(), by);
    return VertexMap(std::move(image));
}

VertexId VertexMap::operator()(VertexId v) const {
    if (v >= image_.size()) {
        throw Error(ErrorKind::NotFound, "vertex " + std::to_string(v) + " outside map domain");
    }
    return image_[v];
}

VertexMap VertexMap::then(const VertexMap& after) const {
    std::vector<VertexId> image(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        image[i] = image_[i] == kNoVertex ? kNoVertex : after(image_[i]);
    }
    return VertexMap(std::move(image));
}

// ---------------------------------------------------------------------------
// Census

void Census::add(DegreePair pair, std::uint64_t count) {
    if (count == 0) return;
    buckets_[pair] += count;
}

std::uint64_t Census::count(DegreePair pair) const {
    auto it = buckets_.find(pair);
    return it == buckets_.end() ? 0 : it->second;
}

std::uint64_t Census::total() const {
    std::uint64_t sum = 0;
    for (const auto& [pair, count] : buckets_) sum += count;
    return sum;
}

Census& Census::operator+=(const Census& other) {
    for (const auto& [pair, count] : other.buckets_) add(pair, count);
    return *this;
}

std::string Census::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [pair, count] : buckets_) {
        if (!first) out << ", ";
        first = false;
        out << '{' << pair.lo << ',' << pair.hi << "}:" << count;
    }
    out << '}';
    return out.str();
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<std::vector<VertexId>> adjacency) : adjacency_(std::move(adjacency)) {
    std::size_t half_edges = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        half_edges += nbrs.size();
    }
    edge_count_ = half_edges / 2;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    std::vector<std::vector<VertexId>> adjacency(vertex_count);
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw Error(ErrorKind::InvalidParameter,
                        "edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} references a vertex outside 0.." + std::to_string(vertex_count));
        }
        if (u == v) {
            throw Error(ErrorKind::InvalidParameter, "self-loop at vertex " + std::to_string(u));
        }
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& nbrs = adjacency[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            throw Error(ErrorKind::InvalidParameter,
                        "parallel edge at vertex " + std::to_string(v));
        }
    }
    return Graph(std::move(adjacency));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (!has_vertex(v)) {
        throw Error(ErrorKind::NotFound, "vertex " + std::to_string(v) + " not in graph");
    }
    return adjacency_[v];
}

std::uint32_t Graph::degree(VertexId v) const {
    return static_cast<std::uint32_t>(neighbors(v).size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) {
        throw Error(ErrorKind::NotFound, "cannot add edge to a missing vertex");
    }
    if (u == v) throw Error(ErrorKind::InvalidParameter, "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw Error(ErrorKind::InvalidParameter,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
    }
    auto adjacency = adjacency_;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    return Graph(std::move(adjacency));
}

// ---------------------------------------------------------------------------
// Standard graphs

Graph cycle_graph(std::size_t q) {
    if (q < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < q; ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % q));
    }
    return Graph::from_edges(q, edges);
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

// ---------------------------------------------------------------------------
// Surgery

UnionResult disjoint_union(std::span<const Graph> graphs) {
    UnionResult result;
    std::size_t total = 0;
    std::vector<Edge> edges;
    for (const auto& g : graphs) {
        const auto base = static_cast<VertexId>(total);
        result.maps.push_back(VertexMap::offset(g.vertex_count(), base));
        for (const auto& [u, v] : g.edges()) edges.emplace_back(u + base, v + base);
        total += g.vertex_count();
    }
    result.graph = Graph::from_edges(total, edges);
    return result;
}

IdentifyResult identify(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw Error(ErrorKind::NotFound, "identify: vertex not in graph");
    }
    if (u == v) throw Error(ErrorKind::InvalidParameter, "identify: u and v must differ");
    if (g.has_edge(u, v)) {
        throw Error(ErrorKind::MergeConflict, "identify: vertices " + std::to_string(u) + " and " +
                                                  std::to_string(v) + " are adjacent");
    }
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::vector<VertexId> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw Error(ErrorKind::MergeConflict, "identify: vertices " + std::to_string(u) + " and " +
                                                  std::to_string(v) + " share neighbour " +
                                                  std::to_string(common.front()));
    }

    std::vector<VertexId> image(g.vertex_count());
    for (VertexId w = 0; w < g.vertex_count(); ++w) image[w] = w < v ? w : w - 1;
    image[v] = image[u];

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) edges.emplace_back(image[a], image[b]);
    return {Graph::from_edges(g.vertex_count() - 1, edges), VertexMap(std::move(image))};
}

Graph delete_edge(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) {
        throw Error(ErrorKind::NotFound,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not in graph");
    }
    auto edges = g.edges();
    const Edge target = u < v ? Edge{u, v} : Edge{v, u};
    std::erase(edges, target);
    return Graph::from_edges(g.vertex_count(), edges);
}

DeleteVertexResult delete_vertex(const Graph& g, VertexId v) {
    if (!g.has_vertex(v)) {
        throw Error(ErrorKind::NotFound, "vertex " + std::to_string(v) + " not in graph");
    }
    std::vector<VertexId> image(g.vertex_count());
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        image[w] = w < v ? w : (w == v ? kNoVertex : w - 1);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a != v && b != v) edges.emplace_back(image[a], image[b]);
    }
    return {Graph::from_edges(g.vertex_count() - 1, edges), VertexMap(std::move(image))};
}

bool is_connected(const Graph& g) {
    const auto n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Census edge_census(const Graph& g) {
    Census census;
    for (const auto& [u, v] : g.edges()) census.add(DegreePair::of(g.degree(u), g.degree(v)));
    return census;
}

}  // namespace sombor
