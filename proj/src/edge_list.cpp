#include "sombor/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace sombor {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

bool only_whitespace_left(std::istringstream& fields) {
    std::string rest;
    return !(fields >> rest);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::optional<std::size_t> vertex_count;
    std::size_t declared_edges = 0;
    std::vector<Edge> edges;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag == "c") continue;

        if (tag == "p") {
            if (vertex_count) fail(line_no, "duplicate header");
            long long n = -1, m = -1;
            if (!(fields >> n >> m) || n < 0 || m < 0 || !only_whitespace_left(fields)) {
                fail(line_no, "expected `p <vertex_count> <edge_count>`");
            }
            vertex_count = static_cast<std::size_t>(n);
            declared_edges = static_cast<std::size_t>(m);
        } else if (tag == "e") {
            if (!vertex_count) fail(line_no, "edge before header");
            long long u = 0, v = 0;
            if (!(fields >> u >> v) || !only_whitespace_left(fields)) {
                fail(line_no, "expected `e <u> <v>`");
            }
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *vertex_count ||
                static_cast<std::size_t>(v) > *vertex_count) {
                fail(line_no, "vertex id out of range 1.." + std::to_string(*vertex_count));
            }
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
        } else {
            fail(line_no, "unknown line tag `" + tag + "`");
        }
    }
    if (!vertex_count) throw Error(ErrorKind::Parse, "missing `p` header");
    if (edges.size() != declared_edges) {
        throw Error(ErrorKind::Parse, "header declares " + std::to_string(declared_edges) +
                                          " edges, found " + std::to_string(edges.size()));
    }
    try {
        return Graph::from_edges(*vertex_count, edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::NotFound, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::NotFound, "cannot write " + path);
    write_edge_list(out, g);
}

}  // namespace sombor
