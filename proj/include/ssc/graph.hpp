#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on vertices 0..num_vertices()-1. Edges are stored
/// with u < v in lexicographic order; an edge's position in that order is
/// its rank.
class Graph {
public:
    Graph() = default;
    /// Normalizes each pair to u < v and sorts. Throws InputError on a
    /// self-loop, an out-of-range endpoint or a duplicate edge.
    Graph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    /// |V| + |E|
    std::size_t num_elements() const noexcept { return num_vertices_ + edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Rank of edge {u,v}, or -1 when absent.
    std::ptrdiff_t edge_rank(Vertex u, Vertex v) const;
    std::vector<std::size_t> degrees() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// The associated 3-uniform hypergraph: points are V followed by E, with
/// vertex v at index v and the edge of rank k at index |V| + k. There is one
/// triple {u, v, point(uv)} per edge, in edge-rank order.
struct Hypergraph {
    std::size_t num_vertices = 0;
    std::size_t num_points = 0;
    std::vector<std::array<std::uint32_t, 3>> triples;
};

Hypergraph build_hypergraph(const Graph& g);

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Single-line rendering used by enumeration output: "graph 3 2 0-1 0-2".
std::string graph_line(const Graph& g);

/// Most non-isolated vertices canonical_form will permute.
inline constexpr std::size_t kCanonicalMaxVertices = 10;

/// Lexicographically least edge list over all vertex relabelings.
/// Isomorphic graphs, and only those, share a canonical form.
/// Throws Unsupported when more than kCanonicalMaxVertices vertices carry edges.
Graph canonical_form(const Graph& g);

/// Canonical representatives of every graph with the given vertex and edge
/// counts, up to isomorphism, sorted.
std::vector<Graph> nonisomorphic_graphs(std::size_t num_vertices, std::size_t num_edges);

}  // namespace ssc
