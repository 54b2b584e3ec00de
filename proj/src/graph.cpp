#include "ssc/graph.hpp"

#include "text.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace ssc {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u >= num_vertices_ || v >= num_vertices_)
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " has an endpoint outside 0.." + std::to_string(num_vertices_));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InputError("duplicate edge " + std::to_string(dup->first) + "-" +
                         std::to_string(dup->second));
}

std::ptrdiff_t Graph::edge_rank(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return it - edges_.begin();
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(num_vertices_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Hypergraph build_hypergraph(const Graph& g) {
    Hypergraph h;
    h.num_vertices = g.num_vertices();
    h.num_points = g.num_elements();
    h.triples.reserve(g.num_edges());
    auto point = static_cast<std::uint32_t>(g.num_vertices());
    for (auto [u, v] : g.edges()) h.triples.push_back({u, v, point++});
    return h;
}

using detail::split_words;
using detail::to_index;

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::uint64_t num_vertices = 0;
    std::uint64_t declared_edges = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++lineno;
        auto words = split_words(line);
        if (words.empty() || words[0].front() == '#') continue;
        if (!have_header) {
            if (words.size() != 3 || words[0] != "graph")
                throw InputError("expected header 'graph <num_vertices> <num_edges>'", lineno);
            num_vertices = to_index(words[1], lineno);
            declared_edges = to_index(words[2], lineno);
            if (num_vertices > (std::uint64_t{1} << 31))
                throw InputError("vertex count too large", lineno);
            have_header = true;
            continue;
        }
        if (words.size() != 3 || words[0] != "e")
            throw InputError("expected edge line 'e <u> <v>'", lineno);
        if (edges.size() == declared_edges)
            throw InputError("more edge lines than the header declares", lineno);
        const auto u = to_index(words[1], lineno);
        const auto v = to_index(words[2], lineno);
        if (u >= num_vertices || v >= num_vertices)
            throw InputError("vertex index out of range", lineno);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u), lineno);
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw InputError("duplicate edge " + std::to_string(e.first) + "-" +
                                 std::to_string(e.second),
                             lineno);
        edges.push_back(e);
    }
    if (!have_header) throw InputError("missing 'graph' header", lineno);
    if (edges.size() != declared_edges)
        throw InputError("header declares " + std::to_string(declared_edges) +
                             " edges but found " + std::to_string(edges.size()),
                         lineno);
    return Graph(num_vertices, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string graph_line(const Graph& g) {
    std::string s = "graph " + std::to_string(g.num_vertices()) + ' ' + std::to_string(g.num_edges());
    for (auto [u, v] : g.edges()) s += ' ' + std::to_string(u) + '-' + std::to_string(v);
    return s;
}

namespace {

// The sorted edge list maps to a bit string over pairs (0,1),(0,2),...,(k-2,k-1)
// written most significant bit first. A lexicographically smaller edge list
// is a numerically larger code, so canonicalization maximizes the code.
struct PairBits {
    std::array<std::array<std::uint64_t, kCanonicalMaxVertices>, kCanonicalMaxVertices> bit{};

    PairBits() {
        int rank = 0;
        for (std::size_t i = 0; i < kCanonicalMaxVertices; ++i)
            for (std::size_t j = i + 1; j < kCanonicalMaxVertices; ++j, ++rank) {
                bit[i][j] = std::uint64_t{1} << (63 - rank);
                bit[j][i] = bit[i][j];
            }
    }
};

const PairBits& pair_bits() {
    static const PairBits table;
    return table;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    // Compacting the non-isolated vertices onto 0..k-1 in order never makes
    // the edge list larger, so only permutations of those k vertices matter.
    const auto deg = g.degrees();
    std::vector<Vertex> local(g.num_vertices(), 0);
    std::size_t k = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (deg[v] > 0) local[v] = static_cast<Vertex>(k++);
    if (k > kCanonicalMaxVertices)
        throw Unsupported("canonical_form: " + std::to_string(k) +
                          " non-isolated vertices exceeds the cap of " +
                          std::to_string(kCanonicalMaxVertices));

    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (auto [u, v] : g.edges()) edges.emplace_back(local[u], local[v]);

    const auto& bits = pair_bits().bit;
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = 0;
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) code |= bits[perm[u]][perm[v]];
        best = std::max(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Edge> out;
    out.reserve(g.num_edges());
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            if (best & bits[i][j]) out.emplace_back(i, j);
    return Graph(g.num_vertices(), std::move(out));
}

std::vector<Graph> nonisomorphic_graphs(std::size_t num_vertices, std::size_t num_edges) {
    if (num_vertices > 1 && num_edges > num_vertices * (num_vertices - 1) / 2) return {};
    if (num_vertices <= 1 && num_edges > 0) return {};

    std::vector<Graph> level{Graph(num_vertices, {})};
    for (std::size_t b = 0; b < num_edges; ++b) {
        std::vector<std::vector<Graph>> found(level.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(level.size()); ++i) {
            const Graph& g = level[static_cast<std::size_t>(i)];
            for (Vertex u = 0; u < num_vertices; ++u)
                for (Vertex v = u + 1; v < num_vertices; ++v) {
                    if (g.edge_rank(u, v) >= 0) continue;
                    auto edges = g.edges();
                    edges.emplace_back(u, v);
                    found[static_cast<std::size_t>(i)].push_back(
                        canonical_form(Graph(num_vertices, std::move(edges))));
                }
        }
        std::set<Graph> next;
        for (auto& batch : found)
            for (auto& g : batch) next.insert(std::move(g));
        level.assign(next.begin(), next.end());
    }
    return level;
}

}  // namespace ssc
