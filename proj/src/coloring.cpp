#include "ssc/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <limits>
#include <ostream>

#include "text.hpp"

namespace ssc {

std::string vertex_name(Vertex v) { return "vertex " + std::to_string(v); }

std::string edge_name(const Edge& e) {
    return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
}

std::string element_name(const Graph& g, std::size_t element) {
    if (element < g.num_vertices()) return vertex_name(static_cast<Vertex>(element));
    return edge_name(g.edges()[element - g.num_vertices()]);
}

namespace {

void require_total(const Graph& g, const Coloring& c) {
    if (c.vertex_labels.size() != g.num_vertices() || c.edge_labels.size() != g.num_edges())
        throw InputError("coloring does not cover every vertex and edge of the graph");
    auto wrong = [&](const ColorVector& v) { return v.dimension() != c.n; };
    if (std::any_of(c.vertex_labels.begin(), c.vertex_labels.end(), wrong) ||
        std::any_of(c.edge_labels.begin(), c.edge_labels.end(), wrong))
        throw InputError("label dimension differs from the coloring's n = " +
                         std::to_string(c.n.value()));
}

const ColorVector& label_of(const Graph& g, const Coloring& c, std::size_t element) {
    return element < g.num_vertices() ? c.vertex_labels[element]
                                      : c.edge_labels[element - g.num_vertices()];
}

Verdict size_reject(const Graph& g, const Coloring& c) {
    return {RejectReason::size, "|V|+|E| = " + std::to_string(g.num_elements()) +
                                    " but 2^n-1 = " + std::to_string(c.n.universe())};
}

Verdict duplicate_reject(const Graph& g, const Coloring& c, std::size_t element,
                         std::size_t first) {
    return {RejectReason::duplicate_label, "duplicate label " +
                                               to_hex(label_of(g, c, element)) + " on " +
                                               element_name(g, element) + ", already on " +
                                               element_name(g, first)};
}

Verdict edge_reject(const Graph& g, const Coloring& c, std::size_t rank) {
    const auto [u, v] = g.edges()[rank];
    return {RejectReason::edge_rule,
            edge_name(g.edges()[rank]) + " has label " + to_hex(c.edge_labels[rank]) +
                " but its endpoints give " +
                to_hex(c.vertex_labels[u].bits() ^ c.vertex_labels[v].bits())};
}

bool edge_ok(const Graph& g, const Coloring& c, std::size_t rank) {
    const auto [u, v] = g.edges()[rank];
    return c.edge_labels[rank].bits() == (c.vertex_labels[u].bits() ^ c.vertex_labels[v].bits());
}

}  // namespace

Verdict verify_coloring(const Graph& g, const Coloring& c) {
    require_total(g, c);
    const std::size_t total = g.num_elements();
    if (total != c.n.universe()) return size_reject(g, c);

    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(static_cast<std::size_t>(c.n.universe()) + 1, kUnseen);
    for (std::size_t z = 0; z < total; ++z) {
        auto& slot = owner[label_of(g, c, z).bits()];
        if (slot != kUnseen) return duplicate_reject(g, c, z, slot);
        slot = z;
    }
    for (std::size_t k = 0; k < g.num_edges(); ++k)
        if (!edge_ok(g, c, k)) return edge_reject(g, c, k);
    return {};
}

Verdict verify_coloring_parallel(const Graph& g, const Coloring& c) {
    require_total(g, c);
    const auto total = static_cast<std::int64_t>(g.num_elements());
    if (g.num_elements() != c.n.universe()) return size_reject(g, c);

    constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> first(static_cast<std::size_t>(c.n.universe()) + 1, kNone);

#pragma omp parallel for
    for (std::int64_t z = 0; z < total; ++z) {
        std::atomic_ref<std::int64_t> slot(first[label_of(g, c, static_cast<std::size_t>(z)).bits()]);
        std::int64_t seen = slot.load(std::memory_order_relaxed);
        while (z < seen && !slot.compare_exchange_weak(seen, z, std::memory_order_relaxed)) {
        }
    }

    std::int64_t dup = kNone;
#pragma omp parallel for reduction(min : dup)
    for (std::int64_t z = 0; z < total; ++z)
        if (first[label_of(g, c, static_cast<std::size_t>(z)).bits()] < z) dup = std::min(dup, z);
    if (dup != kNone) {
        const auto z = static_cast<std::size_t>(dup);
        return duplicate_reject(g, c, z,
                                static_cast<std::size_t>(first[label_of(g, c, z).bits()]));
    }

    const auto num_edges = static_cast<std::int64_t>(g.num_edges());
    std::int64_t bad = kNone;
#pragma omp parallel for reduction(min : bad)
    for (std::int64_t k = 0; k < num_edges; ++k)
        if (!edge_ok(g, c, static_cast<std::size_t>(k))) bad = std::min(bad, k);
    if (bad != kNone) return edge_reject(g, c, static_cast<std::size_t>(bad));
    return {};
}

std::string failure_code(FailureClass kind) {
    switch (kind) {
        case FailureClass::not_power_of_two: return "F1";
        case FailureClass::zero_label: return "F2";
        case FailureClass::inconsistent_edge: return "F3";
        case FailureClass::duplicate_label: return "F4";
    }
    return "F?";
}

ColorResult color_from_packing(const Graph& g, const PackingRealization& pr) {
    const std::size_t total = g.num_elements();
    const auto derived = Dimension::for_universe(total);
    if (!derived)
        return ColoringFailure{FailureClass::not_power_of_two, "graph",
                               "|V|+|E| = " + std::to_string(total) + " and " +
                                   std::to_string(total + 1) + " is not a power of two"};
    const Dimension n = *derived;
    if (pr.n != n)
        throw InputError("realization has n = " + std::to_string(pr.n.value()) +
                         " but the graph needs n = " + std::to_string(n.value()));
    if (pr.iota.size() != total)
        throw InputError("realization places " + std::to_string(pr.iota.size()) + " of " +
                         std::to_string(total) + " elements");
    for (Point p : pr.iota)
        if (p == 0 || p > n.universe())
            throw InputError("embedded point " + std::to_string(p) + " outside 1.." +
                             std::to_string(n.universe()));
    if (const auto& table = pr.lambda.table()) {
        if (table->size() != static_cast<std::size_t>(n.universe()) + 1)
            throw InputError("lambda table does not cover the point set");
        for (std::uint32_t v : *table)
            if (v > n.universe()) throw InputError("lambda value " + to_hex(v) + " too wide");
    }

    std::vector<std::uint32_t> label(total);
    for (std::size_t z = 0; z < total; ++z) {
        label[z] = pr.lambda(pr.iota[z]);
        if (label[z] == 0)
            return ColoringFailure{FailureClass::zero_label, element_name(g, z),
                                   "lambda(" + std::to_string(pr.iota[z]) + ") is the zero vector"};
    }

    const std::size_t nv = g.num_vertices();
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const auto [u, v] = g.edges()[k];
        if (label[nv + k] != (label[u] ^ label[v]))
            return ColoringFailure{FailureClass::inconsistent_edge, edge_name(g.edges()[k]),
                                   "edge label " + to_hex(label[nv + k]) + " != " +
                                       to_hex(label[u]) + " + " + to_hex(label[v])};
    }

    std::vector<bool> present(static_cast<std::size_t>(n.universe()) + 1, false);
    for (std::size_t z = 0; z < total; ++z) {
        if (present[label[z]])
            return ColoringFailure{FailureClass::duplicate_label, element_name(g, z),
                                   "label " + to_hex(label[z]) + " is used twice"};
        present[label[z]] = true;
    }

    Coloring c{n, {}, {}};
    c.vertex_labels.reserve(nv);
    c.edge_labels.reserve(g.num_edges());
    for (std::size_t z = 0; z < nv; ++z) c.vertex_labels.emplace_back(label[z], n);
    for (std::size_t z = nv; z < total; ++z) c.edge_labels.emplace_back(label[z], n);
    return c;
}

std::pair<Graph, PackingRealization> make_star_realization(Dimension n) {
    if (n.value() < 2) throw InputError("star realization needs n >= 2");
    const std::uint32_t leaves = (std::uint32_t{1} << (n.value() - 1)) - 1;
    std::vector<Edge> edges;
    edges.reserve(leaves);
    for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    Graph g(leaves + 1, std::move(edges));

    PackingRealization pr{n, {}, Labeling::identity()};
    pr.iota.resize(g.num_elements());
    pr.iota[0] = 1;
    for (std::uint32_t i = 1; i <= leaves; ++i) {
        pr.iota[i] = 2 * i;
        pr.iota[leaves + i] = 2 * i + 1;  // edge 0-i has rank i-1
    }
    return {std::move(g), std::move(pr)};
}

void write_coloring(std::ostream& out, const Graph& g, const Coloring& c) {
    out << "coloring " << c.n.value() << '\n';
    for (std::size_t v = 0; v < c.vertex_labels.size(); ++v)
        out << "v " << v << ' ' << to_hex(c.vertex_labels[v]) << '\n';
    for (std::size_t k = 0; k < c.edge_labels.size(); ++k)
        out << "e " << g.edges()[k].first << ' ' << g.edges()[k].second << ' '
            << to_hex(c.edge_labels[k]) << '\n';
}

namespace {

// Fills slot[index] once; duplicates and gaps are input errors.
template <typename T>
void fill_once(std::vector<std::optional<T>>& slots, std::size_t index, T value,
               const std::string& what, int lineno) {
    if (slots[index]) throw InputError(what + " listed twice", lineno);
    slots[index] = std::move(value);
}

std::size_t edge_index(const Graph& g, std::uint64_t u, std::uint64_t v, int lineno) {
    if (u >= g.num_vertices() || v >= g.num_vertices())
        throw InputError("vertex index out of range", lineno);
    const auto rank = g.edge_rank(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (rank < 0)
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " is not in the graph",
                         lineno);
    return static_cast<std::size_t>(rank);
}

unsigned parse_dimension(std::string_view word, int lineno) {
    const auto n = detail::to_index(word, lineno);
    if (n < 1 || n > Dimension::kMax) throw InputError("bad dimension", lineno);
    return static_cast<unsigned>(n);
}

template <typename T>
std::vector<T> collect(std::vector<std::optional<T>>& slots, const std::string& kind,
                       const Graph& g, std::size_t offset, int lineno) {
    std::vector<T> out;
    out.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i])
            throw InputError("no " + kind + " for " + element_name(g, offset + i), lineno);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace

Coloring parse_coloring(std::istream& in, const Graph& g) {
    std::string line;
    int lineno = 0;
    std::optional<Dimension> n;
    std::vector<std::optional<ColorVector>> vertex(g.num_vertices());
    std::vector<std::optional<ColorVector>> edge(g.num_edges());
    while (std::getline(in, line)) {
        ++lineno;
        auto words = detail::split_words(line);
        if (detail::skippable(words)) continue;
        if (!n) {
            if (words.size() != 2 || words[0] != "coloring")
                throw InputError("expected header 'coloring <n>'", lineno);
            n = Dimension(parse_dimension(words[1], lineno));
            continue;
        }
        auto label = [&](std::string_view word) {
            const auto bits = parse_hex(word, lineno);
            if (bits == 0 || bits > n->universe())
                throw InputError("label " + std::string(word) + " is not a nonzero " +
                                     std::to_string(n->value()) + "-bit vector",
                                 lineno);
            return ColorVector(bits, *n);
        };
        if (words[0] == "v" && words.size() == 3) {
            const auto v = detail::to_index(words[1], lineno);
            if (v >= g.num_vertices()) throw InputError("vertex index out of range", lineno);
            fill_once(vertex, v, label(words[2]), vertex_name(static_cast<Vertex>(v)), lineno);
        } else if (words[0] == "e" && words.size() == 4) {
            const auto k = edge_index(g, detail::to_index(words[1], lineno),
                                      detail::to_index(words[2], lineno), lineno);
            fill_once(edge, k, label(words[3]), edge_name(g.edges()[k]), lineno);
        } else {
            throw InputError("expected 'v <id> <hex>' or 'e <u> <v> <hex>'", lineno);
        }
    }
    if (!n) throw InputError("missing 'coloring' header", lineno);
    Coloring c{*n, {}, {}};
    c.vertex_labels = collect(vertex, "label", g, 0, lineno);
    c.edge_labels = collect(edge, "label", g, g.num_vertices(), lineno);
    return c;
}

void write_realization(std::ostream& out, const Graph& g, const PackingRealization& pr) {
    out << "realization " << pr.n.value() << '\n';
    const std::size_t nv = g.num_vertices();
    for (std::size_t v = 0; v < nv; ++v) out << "v " << v << ' ' << pr.iota[v] << '\n';
    for (std::size_t k = 0; k < g.num_edges(); ++k)
        out << "e " << g.edges()[k].first << ' ' << g.edges()[k].second << ' '
            << pr.iota[nv + k] << '\n';
    if (const auto& table = pr.lambda.table())
        for (std::size_t p = 1; p < table->size(); ++p)
            if ((*table)[p] != p) out << "lambda " << p << ' ' << to_hex((*table)[p]) << '\n';
}

PackingRealization parse_realization(std::istream& in, const Graph& g) {
    std::string line;
    int lineno = 0;
    std::optional<Dimension> n;
    std::vector<std::optional<Point>> place(g.num_elements());
    std::vector<std::uint32_t> table;
    std::vector<bool> overridden;
    bool any_lambda = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto words = detail::split_words(line);
        if (detail::skippable(words)) continue;
        if (!n) {
            if (words.size() != 2 || words[0] != "realization")
                throw InputError("expected header 'realization <n>'", lineno);
            n = Dimension(parse_dimension(words[1], lineno));
            table.resize(static_cast<std::size_t>(n->universe()) + 1);
            for (std::size_t p = 0; p < table.size(); ++p) table[p] = static_cast<std::uint32_t>(p);
            overridden.assign(table.size(), false);
            continue;
        }
        auto point = [&](std::string_view word) {
            const auto p = detail::to_index(word, lineno);
            if (p == 0 || p > n->universe())
                throw InputError("point " + std::string(word) + " outside 1.." +
                                     std::to_string(n->universe()),
                                 lineno);
            return static_cast<Point>(p);
        };
        if (words[0] == "v" && words.size() == 3) {
            const auto v = detail::to_index(words[1], lineno);
            if (v >= g.num_vertices()) throw InputError("vertex index out of range", lineno);
            fill_once(place, v, point(words[2]), vertex_name(static_cast<Vertex>(v)), lineno);
        } else if (words[0] == "e" && words.size() == 4) {
            const auto k = edge_index(g, detail::to_index(words[1], lineno),
                                      detail::to_index(words[2], lineno), lineno);
            fill_once(place, g.num_vertices() + k, point(words[3]), edge_name(g.edges()[k]),
                      lineno);
        } else if (words[0] == "lambda" && words.size() == 3) {
            const Point p = point(words[1]);
            const auto value = parse_hex(words[2], lineno);
            if (value > n->universe())
                throw InputError("lambda value " + std::string(words[2]) + " too wide", lineno);
            if (overridden[p]) throw InputError("lambda of point " + std::to_string(p) +
                                                    " listed twice", lineno);
            overridden[p] = true;
            table[p] = value;
            any_lambda = true;
        } else {
            throw InputError("expected 'v <id> <point>', 'e <u> <v> <point>' or "
                             "'lambda <point> <hex>'",
                             lineno);
        }
    }
    if (!n) throw InputError("missing 'realization' header", lineno);
    PackingRealization pr{*n, collect(place, "point", g, 0, lineno), Labeling::identity()};
    if (any_lambda) pr.lambda = Labeling(std::move(table));
    return pr;
}

}  // namespace ssc
