#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ssc/gf2.hpp"
#include "ssc/graph.hpp"
#include "ssc/steiner.hpp"

namespace ssc {

/// A claimed strong set-coloring. edge_labels[k] belongs to the edge of rank k.
struct Coloring {
    Dimension n{1};
    std::vector<ColorVector> vertex_labels;
    std::vector<ColorVector> edge_labels;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class RejectReason { none, size, duplicate_label, edge_rule };

struct Verdict {
    RejectReason reason = RejectReason::none;
    std::string detail;

    bool accepted() const noexcept { return reason == RejectReason::none; }
};

/// Checks, in order: |V|+|E| = 2^n-1; labels pairwise distinct (scanning
/// vertices ascending, then edges by rank); f(uv) = f(u) + f(v) for every
/// edge by rank. Reports the first failure with its witness. Throws
/// InputError when c is not total on g or a label has the wrong dimension.
Verdict verify_coloring(const Graph& g, const Coloring& c);
/// Same verdict and witness, computed with OpenMP.
Verdict verify_coloring_parallel(const Graph& g, const Coloring& c);

/// Lambda of a realization: identity unless overridden per point.
class Labeling {
public:
    Labeling() = default;
    static Labeling identity() { return {}; }
    /// table[p] is the label of point p; entry 0 is unused.
    explicit Labeling(std::vector<std::uint32_t> table) : table_(std::move(table)) {}

    std::uint32_t operator()(Point p) const { return table_ ? (*table_)[p] : p; }
    bool is_identity() const noexcept { return !table_.has_value(); }
    const std::optional<std::vector<std::uint32_t>>& table() const noexcept { return table_; }

private:
    std::optional<std::vector<std::uint32_t>> table_;
};

/// iota maps hypergraph points (vertices, then edges by rank) to STS points.
struct PackingRealization {
    Dimension n{1};
    std::vector<Point> iota;
    Labeling lambda;
};

enum class FailureClass {
    not_power_of_two,   // F1
    zero_label,         // F2
    inconsistent_edge,  // F3
    duplicate_label,    // F4
};

/// "F1" .. "F4"
std::string failure_code(FailureClass kind);

struct ColoringFailure {
    FailureClass kind;
    std::string element;
    std::string detail;
};

using ColorResult = std::variant<Coloring, ColoringFailure>;

/// Builds f(z) = support of lambda(iota(z)) in one pass over V and E, then
/// checks every edge. F4 is the duplicate-label check run after the edge
/// pass, since injectivity of iota and lambda is otherwise assumed.
/// Throws InputError when the realization does not fit g.
ColorResult color_from_packing(const Graph& g, const PackingRealization& pr);

/// The star K_{1,L} with L = 2^(n-1) - 1 and its realization: the center
/// sits on point 1, leaf i on point 2i and its edge on point 2i+1.
std::pair<Graph, PackingRealization> make_star_realization(Dimension n);

std::string vertex_name(Vertex v);
std::string edge_name(const Edge& e);
/// Vertices 0..|V|-1, then edges by rank.
std::string element_name(const Graph& g, std::size_t element);

void write_coloring(std::ostream& out, const Graph& g, const Coloring& c);
/// Requires exactly one label per vertex and per edge of g.
Coloring parse_coloring(std::istream& in, const Graph& g);

void write_realization(std::ostream& out, const Graph& g, const PackingRealization& pr);
/// Missing lambda lines fall back to the identity point by point.
PackingRealization parse_realization(std::istream& in, const Graph& g);

}  // namespace ssc
