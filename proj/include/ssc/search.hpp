#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssc/coloring.hpp"
#include "ssc/graph.hpp"

namespace ssc {

struct SearchConfig {
    /// Count every coloring instead of stopping at the first.
    bool find_all = false;
    /// Pin the first vertex in search order to vector 1. GL(n,2) acts
    /// transitively on nonzero vectors and preserves strong set-colorings,
    /// so the verdict is unchanged; counts shrink by a factor of 2^n - 1.
    bool use_symmetry = false;
    /// Bound on explored nodes (label trials); exceeding it is inconclusive.
    std::optional<std::uint64_t> node_limit;
    /// 1 runs the serial kernel; more splits the root across OpenMP threads.
    int threads = 1;
};

enum class Outcome { colorable, not_colorable_size, not_colorable, inconclusive };

const char* outcome_name(Outcome o);

struct SearchResult {
    Outcome outcome = Outcome::not_colorable;
    /// First coloring in search order when colorable.
    std::optional<Coloring> coloring;
    /// Number of colorings; meaningful with find_all and a decided outcome.
    std::uint64_t count = 0;
    /// Set when count exceeded 2^64 - 1 and was clamped.
    bool count_saturated = false;
    std::uint64_t nodes = 0;

    bool colorable() const noexcept { return outcome == Outcome::colorable; }
};

/// Decides strong set-colorability by backtracking over vertex labels.
/// Vertices are taken by descending degree (ties by index) and edge labels
/// are derived by XOR as soon as both endpoints are labeled. Isolated
/// vertices come last and absorb the leftover labels in any order.
SearchResult solve(const Graph& g, const SearchConfig& cfg = {});

/// Vertex order used by solve.
std::vector<Vertex> search_order(const Graph& g);

/// Test oracle: tries every injective vertex labeling, checking validity
/// only at the leaves. Throws Unsupported above |V|+|E| = 7.
std::optional<Coloring> exhaustive_oracle(const Graph& g);

bool is_connected(const Graph& g);

/// Canonical representatives of every strongly set-colorable graph with
/// |V|+|E| = 2^n - 1, sorted. Throws Unsupported for n > 4.
std::vector<Graph> enumerate_colorable(Dimension n, bool connected_only, int threads = 1);

}  // namespace ssc
