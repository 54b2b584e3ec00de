#pragma once

// The Steiner triple system S(2,3,2^n-1) in the projective model PG(n-1,2):
// points are the nonzero integers below 2^n read as F_2^n coordinates, and
// the blocks are the triples {p, q, p^q}.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssc/gf2.hpp"
#include "ssc/graph.hpp"

namespace ssc {

using Point = std::uint32_t;
using Block = std::array<Point, 3>;

struct TripleSystem {
    Dimension n{1};
    std::uint32_t num_points = 0;
    /// Each block ascending; the list is in lexicographic order.
    std::vector<Block> blocks;
};

/// The third point of the unique block through p and q.
Point third_point(Point p, Point q, Dimension n);

/// (2^n-1)(2^n-2)/6
std::uint64_t expected_block_count(Dimension n);

/// Serial reference. n = 1 gives the degenerate one-point system.
TripleSystem generate_sts(Dimension n);
/// Same output as generate_sts, rows filled by OpenMP threads.
TripleSystem generate_sts_parallel(Dimension n);

/// True iff every pair of distinct points in 1..2^n-1 lies in exactly one
/// block and every block holds three distinct in-range points.
bool verify_pair_coverage(const TripleSystem& ts);
bool verify_pair_coverage_parallel(const TripleSystem& ts);

/// O(1) lookup of the block through two points, built from a block list.
/// Independent of the XOR identity: it only trusts the blocks it was given.
class BlockIndex {
public:
    explicit BlockIndex(const TripleSystem& ts);

    /// Third point of the block through p and q, or 0 if none is listed.
    Point third(Point p, Point q) const {
        return table_[static_cast<std::size_t>(p) * stride_ + q];
    }
    std::uint32_t num_points() const noexcept { return num_points_; }

private:
    std::uint32_t num_points_;
    std::size_t stride_;
    std::vector<Point> table_;
};

/// iota[h] is the STS point assigned to hypergraph point h.
struct PackingEmbedding {
    std::vector<Point> iota;
};

/// True iff iota is a bijection onto 1..2^n-1 and every triple of h lands
/// on a block. Throws InputError when h.num_points != 2^n - 1 or the
/// embedding does not cover h.
bool check_packing_embedding(const Hypergraph& h, const PackingEmbedding& emb, Dimension n);

/// Exhaustive backtracking for an embedding of h into S(2,3,2^n-1). Graph
/// vertices are placed first, lowest free point first; edge points follow
/// from block lookups. Throws InputError on a size mismatch.
std::optional<PackingEmbedding> find_packing_embedding(const Hypergraph& h, Dimension n);

void write_sts(std::ostream& out, const TripleSystem& ts);
TripleSystem parse_sts(std::istream& in);

}  // namespace ssc
