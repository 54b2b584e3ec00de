#include "ssc/steiner.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "text.hpp"

namespace ssc {

Point third_point(Point p, Point q, Dimension n) {
    if (p == 0 || q == 0) throw InputError("zero is not a point of the projective system");
    if (p > n.universe() || q > n.universe())
        throw InputError("point outside 1.." + std::to_string(n.universe()));
    if (p == q) throw InputError("third_point needs two distinct points");
    return p ^ q;
}

std::uint64_t expected_block_count(Dimension n) {
    const std::uint64_t v = n.universe();
    return v * (v - 1) / 6;
}

TripleSystem generate_sts(Dimension n) {
    TripleSystem ts{n, n.universe(), {}};
    ts.blocks.reserve(expected_block_count(n));
    const Point top = ts.num_points;
    for (Point p = 1; p <= top; ++p)
        for (Point q = p + 1; q <= top; ++q)
            if (const Point r = p ^ q; q < r) ts.blocks.push_back({p, q, r});
    return ts;
}

TripleSystem generate_sts_parallel(Dimension n) {
    TripleSystem ts{n, n.universe(), {}};
    const Point top = ts.num_points;
    // Row p holds the blocks whose smallest point is p; count rows first so
    // each thread writes a disjoint slice.
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(top) + 2, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t p = 1; p <= top; ++p) {
        std::uint64_t count = 0;
        for (Point q = static_cast<Point>(p) + 1; q <= top; ++q)
            if (q < (static_cast<Point>(p) ^ q)) ++count;
        offset[static_cast<std::size_t>(p) + 1] = count;
    }
    for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
    ts.blocks.resize(offset.back());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t p = 1; p <= top; ++p) {
        auto out = offset[static_cast<std::size_t>(p)];
        const auto pp = static_cast<Point>(p);
        for (Point q = pp + 1; q <= top; ++q)
            if (const Point r = pp ^ q; q < r) ts.blocks[out++] = {pp, q, r};
    }
    return ts;
}

namespace {

bool block_well_formed(const Block& b, Point top) {
    for (Point x : b)
        if (x == 0 || x > top) return false;
    return b[0] != b[1] && b[0] != b[2] && b[1] != b[2];
}

std::size_t pair_slot(Point a, Point b, std::size_t stride) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * stride + b;
}

}  // namespace

bool verify_pair_coverage(const TripleSystem& ts) {
    const Point top = ts.num_points;
    const std::size_t stride = static_cast<std::size_t>(top) + 1;
    std::vector<std::uint8_t> seen(stride * stride, 0);
    for (const Block& b : ts.blocks) {
        if (!block_well_formed(b, top)) return false;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            auto& slot = seen[pair_slot(b[i], b[j], stride)];
            if (slot != 0) return false;
            slot = 1;
        }
    }
    for (Point a = 1; a <= top; ++a)
        for (Point b = a + 1; b <= top; ++b)
            if (seen[pair_slot(a, b, stride)] == 0) return false;
    return true;
}

bool verify_pair_coverage_parallel(const TripleSystem& ts) {
    const Point top = ts.num_points;
    const std::size_t stride = static_cast<std::size_t>(top) + 1;
    std::vector<std::uint8_t> seen(stride * stride, 0);
    const auto num_blocks = static_cast<std::int64_t>(ts.blocks.size());
    bool ok = true;
#pragma omp parallel for reduction(&& : ok)
    for (std::int64_t i = 0; i < num_blocks; ++i) {
        const Block& b = ts.blocks[static_cast<std::size_t>(i)];
        if (!block_well_formed(b, top)) {
            ok = false;
            continue;
        }
        for (auto [x, y] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            std::uint8_t before;
            auto& slot = seen[pair_slot(b[x], b[y], stride)];
#pragma omp atomic capture
            before = slot++;
            if (before != 0) ok = false;
        }
    }
    if (!ok) return false;
#pragma omp parallel for reduction(&& : ok) schedule(dynamic, 64)
    for (std::int64_t a = 1; a <= top; ++a)
        for (Point b = static_cast<Point>(a) + 1; b <= top; ++b)
            if (seen[pair_slot(static_cast<Point>(a), b, stride)] == 0) ok = false;
    return ok;
}

BlockIndex::BlockIndex(const TripleSystem& ts)
    : num_points_(ts.num_points), stride_(static_cast<std::size_t>(ts.num_points) + 1) {
    if (ts.n.value() > 12) throw Unsupported("BlockIndex is limited to n <= 12");
    table_.assign(stride_ * stride_, 0);
    for (const Block& b : ts.blocks) {
        if (!block_well_formed(b, num_points_)) throw InputError("malformed block in triple system");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) table_[b[i] * stride_ + b[j]] = b[3 - i - j];
    }
}

bool check_packing_embedding(const Hypergraph& h, const PackingEmbedding& emb, Dimension n) {
    if (h.num_points != n.universe())
        throw InputError("hypergraph has " + std::to_string(h.num_points) + " points, expected " +
                         std::to_string(n.universe()));
    if (emb.iota.size() != h.num_points)
        throw InputError("embedding covers " + std::to_string(emb.iota.size()) + " of " +
                         std::to_string(h.num_points) + " points");
    std::vector<bool> hit(static_cast<std::size_t>(n.universe()) + 1, false);
    for (Point p : emb.iota) {
        if (p == 0 || p > n.universe() || hit[p]) return false;
        hit[p] = true;
    }
    return std::all_of(h.triples.begin(), h.triples.end(), [&](const auto& t) {
        return (emb.iota[t[0]] ^ emb.iota[t[1]] ^ emb.iota[t[2]]) == 0;
    });
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Hypergraph& h, const BlockIndex& blocks)
        : h_(h), blocks_(blocks), iota_(h.num_points, 0),
          used_(static_cast<std::size_t>(blocks.num_points()) + 1, false),
          earlier_(h.num_vertices) {
        // Triples closed when their later vertex is placed.
        for (const auto& t : h.triples) earlier_[std::max(t[0], t[1])].push_back(t);
    }

    bool run() { return place(0); }
    PackingEmbedding result() const { return {iota_}; }

private:
    bool place(std::size_t vertex) {
        if (vertex == h_.num_vertices) return true;
        for (Point p = 1; p <= blocks_.num_points(); ++p) {
            if (used_[p]) continue;
            iota_[vertex] = p;
            used_[p] = true;
            std::size_t closed = 0;
            bool ok = true;
            for (const auto& t : earlier_[vertex]) {
                const Point other = iota_[t[0] == vertex ? t[1] : t[0]];
                const Point edge_point = blocks_.third(p, other);
                if (edge_point == 0 || used_[edge_point]) {
                    ok = false;
                    break;
                }
                iota_[t[2]] = edge_point;
                used_[edge_point] = true;
                ++closed;
            }
            if (ok && place(vertex + 1)) return true;
            for (std::size_t i = 0; i < closed; ++i) used_[iota_[earlier_[vertex][i][2]]] = false;
            used_[p] = false;
        }
        return false;
    }

    const Hypergraph& h_;
    const BlockIndex& blocks_;
    std::vector<Point> iota_;
    std::vector<bool> used_;
    std::vector<std::vector<std::array<std::uint32_t, 3>>> earlier_;
};

}  // namespace

std::optional<PackingEmbedding> find_packing_embedding(const Hypergraph& h, Dimension n) {
    if (h.num_points != n.universe())
        throw InputError("hypergraph has " + std::to_string(h.num_points) + " points, expected " +
                         std::to_string(n.universe()));
    const BlockIndex blocks(generate_sts(n));
    EmbeddingSearch search(h, blocks);
    if (!search.run()) return std::nullopt;
    return search.result();
}

void write_sts(std::ostream& out, const TripleSystem& ts) {
    out << "sts " << ts.n.value() << ' ' << ts.num_points << ' ' << ts.blocks.size() << '\n';
    for (const Block& b : ts.blocks) out << "b " << b[0] << ' ' << b[1] << ' ' << b[2] << '\n';
}

TripleSystem parse_sts(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<TripleSystem> ts;
    std::uint64_t declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto words = detail::split_words(line);
        if (detail::skippable(words)) continue;
        if (!ts) {
            if (words.size() != 4 || words[0] != "sts")
                throw InputError("expected header 'sts <n> <num_points> <num_blocks>'", lineno);
            const auto n = detail::to_index(words[1], lineno);
            if (n < 1 || n > Dimension::kMax) throw InputError("bad dimension", lineno);
            ts = TripleSystem{Dimension(static_cast<unsigned>(n)), 0, {}};
            if (detail::to_index(words[2], lineno) != ts->n.universe())
                throw InputError("point count does not match 2^n - 1", lineno);
            ts->num_points = ts->n.universe();
            declared = detail::to_index(words[3], lineno);
            continue;
        }
        if (words.size() != 4 || words[0] != "b")
            throw InputError("expected block line 'b <p> <q> <r>'", lineno);
        Block b{};
        for (int i = 0; i < 3; ++i) {
            const auto x = detail::to_index(words[static_cast<std::size_t>(i) + 1], lineno);
            if (x == 0 || x > ts->num_points) throw InputError("point out of range", lineno);
            b[static_cast<std::size_t>(i)] = static_cast<Point>(x);
        }
        ts->blocks.push_back(b);
    }
    if (!ts) throw InputError("missing 'sts' header", lineno);
    if (ts->blocks.size() != declared)
        throw InputError("header declares " + std::to_string(declared) + " blocks but found " +
                             std::to_string(ts->blocks.size()),
                         lineno);
    return *ts;
}

}  // namespace ssc
