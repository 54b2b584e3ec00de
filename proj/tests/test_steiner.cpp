#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "ssc/search.hpp"
#include "ssc/steiner.hpp"

#include <sstream>

using namespace ssc;
using namespace ssc::testing;

// Direct enumeration of all triples p < q < r with p ^ q ^ r == 0.
static std::vector<Block> brute_blocks(unsigned n) {
    const Point top = (1u << n) - 1;
    std::vector<Block> out;
    for (Point p = 1; p <= top; ++p)
        for (Point q = p + 1; q <= top; ++q)
            for (Point r = q + 1; r <= top; ++r)
                if ((p ^ q ^ r) == 0) out.push_back({p, q, r});
    return out;
}

TEST_CASE("third_point") {
    const Dimension n(3);
    CHECK(third_point(0b001, 0b010, n) == 0b011);
    CHECK(third_point(0b011, 0b101, n) == 0b110);
    for (Point p = 1; p <= 7; ++p)
        for (Point q = 1; q <= 7; ++q)
            if (p != q) CHECK(third_point(p, third_point(p, q, n), n) == q);
    CHECK_THROWS_AS(third_point(3, 3, n), InputError);
    CHECK_THROWS_AS(third_point(0, 3, n), InputError);
    CHECK_THROWS_AS(third_point(8, 3, n), InputError);
}

TEST_CASE("generate_sts examples") {
    auto s2 = generate_sts(Dimension(2));
    CHECK(s2.num_points == 3);
    CHECK(s2.blocks == std::vector<Block>{{1, 2, 3}});

    auto fano = generate_sts(Dimension(3));
    CHECK(fano.num_points == 7);
    CHECK(fano.blocks.size() == 7);
    CHECK(fano.blocks == brute_blocks(3));

    auto s5 = generate_sts(Dimension(5));
    CHECK(s5.num_points == 31);
    CHECK(s5.blocks.size() == 155);
    CHECK(s5.blocks == brute_blocks(5));

    auto s1 = generate_sts(Dimension(1));
    CHECK(s1.num_points == 1);
    CHECK(s1.blocks.empty());
    CHECK(verify_pair_coverage(s1));
}

TEST_CASE("block count, pair coverage and closure for n = 2..10") {
    for (unsigned d = 2; d <= 10; ++d) {
        const Dimension n(d);
        auto ts = generate_sts(n);
        CHECK(ts.blocks.size() == expected_block_count(n));
        CHECK(verify_pair_coverage(ts));
        CHECK(verify_pair_coverage_parallel(ts));
        CHECK(generate_sts_parallel(n).blocks == ts.blocks);
        CHECK(std::is_sorted(ts.blocks.begin(), ts.blocks.end()));
        for (const Block& b : ts.blocks) {
            REQUIRE(b[0] < b[1]);
            REQUIRE(b[1] < b[2]);
            REQUIRE(third_point(b[0], b[1], n) == b[2]);
        }
    }
}

TEST_CASE("verify_pair_coverage rejects broken systems") {
    auto fano = generate_sts(Dimension(3));
    auto missing = fano;
    missing.blocks.pop_back();
    CHECK_FALSE(verify_pair_coverage(missing));
    CHECK_FALSE(verify_pair_coverage_parallel(missing));

    auto doubled = fano;
    doubled.blocks.push_back(fano.blocks.front());
    CHECK_FALSE(verify_pair_coverage(doubled));
    CHECK_FALSE(verify_pair_coverage_parallel(doubled));

    auto bad = fano;
    bad.blocks[0] = {1, 1, 2};
    CHECK_FALSE(verify_pair_coverage(bad));
    CHECK_FALSE(verify_pair_coverage_parallel(bad));

    auto wide = fano;
    wide.blocks[0] = {1, 2, 9};
    CHECK_FALSE(verify_pair_coverage(wide));
    CHECK_FALSE(verify_pair_coverage_parallel(wide));
}

TEST_CASE("BlockIndex agrees with the block list") {
    auto ts = generate_sts(Dimension(4));
    BlockIndex idx(ts);
    for (const Block& b : ts.blocks) {
        CHECK(idx.third(b[0], b[1]) == b[2]);
        CHECK(idx.third(b[2], b[0]) == b[1]);
        CHECK(idx.third(b[1], b[2]) == b[0]);
    }
    const Block last = ts.blocks.back();
    ts.blocks.pop_back();
    BlockIndex partial(ts);
    CHECK(partial.third(last[1], last[2]) == 0);
    CHECK(partial.third(ts.blocks[0][0], ts.blocks[0][1]) == ts.blocks[0][2]);
}

TEST_CASE("check_packing_embedding examples") {
    auto h = build_hypergraph(Graph(2, {{0, 1}}));
    const Dimension n(2);
    CHECK(check_packing_embedding(h, {{1, 2, 3}}, n));
    CHECK_FALSE(check_packing_embedding(h, {{1, 2, 2}}, n));
    CHECK(check_packing_embedding(h, {{1, 3, 2}}, n));
    CHECK_FALSE(check_packing_embedding(h, {{1, 2, 4}}, n));
    CHECK_THROWS_AS(check_packing_embedding(h, {{1, 2, 3}}, Dimension(3)), InputError);
    CHECK_THROWS_AS(check_packing_embedding(h, {{1, 2}}, n), InputError);

    // Every bijection works for the edgeless graph.
    auto e3 = build_hypergraph(Graph(3, {}));
    CHECK(check_packing_embedding(e3, {{3, 1, 2}}, n));
}

TEST_CASE("find_packing_embedding examples") {
    auto k2 = find_packing_embedding(build_hypergraph(Graph(2, {{0, 1}})), Dimension(2));
    REQUIRE(k2);
    CHECK(k2->iota == std::vector<Point>{1, 2, 3});

    CHECK_FALSE(find_packing_embedding(build_hypergraph(path(4)), Dimension(3)));

    auto e3 = find_packing_embedding(build_hypergraph(Graph(3, {})), Dimension(2));
    REQUIRE(e3);
    CHECK(e3->iota == std::vector<Point>{1, 2, 3});

    CHECK_THROWS_AS(find_packing_embedding(build_hypergraph(path(3)), Dimension(3)), InputError);
}

TEST_CASE("every assignment of the K2 hypergraph is an embedding") {
    auto h = build_hypergraph(Graph(2, {{0, 1}}));
    std::vector<Point> iota{1, 2, 3};
    int ok = 0;
    do {
        ok += check_packing_embedding(h, {iota}, Dimension(2));
    } while (std::next_permutation(iota.begin(), iota.end()));
    // Any bijection of 3 points is a block here, so all 6 pass.
    CHECK(ok == 6);
}

TEST_CASE("found embeddings always pass the checker") {
    for (std::size_t total : {3u, 7u})
        for (const auto& g : all_graphs_with_elements(total)) {
            auto h = build_hypergraph(g);
            const Dimension n = *Dimension::for_universe(total);
            if (auto emb = find_packing_embedding(h, n)) REQUIRE(check_packing_embedding(h, *emb, n));
        }
}

TEST_CASE("STS file round trip and errors") {
    auto ts = generate_sts(Dimension(3));
    std::stringstream buf;
    write_sts(buf, ts);
    CHECK(buf.str().rfind("sts 3 7 7\nb 1 2 3\nb 1 4 5\n", 0) == 0);
    auto back = parse_sts(buf);
    CHECK(back.blocks == ts.blocks);
    CHECK(back.n == ts.n);

    std::istringstream bad_header("sts 3 8 7\n");
    CHECK_THROWS_AS(parse_sts(bad_header), InputError);
    std::istringstream bad_count("sts 2 3 2\nb 1 2 3\n");
    CHECK_THROWS_AS(parse_sts(bad_count), InputError);
    std::istringstream bad_point("sts 2 3 1\nb 1 2 4\n");
    CHECK_THROWS_AS(parse_sts(bad_point), InputError);
}
