#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "ssc/coloring.hpp"
#include "ssc/search.hpp"

#include <random>

using namespace ssc;
using namespace ssc::testing;

namespace {

Coloring make_coloring(unsigned n, std::vector<std::uint32_t> vertices, std::vector<std::uint32_t> edges) {
    const Dimension d(n);
    Coloring c{d, {}, {}};
    for (auto b : vertices) c.vertex_labels.emplace_back(b, d);
    for (auto b : edges) c.edge_labels.emplace_back(b, d);
    return c;
}

FailureClass failure_of(const ColorResult& r) {
    REQUIRE(std::holds_alternative<ColoringFailure>(r));
    return std::get<ColoringFailure>(r).kind;
}

// A realization of g whose labels come from a known coloring c, pushed
// through a random linear bijection: iota = M f, lambda = M^-1.
PackingRealization scrambled_realization(std::mt19937& rng, const Graph& g, const Coloring& c) {
    const unsigned n = c.n.value();
    auto m = random_invertible(rng, n);
    std::vector<std::uint32_t> inverse((1u << n), 0);
    for (std::uint32_t x = 1; x < (1u << n); ++x) inverse[apply_linear(m, x)] = x;
    PackingRealization pr{c.n, {}, Labeling(inverse)};
    for (const auto& v : c.vertex_labels) pr.iota.push_back(apply_linear(m, v.bits()));
    for (const auto& e : c.edge_labels) pr.iota.push_back(apply_linear(m, e.bits()));
    (void)g;
    return pr;
}

}  // namespace

TEST_CASE("verify_coloring examples") {
    const Graph k2(2, {{0, 1}});
    CHECK(verify_coloring(k2, make_coloring(2, {0b01, 0b10}, {0b11})).accepted());

    auto dup = verify_coloring(k2, make_coloring(2, {0b01, 0b10}, {0b01}));
    CHECK(dup.reason == RejectReason::duplicate_label);
    CHECK(dup.detail == "duplicate label 1 on edge 0-1, already on vertex 0");

    const Graph p3 = path(3);
    auto size = verify_coloring(p3, make_coloring(3, {1, 2, 4}, {3, 6}));
    CHECK(size.reason == RejectReason::size);
}

TEST_CASE("verify_coloring reports the edge rule and input errors") {
    const Graph k2(2, {{0, 1}});
    CHECK(verify_coloring(k2, make_coloring(2, {0b01, 0b11}, {0b10})).accepted());
    // Distinct labels, but the edge rule fails on the second edge.
    const Graph s(4, {{0, 1}, {0, 2}, {0, 3}});
    auto wrong = verify_coloring(s, make_coloring(3, {1, 2, 4, 6}, {3, 7, 5}));
    CHECK(wrong.reason == RejectReason::edge_rule);
    CHECK(wrong.detail == "edge 0-2 has label 7 but its endpoints give 5");

    CHECK_THROWS_AS(verify_coloring(k2, make_coloring(2, {1, 2}, {})), InputError);
    auto mixed = make_coloring(2, {1, 2}, {3});
    mixed.vertex_labels[0] = ColorVector(1, Dimension(3));
    CHECK_THROWS_AS(verify_coloring(k2, mixed), InputError);
}

TEST_CASE("verify_coloring agrees with the subset-level checker for n <= 4") {
    std::mt19937 rng(5);
    for (std::size_t total : {3u, 7u}) {
        for (const auto& g : all_graphs_with_elements(total)) {
            const Dimension n = *Dimension::for_universe(total);
            // A random labeling, and a solved one when it exists.
            std::vector<Coloring> trials;
            if (auto c = solve(g).coloring) trials.push_back(*c);
            std::uniform_int_distribution<std::uint32_t> pick(1, n.universe());
            for (int t = 0; t < 5; ++t) {
                Coloring c{n, {}, {}};
                for (std::size_t v = 0; v < g.num_vertices(); ++v) c.vertex_labels.emplace_back(pick(rng), n);
                for (std::size_t e = 0; e < g.num_edges(); ++e) c.edge_labels.emplace_back(pick(rng), n);
                trials.push_back(c);
            }
            for (const auto& c : trials) {
                REQUIRE(verify_coloring(g, c).accepted() == brute_force_accepts(g, c));
                REQUIRE(verify_coloring_parallel(g, c).reason == verify_coloring(g, c).reason);
                REQUIRE(verify_coloring_parallel(g, c).detail == verify_coloring(g, c).detail);
            }
        }
    }
    // n = 4: solved certificates of random size-15 graphs and single-label corruptions.
    int checked = 0;
    while (checked < 40) {
        auto g = random_graph(rng, 5 + rng() % 6, 0.3);
        if (g.num_elements() != 15) continue;
        auto r = solve(g, {.use_symmetry = true});
        if (!r.coloring) continue;
        ++checked;
        CHECK(brute_force_accepts(g, *r.coloring));
        auto c = *r.coloring;
        std::uniform_int_distribution<std::uint32_t> pick(1, 15);
        c.vertex_labels[rng() % c.vertex_labels.size()] = ColorVector(pick(rng), c.n);
        CHECK(verify_coloring(g, c).accepted() == brute_force_accepts(g, c));
        CHECK(verify_coloring_parallel(g, c).detail == verify_coloring(g, c).detail);
    }
}

TEST_CASE("color_from_packing examples") {
    const Graph k2(2, {{0, 1}});
    auto ok = color_from_packing(k2, {Dimension(2), {1, 2, 3}, Labeling::identity()});
    REQUIRE(std::holds_alternative<Coloring>(ok));
    CHECK(std::get<Coloring>(ok) == make_coloring(2, {0b01, 0b10}, {0b11}));

    CHECK(failure_of(color_from_packing(path(3), {Dimension(3), {1, 2, 4, 3, 6}, {}})) ==
          FailureClass::not_power_of_two);

    auto f3 = color_from_packing(k2, {Dimension(2), {1, 2, 2}, Labeling::identity()});
    CHECK(failure_of(f3) == FailureClass::inconsistent_edge);
    CHECK(std::get<ColoringFailure>(f3).element == "edge 0-1");
}

TEST_CASE("color_from_packing zero and duplicate labels") {
    const Graph k2(2, {{0, 1}});
    // lambda sends point 2 to zero
    auto f2 = color_from_packing(k2, {Dimension(2), {1, 2, 3}, Labeling({0, 1, 0, 3})});
    CHECK(failure_of(f2) == FailureClass::zero_label);
    CHECK(std::get<ColoringFailure>(f2).element == "vertex 1");

    // Non-injective lambda on an edgeless graph passes every edge check.
    const Graph e3(3, {});
    auto f4 = color_from_packing(e3, {Dimension(2), {1, 2, 3}, Labeling({0, 1, 1, 3})});
    CHECK(failure_of(f4) == FailureClass::duplicate_label);
    CHECK(std::get<ColoringFailure>(f4).element == "vertex 1");

    auto f4b = color_from_packing(e3, {Dimension(2), {1, 1, 3}, Labeling::identity()});
    CHECK(failure_of(f4b) == FailureClass::duplicate_label);
}

TEST_CASE("color_from_packing input errors") {
    const Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(color_from_packing(k2, {Dimension(3), {1, 2, 3}, {}}), InputError);
    CHECK_THROWS_AS(color_from_packing(k2, {Dimension(2), {1, 2}, {}}), InputError);
    CHECK_THROWS_AS(color_from_packing(k2, {Dimension(2), {1, 2, 4}, {}}), InputError);
    CHECK_THROWS_AS(color_from_packing(k2, {Dimension(2), {1, 2, 3}, Labeling({0, 1, 2})}), InputError);
    CHECK_THROWS_AS(color_from_packing(k2, {Dimension(2), {1, 2, 3}, Labeling({0, 1, 2, 4})}), InputError);
}

TEST_CASE("make_star_realization") {
    auto [k2, pr2] = make_star_realization(Dimension(2));
    CHECK(k2 == Graph(2, {{0, 1}}));
    CHECK(pr2.iota == std::vector<Point>{1, 2, 3});

    auto [s3, pr3] = make_star_realization(Dimension(3));
    CHECK(s3 == star(3));
    auto c3 = color_from_packing(s3, pr3);
    REQUIRE(std::holds_alternative<Coloring>(c3));
    CHECK(std::get<Coloring>(c3) == make_coloring(3, {0b001, 0b010, 0b100, 0b110}, {0b011, 0b101, 0b111}));
    CHECK(brute_force_accepts(s3, std::get<Coloring>(c3)));

    for (unsigned n : {5u, 12u, 20u}) {
        auto [g, pr] = make_star_realization(Dimension(n));
        CHECK(g.num_elements() == Dimension(n).universe());
        auto c = color_from_packing(g, pr);
        REQUIRE(std::holds_alternative<Coloring>(c));
        CHECK(verify_coloring(g, std::get<Coloring>(c)).accepted());
        CHECK(verify_coloring_parallel(g, std::get<Coloring>(c)).accepted());
    }
    CHECK(make_star_realization(Dimension(20)).first.num_vertices() == 524288);
    CHECK_THROWS_AS(make_star_realization(Dimension(1)), InputError);
}

TEST_CASE("Algorithm soundness over random linear realizations, n = 2 and 3") {
    std::mt19937 rng(19);
    for (std::size_t total : {3u, 7u})
        for (const auto& g : all_graphs_with_elements(total)) {
            auto solved = solve(g);
            if (!solved.coloring) continue;
            for (int t = 0; t < 4; ++t) {
                auto pr = scrambled_realization(rng, g, *solved.coloring);
                auto out = color_from_packing(g, pr);
                REQUIRE(std::holds_alternative<Coloring>(out));
                REQUIRE(verify_coloring(g, std::get<Coloring>(out)).accepted());
                REQUIRE(brute_force_accepts(g, std::get<Coloring>(out)));
            }
        }
}

TEST_CASE("every single-point lambda corruption is detected") {
    for (unsigned n : {2u, 3u, 4u}) {
        auto [g, pr] = make_star_realization(Dimension(n));
        const auto top = Dimension(n).universe();
        for (Point p = 1; p <= top; ++p)
            for (std::uint32_t value = 0; value <= top; ++value) {
                if (value == p) continue;
                std::vector<std::uint32_t> table(top + 1);
                for (std::uint32_t x = 0; x <= top; ++x) table[x] = x;
                table[p] = value;
                auto bad = pr;
                bad.lambda = Labeling(table);
                auto kind = failure_of(color_from_packing(g, bad));
                CHECK((kind == FailureClass::zero_label || kind == FailureClass::inconsistent_edge ||
                       kind == FailureClass::duplicate_label));
                if (value == 0) CHECK(kind == FailureClass::zero_label);
            }
    }
}

TEST_CASE("failure codes") {
    CHECK(failure_code(FailureClass::not_power_of_two) == "F1");
    CHECK(failure_code(FailureClass::zero_label) == "F2");
    CHECK(failure_code(FailureClass::inconsistent_edge) == "F3");
    CHECK(failure_code(FailureClass::duplicate_label) == "F4");
}
