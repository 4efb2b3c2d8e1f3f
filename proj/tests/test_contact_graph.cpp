#include <doctest.h>

#include <random>

#include "sepack/contact_graph.hpp"
#include "sepack/error.hpp"
#include "sepack/generators.hpp"
#include "support.hpp"

using namespace sepack;
using testing::make;

TEST_CASE("contact graphs of small configurations") {
    CHECK(contact_count(build_contact_graph(make({{0, 0}, {2, 0}, {0, 2}, {2, 2}}))) == 4);
    std::vector<std::vector<double>> grid;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) grid.push_back({2.0 * a, 2.0 * b});
    CHECK(contact_count(build_contact_graph(make(grid))) == 12);
    CHECK(contact_count(build_contact_graph(make({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}}))) == 3);
    CHECK(contact_count(build_contact_graph(Packing(2, {}, Window::cube(2, 1)))) == 0);
}

TEST_CASE("overlapping packings are rejected") {
    try {
        build_contact_graph(make({{0, 0}, {1.5, 0}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
    }
}

TEST_CASE("contact graph matches brute force under random isometries") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    std::uniform_real_distribution<double> shift(-50, 50);
    for (int trial = 0; trial < 60; ++trial) {
        const auto base = testing::lattice_patch(rng, trial % 2 == 1, 8, 0.6);
        if (base.size() < 2) continue;
        const Packing p0 = make(base);
        const Packing p = make(testing::moved(base, angle(rng), shift(rng), shift(rng)));
        const auto g = build_contact_graph(p);
        const auto expected = testing::brute_edges(p);
        CHECK(std::set<Edge>(g.edges().begin(), g.edges().end()) == expected);
        CHECK(contact_count(g) == contact_count(build_contact_graph(p0)));
        CHECK(contains_triangle(g).has_value() == testing::brute_has_triangle(expected, p.size()));
        for (std::size_t v = 0; v < p.size(); ++v) {
            for (std::size_t u : g.neighbors(v)) CHECK(g.has_edge(u, v));
        }
    }
}

TEST_CASE("contacts across cell boundaries at the tolerance edge") {
    // Distance 2 + 5e-10 with both centres just past a cell boundary.
    const Packing p = make({{-1e-12, 0}, {2.0 + 5e-10 - 1e-12, 0}});
    CHECK(contact_count(build_contact_graph(p)) == 1);
}

TEST_CASE("regularity verdicts") {
    const Packing p1 = generate_named("P1", Window::cube(2, 12));
    const auto g1 = build_contact_graph(p1);
    CHECK(is_k_regular(g1, p1, 4).status == Regularity::Regular);
    const auto bad = is_k_regular(g1, p1, 3);
    CHECK(bad.status == Regularity::Irregular);
    CHECK(bad.offending_vertex.has_value());
    CHECK(bad.offending_degree == 4);

    const Packing k6 = generate_named("K6", Window::cube(2, 12));
    CHECK(is_k_regular(build_contact_graph(k6), k6, 3).regular());

    const Packing tiny = make({{0, 0}, {2, 0}}, 3.0);
    CHECK(is_k_regular(build_contact_graph(tiny), tiny, 1).status == Regularity::Inconclusive);
}

TEST_CASE("triangle detection") {
    const auto tri = contains_triangle(build_contact_graph(make({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}})));
    REQUIRE(tri);
    CHECK((*tri == std::array<std::size_t, 3>{0, 1, 2}));
    CHECK_FALSE(contains_triangle(build_contact_graph(generate_named("P1", Window::cube(2, 8)))));
    CHECK(contains_triangle(build_contact_graph(generate_triangular(Window::cube(2, 8)))));
}
