#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sepack/error.hpp"
#include "sepack/generators.hpp"
#include "sepack/separability.hpp"
#include "support.hpp"

using namespace sepack;
using testing::make;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST_CASE("tangent hyperplanes") {
    const auto h = tangent_hyperplane(make({{0, 0}, {2, 0}}), {0, 1});
    CHECK(h.normal[0] == doctest::Approx(1.0));
    CHECK(h.normal[1] == doctest::Approx(0.0));
    CHECK(h.offset == doctest::Approx(1.0));

    const auto slanted = tangent_hyperplane(make({{0, 0}, {1, kS3}}), {0, 1});
    CHECK(slanted.normal[0] == doctest::Approx(0.5));
    CHECK(slanted.normal[1] == doctest::Approx(kS3 / 2));
    CHECK(slanted.offset == doctest::Approx(1.0));

    const auto z = tangent_hyperplane(make({{0, 0, 0}, {0, 0, 2}}), {0, 1});
    CHECK(z.normal[2] == doctest::Approx(1.0));
    CHECK(z.offset == doctest::Approx(1.0));

    try {
        tangent_hyperplane(make({{0, 0}, {3, 0}}), {0, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAContact);
    }
}

TEST_CASE("plane_hits_interior") {
    const Packing tri = make({{0, 0}, {2, 0}, {1, kS3}});
    TangentContact x1{{0, 1}, {1, 0}, 1.0};
    const auto hit = plane_hits_interior(x1, tri);
    REQUIRE(hit);
    CHECK(tri.center(*hit)[1] == doctest::Approx(kS3));

    TangentContact x3{{0, 1}, {1, 0}, 3.0};
    CHECK_FALSE(plane_hits_interior(x3, tri));

    const Packing cubic = generate_named("J1", Window::cube(3, 6));
    TangentContact z1{{0, 1}, {0, 0, 1}, 1.0};
    CHECK_FALSE(plane_hits_interior(z1, cubic));
}

TEST_CASE("separability measure on hand-checked configurations") {
    const auto grid = separability_measure(make({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    CHECK(grid.sep_equals(1, 1));
    CHECK(grid.status == SeparabilityStatus::WindowCertified);

    const auto tri = separability_measure(make({{0, 0}, {2, 0}, {1, kS3}}));
    CHECK(tri.sep_equals(0, 1));
    CHECK(tri.status == SeparabilityStatus::ViolationFound);
    CHECK(tri.violations.size() == 3);

    const auto mixed = separability_measure(make({{0, 0}, {2, 0}, {4, 0}, {1, kS3}}));
    CHECK(mixed.sep_equals(1, 4));
    CHECK(mixed.sep() == doctest::Approx(0.25));

    const auto lone = separability_measure(make({{0, 0}}));
    CHECK(lone.status == SeparabilityStatus::NoEdges);
}

TEST_CASE("full audit lists every offending sphere") {
    // The x = 1 line of the (0,0)-(2,0) contact cuts both raised circles.
    const Packing p = make({{0, 0}, {2, 0}, {1, kS3}, {1, -kS3}});
    const auto brief = separability_measure(p);
    const auto full = separability_measure(p, {}, SeparabilityOptions{true});
    CHECK(brief.clean_edges == full.clean_edges);
    CHECK(full.violations.size() > brief.violations.size());
    for (const auto& v : brief.violations) {
        CHECK(std::find(full.violations.begin(), full.violations.end(), v) != full.violations.end());
    }
}

TEST_CASE("batched measure agrees with the single-plane route and brute force") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    for (int trial = 0; trial < 60; ++trial) {
        const auto base = testing::lattice_patch(rng, trial % 3 == 0, 7, 0.55 + 0.05 * (trial % 5));
        if (base.size() < 2) continue;
        const Packing p = make(testing::moved(base, angle(rng), 3.0, -7.0));
        const auto g = build_contact_graph(p);
        const auto report = separability_measure(p, g);
        std::size_t clean = 0;
        for (const Edge& e : g.edges()) {
            if (!plane_hits_interior(tangent_hyperplane(p, e), p)) ++clean;
        }
        CHECK(report.clean_edges == clean);
        CHECK(report.clean_edges == testing::brute_clean_edges(p));
        CHECK(report.total_edges == g.edges().size());
        // A triangle always leaves a witness.
        if (contains_triangle(g)) CHECK(report.status == SeparabilityStatus::ViolationFound);
    }
}

TEST_CASE("catalog windows certify, the triangular lattice does not") {
    CHECK(certify_total_separability(generate_named("K9", Window::cube(2, 12))).status ==
          SeparabilityStatus::WindowCertified);
    CHECK(certify_total_separability(generate_named("J16", Window::cube(3, 8))).status ==
          SeparabilityStatus::WindowCertified);
    CHECK(certify_total_separability(generate_triangular(Window::cube(2, 8))).status ==
          SeparabilityStatus::ViolationFound);
}

TEST_CASE("sep_measure_sequence") {
    const auto p1 = sep_measure_sequence(named_family("P1"), {6, 10, 14});
    CHECK(p1.values() == std::vector<double>{1, 1, 1});
    CHECK(p1.stable);
    const auto tri = sep_measure_sequence(named_family("triangular"), {6, 10, 14});
    CHECK(tri.values() == std::vector<double>{0, 0, 0});

    // Clean tail edges dominate the one clean and three dirty mixed contacts.
    const auto tail = sep_measure_sequence(named_family("mixed-tail"), {10, 40, 160, 640});
    const auto v = tail.values();
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
    CHECK(v.back() > 0.98);
    CHECK(v.back() < 1.0);

    CHECK_THROWS_AS(sep_measure_sequence(named_family("P1"), {6}), Error);
    CHECK_THROWS_AS(sep_measure_sequence(named_family("P1"), {6, 6}), Error);
}
