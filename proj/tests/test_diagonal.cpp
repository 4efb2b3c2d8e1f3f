#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <iterator>

#include "sepack/diagonal.hpp"
#include "sepack/error.hpp"
#include "sepack/generators.hpp"
#include "sepack/separability.hpp"
#include "support.hpp"

using namespace sepack;

TEST_CASE("sphere counts") {
    CHECK(diagonal_construction(2, 0).size() == 4);
    CHECK(contact_count(build_contact_graph(diagonal_construction(2, 0))) == 4);
    CHECK(diagonal_construction(2, 1).size() == 20);
    CHECK(diagonal_construction(3, 1).size() == 72);
    CHECK(diagonal_construction(4, 1).size() == 272);
    CHECK(diagonal_cube_count(2, 2) == 1 + 4 + 12);
}

TEST_CASE("saturated spheres have degree d + 1") {
    for (auto [d, depth] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}, {4, 2}}) {
        const auto state = diagonal_construction_state(d, depth);
        const auto report = interior_regularity_check(state);
        CHECK(report.status == Regularity::Regular);
        CHECK(report.expected_degree == d + 1);
        CHECK_FALSE(report.saturated.empty());
        CHECK(std::abs(min_pairwise_distance(state.packing) - 2.0) < 1e-9);
    }
}

TEST_CASE("depth 0 has no saturated spheres") {
    CHECK(interior_regularity_check(diagonal_construction_state(3, 0)).status == Regularity::Inconclusive);
}

TEST_CASE("the planar construction is totally separable and looks like K6") {
    const auto state = diagonal_construction_state(2, 3);
    CHECK(certify_total_separability(state.packing).status == SeparabilityStatus::WindowCertified);
    const auto sat = interior_regularity_check(state);
    const Packing k6 = generate_named("K6", Window::cube(2, 12, 6));
    std::vector<std::size_t> deep;
    const Packing inner = state.packing.with_window({state.packing.window().lower, state.packing.window().upper, 7});
    const auto interior = interior_indices(inner);
    std::set_intersection(sat.saturated.begin(), sat.saturated.end(), interior.begin(), interior.end(),
                          std::back_inserter(deep));
    REQUIRE_FALSE(deep.empty());
    CHECK(same_local_structure(local_fingerprint(state.packing, 6, deep), local_fingerprint(k6, 6)));
    CHECK_FALSE(same_local_structure(local_fingerprint(state.packing, 6, deep),
                                     local_fingerprint(generate_named("P1", Window::cube(2, 12, 6)), 6)));
}

TEST_CASE("in three dimensions sibling cubes cut the diagonal tangent planes") {
    // Root vertex (1,1,1) touches the child vertex c(1,1,1) with
    // c = 1 + 2/sqrt 3. The tangent plane u.x = (1 + c) sqrt(3) / 2 passes
    // within 1/3 of the sibling vertex (c + 2, c, -c).
    const double c = 1.0 + 2.0 / std::sqrt(3.0);
    const double offset = (1.0 + c) * std::sqrt(3.0) / 2.0;
    const double gap = std::abs((c + 2.0) / std::sqrt(3.0) - offset);
    CHECK(gap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const Packing p = diagonal_construction(3, 1);
    const auto report = certify_total_separability(p);
    CHECK(report.status == SeparabilityStatus::ViolationFound);
    CHECK(report.clean_edges == testing::brute_clean_edges(p));
    CHECK(report.total_edges == 116);
}

TEST_CASE("budget and domain errors") {
    try {
        diagonal_construction(4, 6, DiagonalOptions{1000});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
    CHECK_THROWS_AS(diagonal_construction(1, 1), Error);
}
