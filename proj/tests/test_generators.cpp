#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "sepack/audit.hpp"
#include "sepack/catalog.hpp"
#include "sepack/error.hpp"
#include "sepack/generators.hpp"
#include "support.hpp"

using namespace sepack;

namespace {

std::set<std::vector<double>> rounded(const Packing& p) {
    std::set<std::vector<double>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<double> v;
        for (double x : p.center(i)) v.push_back(std::round(x * 1e6) / 1e6 + 0.0);
        out.insert(v);
    }
    return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("hyperoctahedral group has d! 2^d distinct elements") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto group = hyperoctahedral_group(d);
        CHECK(group.size() == factorial(d) << d);
        std::vector<double> probe(d);
        for (std::size_t a = 0; a < d; ++a) probe[a] = 1.0 + static_cast<double>(a) * 0.37;
        std::set<std::vector<double>> images;
        for (const auto& g : group) images.insert(g.apply(probe));
        CHECK(images.size() == group.size());
    }
}

TEST_CASE("orbit of (1,0) under B2 on 2Z^2 is the square lattice") {
    OrbitSpec spec;
    spec.dimension = 2;
    spec.seed = {1, 0};
    spec.point_group = hyperoctahedral_group(2);
    spec.basis = {{2, 0}, {0, 2}};
    spec.expected_orbit_size = 4;
    const auto gen = orbit_generate(spec, Window::cube(2, 10));
    CHECK(gen.motif_size == 4);
    CHECK(gen.warnings.empty());
    const auto audit = audit_packing(gen.packing, 4);
    CHECK(audit.passes());
    CHECK(audit.regularity.regular());
}

TEST_CASE("a seed on a mirror warns about a short orbit") {
    OrbitSpec spec;
    spec.dimension = 2;
    spec.seed = {1, 0};
    spec.point_group = hyperoctahedral_group(2);
    spec.basis = {{4, 0}, {0, 4}};
    spec.expected_orbit_size = 8;
    const auto gen = orbit_generate(spec, Window::cube(2, 6));
    CHECK(gen.warnings.size() == 1);
}

TEST_CASE("invalid orbit specs") {
    OrbitSpec spec;
    spec.dimension = 2;
    spec.seed = {0, 0};
    spec.point_group = hyperoctahedral_group(2);
    spec.basis = {{2, 0}, {0, 2}};
    CHECK_THROWS_AS(spec.validate(), Error);
    spec.seed = {1, 0};
    spec.basis = {{2, 0}, {4, 0}};
    CHECK_THROWS_AS(spec.validate(), Error);
}

TEST_CASE("J16 orbit equals the explicit motif on a shared window") {
    OrbitSpec spec;
    spec.dimension = 3;
    spec.seed = {0, 1, 2};
    spec.point_group = hyperoctahedral_group(3);
    spec.basis = {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}};
    spec.centering = {{2, 2, 2}};
    const Window w = Window::cube(3, 8);
    const auto orbit = orbit_generate(spec, w);
    CHECK(orbit.motif_size == 24);
    CHECK(rounded(orbit.packing) == rounded(generate_named("J16", w)));
}

TEST_CASE("catalog examples") {
    const Packing p1 = generate_named("P1", Window::cube(2, 12));
    const auto a1 = audit_packing(p1, 4);
    CHECK(a1.passes());
    CHECK(a1.separability.sep_equals(1, 1));

    const auto j16 = audit_packing(generate_named("J16", Window::cube(3, 10)), 4);
    CHECK(j16.passes());
    CHECK_FALSE(j16.triangle);

    const auto o39 = audit_packing(generate_named("O39", Window::cube(4, 8)), 6);
    CHECK(o39.regularity.regular());
}

TEST_CASE("catalog-only and unknown entries") {
    try {
        generate_named("O132", Window::cube(4, 6));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedConstruction);
        CHECK(std::string(e.what()).find("O132") != std::string::npos);
    }
    try {
        generate_named("Q7", Window::cube(2, 6));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownEntry);
        CHECK(std::string(e.what()).find("K6") != std::string::npos);
    }
    CHECK_THROWS_AS(generate_named("K6", Window::cube(3, 6)), Error);
}

TEST_CASE("apeirogon") {
    const Packing line = generate_apeirogon(Window::cube(1, 6));
    REQUIRE(line.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) CHECK(line.center(i)[0] == -6.0 + 2.0 * static_cast<double>(i));
}

TEST_CASE("P1 x apeirogon is a cubic slab") {
    const Packing slab = product_packing(generate_named("P1", Window::cube(2, 6)), generate_apeirogon(Window::cube(1, 6)));
    const Packing cubic = generate_named("J1", Window::cube(3, 6));
    CHECK(rounded(slab) == rounded(cubic));
}

TEST_CASE("product edge count is |E(P)||V(Q)| + |V(P)||E(Q)|") {
    std::mt19937 rng(5);
    const std::vector<std::string> names = {"P1", "P3", "K6", "K9"};
    for (int trial = 0; trial < 12; ++trial) {
        const double lp = 3.0 + static_cast<double>(rng() % 5);
        const double lq = 3.0 + static_cast<double>(rng() % 5);
        const Packing p = generate_named(names[rng() % 4], Window::cube(2, lp));
        const Packing q = trial % 3 == 0 ? generate_apeirogon(Window::cube(1, lq))
                                         : generate_named(names[rng() % 4], Window::cube(2, lq));
        const Packing prod = product_packing(p, q);
        const std::size_t ep = contact_count(build_contact_graph(p));
        const std::size_t eq = contact_count(build_contact_graph(q));
        CHECK(prod.size() == p.size() * q.size());
        CHECK(contact_count(build_contact_graph(prod)) == ep * q.size() + p.size() * eq);
    }
}

TEST_CASE("product requires normalized factors") {
    const Packing loose = testing::make({{0, 0}, {3, 0}});
    CHECK_THROWS_AS(product_packing(loose, generate_apeirogon(Window::cube(1, 4))), Error);
}

TEST_CASE("generated catalog windows are isometry-invariant in contact structure") {
    // Rigid motions must not change contacts, degrees or sep.
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    for (const char* id : {"P3", "K6", "K9"}) {
        const Packing p = generate_named(id, Window::cube(2, 8));
        std::vector<std::vector<double>> pts;
        for (std::size_t i = 0; i < p.size(); ++i) pts.push_back({p.center(i)[0], p.center(i)[1]});
        const Packing q = testing::make(testing::moved(pts, angle(rng), 11.5, -3.25));
        const auto a = audit_packing(p);
        const auto b = audit_packing(q);
        CHECK(a.contacts == b.contacts);
        CHECK(a.separability.clean_edges == b.separability.clean_edges);
        CHECK(a.separability.total_edges == b.separability.total_edges);
        CHECK(rescale_to_contact(q).size() == q.size());
    }
}

TEST_CASE("catalog regularity table") {
    const std::map<std::string, std::size_t> expected = {
        {"P1", 4},  {"P3", 3},  {"K6", 3},  {"K9", 3},  {"J1", 6},  {"J3", 5},   {"J6", 5},   {"J9", 5},
        {"J16", 4}, {"J18", 4}, {"J20", 4}, {"O1", 8},  {"O3", 7},  {"O6", 7},   {"O9", 7},   {"O16", 6},
        {"O18", 6}, {"O20", 6}, {"O39", 6}, {"O42", 6}, {"O45", 6}, {"O63", 6},  {"O66", 6},  {"O78", 6},
        {"O99", 5}, {"O100", 5}, {"O103", 5}, {"O132", 5}, {"O140", 5},
    };
    const auto& catalog = Catalog::builtin();
    CHECK(catalog.entries().size() == expected.size());
    for (const auto& [id, k] : expected) CHECK(catalog.at(id).regularity == k);
}

TEST_CASE("catalog parsing errors") {
    CHECK_THROWS_AS(Catalog::parse("{"), ParseError);
    try {
        Catalog::parse(R"({"format_version": 9, "entries": []})");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Version);
    }
}
