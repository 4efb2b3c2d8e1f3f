#include "sepack/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "sepack/error.hpp"
#include "sepack/spatial_grid.hpp"

namespace sepack {

namespace {

// Exact-point lookup within eps over a fixed set of points.
class PointLocator {
public:
    PointLocator(std::vector<double> coords, std::size_t dim, double eps)
        : coords_(std::move(coords)), dim_(dim), eps_(eps), grid_(coords_, dim, 1.0) {}

    std::optional<std::size_t> find(std::span<const double> x) const {
        std::optional<std::size_t> hit;
        grid_.for_each_candidate(x, [&](std::size_t j) {
            if (!hit && squared_distance(x, {coords_.data() + j * dim_, dim_}) <= eps_ * eps_) hit = j;
        });
        return hit;
    }

private:
    std::vector<double> coords_;
    std::size_t dim_;
    double eps_;
    SpatialGrid grid_;
};

std::vector<int> sign_vector(std::size_t mask, std::size_t d) {
    std::vector<int> s(d);
    for (std::size_t a = 0; a < d; ++a) s[a] = ((mask >> a) & 1u) ? -1 : 1;
    return s;
}

double diagonal_step(std::size_t d) { return 2.0 + 2.0 / std::sqrt(static_cast<double>(d)); }

}  // namespace

std::uint64_t diagonal_cube_count(std::size_t d, std::size_t depth) {
    const std::uint64_t corners = std::uint64_t{1} << d;
    std::uint64_t total = 1;
    std::uint64_t level = corners;
    for (std::size_t t = 1; t <= depth; ++t) {
        total += level;
        level *= corners - 1;
    }
    return total;
}

DiagonalState diagonal_construction_state(std::size_t d, std::size_t depth, DiagonalOptions options) {
    if (d < 2) throw Error(ErrorKind::Domain, "diagonal construction needs d >= 2");
    if (d > 16) throw Error(ErrorKind::SizeLimit, "diagonal construction supports d <= 16");
    const std::uint64_t corners = std::uint64_t{1} << d;
    const std::uint64_t cubes = diagonal_cube_count(d, depth);
    if (cubes > options.max_spheres / corners) {
        throw Error(ErrorKind::SizeLimit, "diagonal construction at d = " + std::to_string(d) + ", depth " +
                                              std::to_string(depth) + " needs " + std::to_string(cubes) +
                                              " cubes, over the budget of " +
                                              std::to_string(options.max_spheres) + " spheres");
    }

    DiagonalState state;
    state.dimension = d;
    state.depth = depth;
    state.cubes.push_back({std::vector<double>(d, 0.0), 0, {}});
    const double step = diagonal_step(d);
    std::size_t level_begin = 0;
    for (std::size_t gen = 1; gen <= depth; ++gen) {
        const std::size_t level_end = state.cubes.size();
        for (std::size_t c = level_begin; c < level_end; ++c) {
            for (std::size_t mask = 0; mask < corners; ++mask) {
                const auto s = sign_vector(mask, d);
                const auto& parent = state.cubes[c].parent_direction;
                if (!parent.empty() &&
                    std::equal(s.begin(), s.end(), parent.begin(), [](int x, int y) { return x == -y; })) {
                    continue;  // the vertex already linked to this cube's parent
                }
                DiagonalCube child;
                child.center = state.cubes[c].center;
                for (std::size_t a = 0; a < d; ++a) child.center[a] += step * s[a];
                child.generation = gen;
                child.parent_direction = s;
                state.cubes.push_back(std::move(child));
            }
        }
        level_begin = level_end;
    }

    std::vector<double> vertices;
    vertices.reserve(state.cubes.size() * corners * d);
    for (const auto& cube : state.cubes) {
        for (std::size_t mask = 0; mask < corners; ++mask) {
            const auto s = sign_vector(mask, d);
            for (std::size_t a = 0; a < d; ++a) vertices.push_back(cube.center[a] + s[a]);
        }
    }
    // Merge coincident vertices of coincident cubes.
    const Tolerance tol;
    const SpatialGrid grid(vertices, d, 1.0);
    const std::size_t n = vertices.size() / d;
    std::vector<bool> keep(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        std::span<const double> xi(vertices.data() + i * d, d);
        grid.for_each_candidate(xi, [&](std::size_t j) {
            if (keep[i] && j < i && keep[j] &&
                squared_distance(xi, {vertices.data() + j * d, d}) <= 0.25 * tol.contact * tol.contact) {
                keep[i] = false;
            }
        });
    }
    std::vector<double> coords;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) coords.insert(coords.end(), vertices.begin() + i * d, vertices.begin() + (i + 1) * d);
    }
    Window w = Window::bounding(d, coords, 1.0);
    state.packing = Packing(d, std::move(coords), std::move(w),
                            "diagonal:d=" + std::to_string(d) + ":depth=" + std::to_string(depth));
    return state;
}

SaturationReport interior_regularity_check(const DiagonalState& state, const Tolerance& tol) {
    const std::size_t d = state.dimension;
    const Packing& p = state.packing;
    SaturationReport report;
    report.expected_degree = d + 1;

    std::vector<double> centers;
    for (const auto& cube : state.cubes) centers.insert(centers.end(), cube.center.begin(), cube.center.end());
    const PointLocator cube_at(std::move(centers), d, 1e-6);
    const PointLocator sphere_at(std::vector<double>(p.coords().begin(), p.coords().end()), d, 1e-6);

    const double step = diagonal_step(d);
    std::vector<bool> saturated(p.size(), false);
    std::vector<double> probe(d);
    for (const auto& cube : state.cubes) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            const auto s = sign_vector(mask, d);
            for (std::size_t a = 0; a < d; ++a) probe[a] = cube.center[a] + step * s[a];
            if (!cube_at.find(probe)) continue;
            for (std::size_t a = 0; a < d; ++a) probe[a] = cube.center[a] + s[a];
            if (const auto i = sphere_at.find(probe)) saturated[*i] = true;
        }
    }

    const ContactGraph g = build_contact_graph(p, tol);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!saturated[i]) continue;
        report.saturated.push_back(i);
        if (g.degree(i) != report.expected_degree) report.deviations.push_back(i);
    }
    if (report.saturated.empty()) {
        report.status = Regularity::Inconclusive;
    } else {
        report.status = report.deviations.empty() ? Regularity::Regular : Regularity::Irregular;
    }
    return report;
}

std::vector<std::vector<double>> Fingerprint::distinct(double tol) const {
    std::vector<std::vector<double>> out;
    for (const auto& prof : profiles) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const std::vector<double>& q) {
            if (q.size() != prof.size()) return false;
            for (std::size_t k = 0; k < q.size(); ++k) {
                if (std::abs(q[k] - prof[k]) > tol) return false;
            }
            return true;
        });
        if (!seen) out.push_back(prof);
    }
    return out;
}

Fingerprint local_fingerprint(const Packing& p, double radius, std::span<const std::size_t> spheres) {
    if (p.empty()) throw Error(ErrorKind::MalformedInput, "fingerprint of an empty packing");
    if (!(radius > 0.0)) throw Error(ErrorKind::MalformedInput, "fingerprint radius must be positive");
    const double limit = radius + 1e-9;
    const SpatialGrid grid(p.coords(), p.dimension(), limit + 1e-9);
    Fingerprint fp;
    for (std::size_t i : spheres) {
        std::vector<double> prof;
        grid.for_each_candidate(p.center(i), [&](std::size_t j) {
            if (j == i) return;
            const double dist = distance(p.center(i), p.center(j));
            if (dist <= limit) prof.push_back(dist);
        });
        std::sort(prof.begin(), prof.end());
        fp.profiles.push_back(std::move(prof));
    }
    std::sort(fp.profiles.begin(), fp.profiles.end());
    return fp;
}

Fingerprint local_fingerprint(const Packing& p, double radius) {
    const auto interior = interior_indices(p);
    return local_fingerprint(p, radius, interior);
}

bool same_local_structure(const Fingerprint& a, const Fingerprint& b, double tol) {
    const auto da = a.distinct(tol);
    const auto db = b.distinct(tol);
    if (da.size() != db.size()) return false;
    for (const auto& prof : da) {
        bool matched = false;
        for (const auto& q : db) {
            if (q.size() != prof.size()) continue;
            bool equal = true;
            for (std::size_t k = 0; k < q.size() && equal; ++k) equal = std::abs(q[k] - prof[k]) <= tol;
            if (equal) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace sepack
