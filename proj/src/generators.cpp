#include "sepack/generators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>

#include "sepack/audit.hpp"
#include "sepack/error.hpp"
#include "sepack/spatial_grid.hpp"

namespace sepack {

namespace {

constexpr double kRawMergeEps = 1e-9;

// Drops points within eps of an earlier kept point.
std::vector<double> dedup(const std::vector<double>& flat, std::size_t dim, double eps) {
    if (flat.empty()) return {};
    const SpatialGrid grid(flat, dim, 1.0);
    const std::size_t n = flat.size() / dim;
    std::vector<bool> keep(n, true);
    const double eps_sq = eps * eps;
    for (std::size_t i = 0; i < n; ++i) {
        std::span<const double> xi(flat.data() + i * dim, dim);
        grid.for_each_candidate(xi, [&](std::size_t j) {
            if (!keep[i] || j >= i || !keep[j]) return;
            if (squared_distance(xi, std::span<const double>(flat.data() + j * dim, dim)) <= eps_sq) {
                keep[i] = false;
            }
        });
    }
    std::vector<double> out;
    out.reserve(flat.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) out.insert(out.end(), flat.begin() + i * dim, flat.begin() + (i + 1) * dim);
    }
    return out;
}

std::vector<std::vector<double>> scaled_identity(std::size_t d, double s) {
    std::vector<std::vector<double>> b(d, std::vector<double>(d, 0.0));
    for (std::size_t a = 0; a < d; ++a) b[a][a] = s;
    return b;
}

Packing cubic(const Window& w, std::string label) {
    const std::size_t d = w.dimension();
    return tile_motif(d, scaled_identity(d, 2.0), {std::vector<double>(d, 0.0)}, w, std::move(label));
}

Packing square_lattice_motif(const Window& w) { return cubic(w, "P1"); }

Packing hexagonal_motif(const Window& w) {
    const double r3 = std::sqrt(3.0);
    return tile_motif(2, {{2.0 * r3, 0.0}, {r3, 3.0}}, {{0.0, 0.0}, {0.0, 2.0}}, w, "P3");
}

// Unit-side-2 squares rotated 45 degrees; octagon gaps are exactly 2.
Packing truncated_square_motif(const Window& w) {
    const double r2 = std::sqrt(2.0);
    const double period = 2.0 + 2.0 * r2;
    return tile_motif(2, scaled_identity(2, period), {{r2, 0.0}, {-r2, 0.0}, {0.0, r2}, {0.0, -r2}}, w,
                      "K6");
}

// Dodecagons of side 2 on a triangular lattice; squares sit between
// lattice neighbours, hexagons between lattice triangles.
Packing omnitruncated_trihexagonal_motif(const Window& w) {
    const double pi = std::numbers::pi;
    const double circumradius = 1.0 / std::sin(pi / 12.0);
    const double period = 2.0 * (3.0 + std::sqrt(3.0));
    std::vector<std::vector<double>> motif;
    for (int k = 0; k < 12; ++k) {
        const double angle = pi / 12.0 + k * pi / 6.0;
        motif.push_back({circumradius * std::cos(angle), circumradius * std::sin(angle)});
    }
    return tile_motif(2, {{period, 0.0}, {0.5 * period, 0.5 * std::sqrt(3.0) * period}}, motif, w, "K9");
}

// Truncated octahedra: signed permutations of (0,1,2) about the body-centred
// lattice 4Z^3 + {0, (2,2,2)}. Raw edge length is sqrt(2).
Packing bitruncated_cubic_motif(const Window& w) {
    std::vector<std::vector<double>> motif;
    const std::vector<double> seed{0.0, 1.0, 2.0};
    for (const auto& g : hyperoctahedral_group(3)) {
        auto v = g.apply(seed);
        motif.push_back(v);
        for (double& c : v) c += 2.0;
        motif.push_back(std::move(v));
    }
    return tile_motif(3, scaled_identity(3, 4.0), motif, w, "J16");
}

Window slice(const Window& w, std::size_t begin, std::size_t count) {
    Window out;
    out.lower.assign(w.lower.begin() + begin, w.lower.begin() + begin + count);
    out.upper.assign(w.upper.begin() + begin, w.upper.begin() + begin + count);
    out.margin = w.margin;
    return out;
}

std::size_t factor_dimension(const std::string& factor) {
    if (factor == "apeirogon") return 1;
    return Catalog::builtin().at(factor).dimension;
}

Packing generate_factor(const std::string& factor, const Window& w, const Tolerance& tol) {
    if (factor == "apeirogon") return generate_apeirogon(w);
    return generate_named(factor, w, tol);
}

}  // namespace

std::vector<double> SignedPermutation::apply(std::span<const double> x) const {
    std::vector<double> y(perm.size());
    for (std::size_t a = 0; a < perm.size(); ++a) y[a] = sign[a] * x[perm[a]];
    return y;
}

std::vector<SignedPermutation> hyperoctahedral_group(std::size_t d) {
    std::vector<SignedPermutation> group;
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            SignedPermutation g;
            g.perm = perm;
            g.sign.resize(d);
            for (std::size_t a = 0; a < d; ++a) g.sign[a] = (mask >> a) & 1u ? -1 : 1;
            group.push_back(std::move(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

void OrbitSpec::validate() const {
    if (dimension == 0 || seed.size() != dimension) {
        throw Error(ErrorKind::MalformedInput, "orbit seed dimension mismatch");
    }
    if (std::all_of(seed.begin(), seed.end(), [](double c) { return c == 0.0; })) {
        throw Error(ErrorKind::MalformedInput, "orbit seed must be nonzero");
    }
    if (point_group.empty()) throw Error(ErrorKind::MalformedInput, "orbit point group is empty");
    for (const auto& g : point_group) {
        if (g.perm.size() != dimension || g.sign.size() != dimension) {
            throw Error(ErrorKind::MalformedInput, "point group element has wrong degree");
        }
    }
    if (basis.size() != dimension) throw Error(ErrorKind::MalformedInput, "lattice basis must have d vectors");
    Eigen::MatrixXd m(dimension, dimension);
    for (std::size_t r = 0; r < dimension; ++r) {
        if (basis[r].size() != dimension) throw Error(ErrorKind::MalformedInput, "basis vector has wrong dimension");
        for (std::size_t c = 0; c < dimension; ++c) m(r, c) = basis[r][c];
    }
    if (Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() != static_cast<Eigen::Index>(dimension)) {
        throw Error(ErrorKind::MalformedInput, "lattice basis is linearly dependent");
    }
    for (const auto& c : centering) {
        if (c.size() != dimension) throw Error(ErrorKind::MalformedInput, "centering offset has wrong dimension");
    }
}

Packing tile_motif(std::size_t dim, const std::vector<std::vector<double>>& basis,
                   const std::vector<std::vector<double>>& motif, const Window& window,
                   std::string label, const Tolerance& tol) {
    if (window.dimension() != dim) {
        throw Error(ErrorKind::MalformedInput, "window dimension does not match the construction");
    }
    window.validate();

    Eigen::MatrixXd b(dim, dim);  // columns are basis vectors
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) b(c, r) = basis[r][c];
    }
    const Eigen::MatrixXd b_inv = b.inverse();

    std::vector<double> raw_motif;
    double motif_reach = 0.0;
    for (const auto& m : motif) {
        raw_motif.insert(raw_motif.end(), m.begin(), m.end());
        motif_reach = std::max(motif_reach, std::sqrt(std::inner_product(m.begin(), m.end(), m.begin(), 0.0)));
    }
    raw_motif = dedup(raw_motif, dim, kRawMergeEps);
    const std::size_t motif_count = raw_motif.size() / dim;

    auto for_each_translation = [&](const std::vector<long>& lo, const std::vector<long>& hi, auto&& f) {
        std::vector<long> c = lo;
        Eigen::VectorXd coeff(dim);
        while (true) {
            for (std::size_t a = 0; a < dim; ++a) coeff[a] = static_cast<double>(c[a]);
            const Eigen::VectorXd t = b * coeff;
            f(t);
            std::size_t a = 0;
            for (; a < dim; ++a) {
                if (++c[a] <= hi[a]) break;
                c[a] = lo[a];
            }
            if (a == dim) break;
        }
    };

    // Contact scale from the motif and its immediate lattice neighbours.
    std::vector<double> patch;
    for_each_translation(std::vector<long>(dim, -1), std::vector<long>(dim, 1), [&](const Eigen::VectorXd& t) {
        for (std::size_t m = 0; m < motif_count; ++m) {
            for (std::size_t a = 0; a < dim; ++a) patch.push_back(raw_motif[m * dim + a] + t[a]);
        }
    });
    patch = dedup(patch, dim, kRawMergeEps);
    if (patch.size() / dim < 2) throw Error(ErrorKind::DegenerateInput, "lattice patch has a single point");
    const double delta = min_pairwise_distance(Packing(dim, patch, Window::bounding(dim, patch, 1.0)));
    const double scale = 2.0 / delta;

    // Lattice coefficients whose translates can reach the raw window.
    std::vector<long> lo(dim, std::numeric_limits<long>::max());
    std::vector<long> hi(dim, std::numeric_limits<long>::min());
    for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
        Eigen::VectorXd x(dim);
        for (std::size_t a = 0; a < dim; ++a) {
            x[a] = ((corner >> a) & 1u) ? window.upper[a] / scale + motif_reach
                                        : window.lower[a] / scale - motif_reach;
        }
        const Eigen::VectorXd c = b_inv * x;
        for (std::size_t a = 0; a < dim; ++a) {
            lo[a] = std::min(lo[a], static_cast<long>(std::floor(c[a])) - 1);
            hi[a] = std::max(hi[a], static_cast<long>(std::ceil(c[a])) + 1);
        }
    }

    std::vector<double> coords;
    std::vector<double> point(dim);
    for_each_translation(lo, hi, [&](const Eigen::VectorXd& t) {
        for (std::size_t m = 0; m < motif_count; ++m) {
            for (std::size_t a = 0; a < dim; ++a) point[a] = scale * (raw_motif[m * dim + a] + t[a]);
            if (window.contains(point, tol.contact)) coords.insert(coords.end(), point.begin(), point.end());
        }
    });
    coords = dedup(coords, dim, 0.5 * tol.contact);
    return Packing(dim, std::move(coords), window, std::move(label), 1.0);
}

OrbitGeneration orbit_generate(const OrbitSpec& spec, const Window& window, const Tolerance& tol) {
    spec.validate();
    const std::size_t d = spec.dimension;
    std::vector<double> orbit;
    for (const auto& g : spec.point_group) {
        const auto v = g.apply(spec.seed);
        orbit.insert(orbit.end(), v.begin(), v.end());
    }
    orbit = dedup(orbit, d, kRawMergeEps);

    OrbitGeneration result;
    result.motif_size = orbit.size() / d;
    if (spec.expected_orbit_size != 0 && result.motif_size < spec.expected_orbit_size) {
        result.warnings.push_back("degenerate seed: orbit has " + std::to_string(result.motif_size) +
                                  " points, expected " + std::to_string(spec.expected_orbit_size));
    }

    std::vector<std::vector<double>> motif;
    std::vector<std::vector<double>> offsets{std::vector<double>(d, 0.0)};
    offsets.insert(offsets.end(), spec.centering.begin(), spec.centering.end());
    for (const auto& off : offsets) {
        for (std::size_t m = 0; m < result.motif_size; ++m) {
            std::vector<double> v(orbit.begin() + m * d, orbit.begin() + (m + 1) * d);
            for (std::size_t a = 0; a < d; ++a) {
                v[a] += off[a];
                if (spec.anchor_at_seed) v[a] -= spec.seed[a];
            }
            motif.push_back(std::move(v));
        }
    }
    result.packing = tile_motif(d, spec.basis, motif, window, "orbit", tol);
    return result;
}

Packing generate_apeirogon(const Window& window) {
    if (window.dimension() != 1) {
        throw Error(ErrorKind::MalformedInput, "apeirogon window must be one-dimensional");
    }
    window.validate();
    std::vector<double> coords;
    for (double x = 2.0 * std::ceil(window.lower[0] / 2.0); x <= window.upper[0]; x += 2.0) {
        coords.push_back(x);
    }
    return Packing(1, std::move(coords), window, "apeirogon");
}

Packing product_packing(const Packing& p, const Packing& q, const Tolerance& tol) {
    for (const Packing* f : {&p, &q}) {
        if (f->radius() != 1.0) {
            throw Error(ErrorKind::NormalizationRequired, "product factors must have radius 1");
        }
        if (f->size() >= 2 && std::abs(min_pairwise_distance(*f) - 2.0) > tol.contact) {
            throw Error(ErrorKind::NormalizationRequired,
                        "product factor '" + f->label() + "' is not normalized to contact distance 2");
        }
    }
    const std::size_t a = p.dimension();
    const std::size_t b = q.dimension();
    std::vector<double> coords;
    coords.reserve(p.size() * q.size() * (a + b));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            const auto x = p.center(i);
            const auto y = q.center(j);
            coords.insert(coords.end(), x.begin(), x.end());
            coords.insert(coords.end(), y.begin(), y.end());
        }
    }
    Window w;
    w.lower = p.window().lower;
    w.lower.insert(w.lower.end(), q.window().lower.begin(), q.window().lower.end());
    w.upper = p.window().upper;
    w.upper.insert(w.upper.end(), q.window().upper.begin(), q.window().upper.end());
    w.margin = std::max(p.window().margin, q.window().margin);
    return Packing(a + b, std::move(coords), std::move(w), p.label() + "x" + q.label());
}

Packing generate_triangular(const Window& window) {
    return tile_motif(2, {{2.0, 0.0}, {1.0, std::sqrt(3.0)}}, {{0.0, 0.0}}, window, "triangular");
}

OrbitSpec orbit_spec_for(const CatalogEntry& entry) {
    if (!entry.orbit) {
        throw Error(ErrorKind::UnsupportedConstruction, "catalog entry " + entry.id + " has no orbit parameters");
    }
    const OrbitParameters& o = *entry.orbit;
    OrbitSpec spec;
    spec.dimension = entry.dimension;
    spec.seed = o.seed;
    spec.point_group = hyperoctahedral_group(entry.dimension);
    spec.basis = scaled_identity(entry.dimension, o.period);
    spec.centering = o.centering;
    spec.expected_orbit_size = o.expected_orbit_size;
    spec.anchor_at_seed = o.anchor_at_seed;
    return spec;
}

bool orbit_entry_validated(const CatalogEntry& entry) {
    static std::mutex mutex;
    static std::map<std::string, bool> verdicts;
    {
        std::lock_guard lock(mutex);
        if (auto it = verdicts.find(entry.id); it != verdicts.end()) return it->second;
    }
    bool ok = false;
    try {
        const double half_width = entry.dimension >= 4 ? 6.0 : 8.0;
        const auto gen = orbit_generate(orbit_spec_for(entry), Window::cube(entry.dimension, half_width));
        ok = audit_packing(gen.packing, entry.regularity).passes();
    } catch (const Error&) {
        ok = false;
    }
    std::lock_guard lock(mutex);
    verdicts[entry.id] = ok;
    return ok;
}

Packing generate_named(std::string_view id, const Window& window, const Tolerance& tol) {
    const CatalogEntry& entry = Catalog::builtin().at(id);
    if (window.dimension() != entry.dimension) {
        throw Error(ErrorKind::MalformedInput, entry.id + " lives in dimension " +
                                                   std::to_string(entry.dimension) + ", window has dimension " +
                                                   std::to_string(window.dimension()));
    }
    switch (entry.construction) {
        case ConstructionKind::CatalogOnly:
            throw Error(ErrorKind::UnsupportedConstruction,
                        entry.id + " (" + entry.name + ") is catalog-only: its regularity (" +
                            std::to_string(entry.regularity) +
                            ") is recorded but no vertex coordinates are available to generate it");
        case ConstructionKind::Motif: {
            if (entry.id == "P1") return square_lattice_motif(window);
            if (entry.id == "P3") return hexagonal_motif(window);
            if (entry.id == "K6") return truncated_square_motif(window);
            if (entry.id == "K9") return omnitruncated_trihexagonal_motif(window);
            if (entry.id == "J16") return bitruncated_cubic_motif(window);
            if (entry.id == "J1" || entry.id == "O1") return cubic(window, entry.id);
            throw Error(ErrorKind::UnsupportedConstruction, "no motif registered for " + entry.id);
        }
        case ConstructionKind::Product: {
            const std::size_t a = factor_dimension(entry.factors[0]);
            const std::size_t b = factor_dimension(entry.factors[1]);
            if (a + b != entry.dimension) {
                throw Error(ErrorKind::UnsupportedConstruction, "factor dimensions of " + entry.id + " do not add up");
            }
            const Packing p = generate_factor(entry.factors[0], slice(window, 0, a), tol);
            const Packing q = generate_factor(entry.factors[1], slice(window, a, b), tol);
            return product_packing(p, q, tol).with_label(entry.id);
        }
        case ConstructionKind::Orbit: {
            if (!orbit_entry_validated(entry)) {
                throw Error(ErrorKind::UnsupportedConstruction,
                            entry.id + " orbit seed failed validation; treated as catalog-only");
            }
            return orbit_generate(orbit_spec_for(entry), window, tol).packing.with_label(entry.id);
        }
    }
    throw Error(ErrorKind::UnsupportedConstruction, "unhandled construction for " + entry.id);
}

PackingFamily named_family(std::string_view id, double margin) {
    const std::string name(id);
    if (name == "triangular") {
        return {name, [margin](double L) { return generate_triangular(Window::cube(2, L, margin)); }};
    }
    if (name == "mixed-tail") {
        // Three mutually tangent circles plus one clean contact, followed by a
        // row of circles whose contacts are all clean.
        return {name, [margin](double L) {
                    std::vector<std::vector<double>> pts{{0.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}, {1.0, std::sqrt(3.0)}};
                    for (double x = 6.0; x <= L; x += 2.0) pts.push_back({x, 0.0});
                    std::vector<double> flat;
                    for (const auto& q : pts) flat.insert(flat.end(), q.begin(), q.end());
                    return Packing::from_points(pts, Window::bounding(2, flat, 1.0, margin), "mixed-tail");
                }};
    }
    const CatalogEntry& entry = Catalog::builtin().at(name);
    const std::size_t dim = entry.dimension;
    return {name, [name, dim, margin](double L) { return generate_named(name, Window::cube(dim, L, margin)); }};
}

}  // namespace sepack
