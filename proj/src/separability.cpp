#include "sepack/separability.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sepack/error.hpp"
#include "sepack/spatial_grid.hpp"

namespace sepack {

std::string_view to_string(SeparabilityStatus status) {
    switch (status) {
        case SeparabilityStatus::WindowCertified: return "WindowCertified";
        case SeparabilityStatus::ViolationFound: return "ViolationFound";
        case SeparabilityStatus::NoEdges: return "NoEdges";
    }
    return "unknown";
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

TangentContact make_contact(const Packing& p, Edge edge) {
    const auto xi = p.center(edge.first);
    const auto xj = p.center(edge.second);
    const double len = distance(xi, xj);
    TangentContact h;
    h.edge = edge;
    h.normal.resize(p.dimension());
    double offset = 0.0;
    for (std::size_t a = 0; a < p.dimension(); ++a) {
        h.normal[a] = (xj[a] - xi[a]) / len;
        offset += h.normal[a] * 0.5 * (xi[a] + xj[a]);
    }
    h.offset = offset;
    return h;
}

// Spheres sorted by their projection on one normal direction; every edge
// whose tangent hyperplane is (up to sign) parallel shares the index.
struct ProjectionIndex {
    std::vector<double> normal;
    std::vector<std::pair<double, std::size_t>> sorted;
};

std::vector<std::int64_t> direction_key(std::span<const double> u, double& sign) {
    sign = 1.0;
    for (double c : u) {
        if (std::abs(c) > 1e-7) {
            sign = c > 0 ? 1.0 : -1.0;
            break;
        }
    }
    std::vector<std::int64_t> key(u.size());
    for (std::size_t a = 0; a < u.size(); ++a) key[a] = std::llround(sign * u[a] * 1e6);
    return key;
}

}  // namespace

TangentContact tangent_hyperplane(const Packing& p, Edge edge, const Tolerance& tol) {
    if (edge.first >= p.size() || edge.second >= p.size() || edge.first == edge.second) {
        throw Error(ErrorKind::NotAContact, "edge endpoints are not distinct spheres of the packing");
    }
    const double dist = distance(p.center(edge.first), p.center(edge.second));
    if (std::abs(dist - 2.0 * p.radius()) > tol.contact) {
        throw Error(ErrorKind::NotAContact, "spheres " + std::to_string(edge.first) + " and " +
                                                std::to_string(edge.second) + " do not touch (distance " +
                                                std::to_string(dist) + ")");
    }
    return make_contact(p, edge);
}

std::optional<std::size_t> plane_hits_interior(const TangentContact& h, const Packing& p,
                                               const Tolerance& tol) {
    if (p.empty()) return std::nullopt;
    const double r = p.radius();
    const double reach = r - tol.plane;
    const SpatialGrid grid(p.coords(), p.dimension(), 2.0 * r);
    const double cell = grid.cell_size();
    double spread = 0.0;
    for (double c : h.normal) spread += std::abs(c);
    spread *= 0.5 * cell;

    std::optional<std::size_t> first;
    grid.for_each_cell([&](const SpatialGrid::Key& key, const std::vector<std::size_t>& members) {
        double mid = 0.0;
        for (std::size_t a = 0; a < key.size(); ++a) {
            mid += h.normal[a] * (static_cast<double>(key[a]) + 0.5) * cell;
        }
        if (std::abs(mid - h.offset) > r + spread) return;
        for (std::size_t i : members) {
            if (first && i >= *first) continue;
            if (std::abs(dot(h.normal, p.center(i)) - h.offset) < reach) first = i;
        }
    });
    return first;
}

SeparabilityReport separability_measure(const Packing& p, const ContactGraph& g,
                                        const Tolerance& tol, SeparabilityOptions options) {
    SeparabilityReport report;
    report.total_edges = contact_count(g);
    if (report.total_edges == 0) {
        report.status = SeparabilityStatus::NoEdges;
        return report;
    }

    const double r = p.radius();
    const double reach = r - tol.plane;
    double max_norm = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        max_norm = std::max(max_norm, std::sqrt(dot(p.center(i), p.center(i))));
    }

    std::map<std::vector<std::int64_t>, ProjectionIndex> indices;
    std::vector<std::size_t> hits;
    for (const Edge& e : g.edges()) {
        const TangentContact h = make_contact(p, e);
        double sign = 1.0;
        auto key = direction_key(h.normal, sign);
        auto [it, inserted] = indices.try_emplace(std::move(key));
        ProjectionIndex& index = it->second;
        if (inserted) {
            index.normal = h.normal;
            for (double& c : index.normal) c *= sign;
            index.sorted.reserve(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                index.sorted.emplace_back(dot(index.normal, p.center(i)), i);
            }
            std::sort(index.sorted.begin(), index.sorted.end());
        }

        // The representative normal differs slightly from this edge's normal;
        // widen the candidate band accordingly and re-test exactly.
        double drift = 0.0;
        for (std::size_t a = 0; a < h.normal.size(); ++a) {
            const double t = sign * h.normal[a] - index.normal[a];
            drift += t * t;
        }
        const double slack = std::sqrt(drift) * max_norm + 1e-12;
        const double centre = sign * h.offset;
        auto lo = std::lower_bound(index.sorted.begin(), index.sorted.end(),
                                   std::pair{centre - r - slack, std::size_t{0}});
        hits.clear();
        for (auto cur = lo; cur != index.sorted.end() && cur->first <= centre + r + slack; ++cur) {
            const std::size_t i = cur->second;
            if (std::abs(dot(h.normal, p.center(i)) - h.offset) < reach) hits.push_back(i);
        }
        if (hits.empty()) {
            ++report.clean_edges;
            continue;
        }
        std::sort(hits.begin(), hits.end());
        if (options.full_audit) {
            for (std::size_t i : hits) report.violations.push_back({e, i});
        } else {
            report.violations.push_back({e, hits.front()});
        }
    }
    report.status = report.violations.empty() ? SeparabilityStatus::WindowCertified
                                              : SeparabilityStatus::ViolationFound;
    return report;
}

SeparabilityReport separability_measure(const Packing& p, const Tolerance& tol,
                                        SeparabilityOptions options) {
    return separability_measure(p, build_contact_graph(p, tol), tol, options);
}

SeparabilityReport certify_total_separability(const Packing& p, const Tolerance& tol,
                                              SeparabilityOptions options) {
    return separability_measure(p, tol, options);
}

std::vector<double> SepSequence::values() const {
    std::vector<double> out;
    out.reserve(reports.size());
    for (const auto& r : reports) out.push_back(r.sep());
    return out;
}

SepSequence sep_measure_sequence(const PackingFamily& family, const std::vector<double>& windows,
                                 const Tolerance& tol) {
    if (windows.size() < 2) {
        throw Error(ErrorKind::MalformedInput, "separability sequence needs at least two windows");
    }
    for (std::size_t k = 1; k < windows.size(); ++k) {
        if (!(windows[k] > windows[k - 1])) {
            throw Error(ErrorKind::MalformedInput, "windows must be strictly increasing");
        }
    }
    SepSequence seq;
    seq.windows = windows;
    for (double w : windows) seq.reports.push_back(separability_measure(family.make(w), tol));
    const auto values = seq.values();
    const double a = std::round(values[values.size() - 2] * 1000.0);
    const double b = std::round(values.back() * 1000.0);
    seq.stable = a == b;
    return seq;
}

}  // namespace sepack
