#include "sepack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sepack/error.hpp"
#include "sepack/spatial_grid.hpp"

namespace sepack {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "malformed-input";
        case ErrorKind::UndefinedDistance: return "undefined-distance";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::NotAContact: return "not-a-contact";
        case ErrorKind::UnsupportedConstruction: return "unsupported-construction";
        case ErrorKind::UnknownEntry: return "unknown-entry";
        case ErrorKind::NormalizationRequired: return "normalization-required";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::EnumerationLimit: return "enumeration-limit";
        case ErrorKind::SizeLimit: return "size-limit";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Version: return "version";
        case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

void Tolerance::validate() const {
    for (double v : {contact, overlap, plane}) {
        if (!(v > 0.0 && v < 1e-3)) {
            throw Error(ErrorKind::MalformedInput, "tolerances must lie in (0, 1e-3)");
        }
    }
}

Window Window::cube(std::size_t dim, double half_width, double margin) {
    Window w;
    w.lower.assign(dim, -half_width);
    w.upper.assign(dim, half_width);
    w.margin = margin;
    w.validate();
    return w;
}

Window Window::bounding(std::size_t dim, std::span<const double> coords, double pad,
                        double margin) {
    Window w;
    w.margin = margin;
    if (coords.empty()) {
        w.lower.assign(dim, -pad);
        w.upper.assign(dim, pad);
    } else {
        w.lower.assign(dim, std::numeric_limits<double>::infinity());
        w.upper.assign(dim, -std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const std::size_t a = i % dim;
            w.lower[a] = std::min(w.lower[a], coords[i]);
            w.upper[a] = std::max(w.upper[a], coords[i]);
        }
        for (std::size_t a = 0; a < dim; ++a) {
            w.lower[a] -= pad;
            w.upper[a] += pad;
        }
    }
    w.validate();
    return w;
}

void Window::validate() const {
    if (lower.size() != upper.size()) {
        throw Error(ErrorKind::MalformedInput, "window bounds have different dimensions");
    }
    for (std::size_t a = 0; a < lower.size(); ++a) {
        if (!(lower[a] < upper[a])) {
            throw Error(ErrorKind::MalformedInput, "window lower bound must be below upper bound");
        }
    }
    if (!(margin >= 0.0)) {
        throw Error(ErrorKind::MalformedInput, "window margin must be nonnegative");
    }
}

bool Window::contains(std::span<const double> point, double slack) const {
    for (std::size_t a = 0; a < lower.size(); ++a) {
        if (point[a] < lower[a] - slack || point[a] > upper[a] + slack) return false;
    }
    return true;
}

Packing::Packing(std::size_t dimension, std::vector<double> coords, Window window,
                 std::string label, double radius)
    : dim_(dimension), radius_(radius), window_(std::move(window)), label_(std::move(label)) {
    if (dimension == 0) throw Error(ErrorKind::MalformedInput, "packing dimension must be >= 1");
    if (coords.size() % dimension != 0) {
        throw Error(ErrorKind::MalformedInput, "coordinate count is not a multiple of the dimension");
    }
    if (!(radius > 0.0)) throw Error(ErrorKind::MalformedInput, "radius must be positive");
    if (window_.dimension() != dimension) {
        throw Error(ErrorKind::MalformedInput, "window dimension does not match packing dimension");
    }
    window_.validate();
    for (double c : coords) {
        if (!std::isfinite(c)) throw Error(ErrorKind::MalformedInput, "non-finite center coordinate");
    }

    const std::size_t n = coords.size() / dimension;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(coords.begin() + a * dimension,
                                            coords.begin() + (a + 1) * dimension,
                                            coords.begin() + b * dimension,
                                            coords.begin() + (b + 1) * dimension);
    });
    coords_.reserve(coords.size());
    for (std::size_t i : order) {
        coords_.insert(coords_.end(), coords.begin() + i * dimension,
                       coords.begin() + (i + 1) * dimension);
    }
}

Packing Packing::from_points(const std::vector<std::vector<double>>& points, Window window,
                             std::string label, double radius) {
    const std::size_t dim = window.dimension();
    std::vector<double> flat;
    flat.reserve(points.size() * dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) {
            throw Error(ErrorKind::MalformedInput,
                        "center " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                            " coordinates, expected " + std::to_string(dim));
        }
        flat.insert(flat.end(), points[i].begin(), points[i].end());
    }
    return Packing(dim, std::move(flat), std::move(window), std::move(label), radius);
}

Packing Packing::with_window(Window window) const {
    Packing out = *this;
    if (window.dimension() != dim_) {
        throw Error(ErrorKind::MalformedInput, "window dimension does not match packing dimension");
    }
    window.validate();
    out.window_ = std::move(window);
    return out;
}

Packing Packing::with_label(std::string label) const {
    Packing out = *this;
    out.label_ = std::move(label);
    return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

ValidationVerdict validate_packing(const Packing& p, const Tolerance& tol) {
    ValidationVerdict verdict;
    if (p.size() < 2) return verdict;
    const double limit = 2.0 * p.radius() - tol.overlap;
    const SpatialGrid grid(p.coords(), p.dimension(), 2.0 * p.radius());
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t first = p.size();
        double first_distance = 0.0;
        grid.for_each_candidate(p.center(i), [&](std::size_t j) {
            if (j <= i || j >= first) return;
            const double dist = distance(p.center(i), p.center(j));
            if (dist < limit) {
                first = j;
                first_distance = dist;
            }
        });
        if (first < p.size()) {
            verdict.ok = false;
            verdict.violating_pair = std::pair{i, first};
            verdict.distance = first_distance;
            return verdict;
        }
    }
    return verdict;
}

double min_pairwise_distance(const Packing& p) {
    const std::size_t n = p.size();
    if (n < 2) {
        throw Error(ErrorKind::UndefinedDistance, "minimum distance needs at least two centers");
    }
    const std::size_t d = p.dimension();
    const Window box = Window::bounding(d, p.coords(), 0.5);
    double extent = 0.0;
    for (std::size_t a = 0; a < d; ++a) extent = std::max(extent, box.upper[a] - box.lower[a] - 1.0);
    if (extent == 0.0) return 0.0;

    // Grow the cell until the best adjacent-cell pair is no longer than the
    // cell size; then no closer pair can hide in non-adjacent cells.
    double cell = extent / std::ceil(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d)));
    while (true) {
        const SpatialGrid grid(p.coords(), d, cell);
        double best_sq = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            grid.for_each_candidate(p.center(i), [&](std::size_t j) {
                if (j > i) best_sq = std::min(best_sq, squared_distance(p.center(i), p.center(j)));
            });
        }
        const double best = std::sqrt(best_sq);
        if (best <= cell) return best;
        cell *= 2.0;
    }
}

Packing rescale_to_contact(const Packing& p) {
    const double delta = min_pairwise_distance(p);
    if (delta == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "duplicate centers: cannot rescale to contact distance");
    }
    const double factor = 2.0 / delta;
    std::vector<double> coords(p.coords().begin(), p.coords().end());
    for (double& c : coords) c *= factor;
    Window w = p.window();
    for (double& v : w.lower) v *= factor;
    for (double& v : w.upper) v *= factor;
    return Packing(p.dimension(), std::move(coords), std::move(w), p.label(), 1.0);
}

std::vector<std::size_t> interior_indices(const Packing& p) {
    constexpr double slack = 1e-9;
    const Window& w = p.window();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto c = p.center(i);
        bool inside = true;
        for (std::size_t a = 0; a < p.dimension() && inside; ++a) {
            inside = c[a] - w.lower[a] >= w.margin - slack && w.upper[a] - c[a] >= w.margin - slack;
        }
        if (inside) out.push_back(i);
    }
    return out;
}

}  // namespace sepack
