#pragma once

// Brute-force oracles and random fixtures shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sepack/contact_graph.hpp"
#include "sepack/packing.hpp"

namespace testing {

using sepack::Edge;
using sepack::Packing;
using sepack::Window;

inline Packing make(const std::vector<std::vector<double>>& pts, double margin = 0.0) {
    std::vector<double> flat;
    for (const auto& p : pts) flat.insert(flat.end(), p.begin(), p.end());
    const std::size_t d = pts.empty() ? 2 : pts.front().size();
    Window w = pts.empty() ? Window::cube(d, 1.0, margin) : Window::bounding(d, flat, 1.0, margin);
    return Packing::from_points(pts, w);
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

inline std::set<Edge> brute_edges(const Packing& p, double tol = 1e-9) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (std::abs(dist(p.center(i), p.center(j)) - 2.0 * p.radius()) <= tol) out.insert({i, j});
        }
    }
    return out;
}

inline double brute_min_distance(const Packing& p) {
    double best = INFINITY;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) best = std::min(best, dist(p.center(i), p.center(j)));
    }
    return best;
}

inline bool brute_has_triangle(const std::set<Edge>& e, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (e.count({i, j}) && e.count({j, k}) && e.count({i, k})) return true;
    return false;
}

// Clean edges: the bisecting hyperplane of the pair keeps every center at
// least r away.
inline std::size_t brute_clean_edges(const Packing& p, double tol = 1e-9) {
    std::size_t clean = 0;
    const std::size_t d = p.dimension();
    for (const auto& [i, j] : brute_edges(p)) {
        std::vector<double> u(d), m(d);
        for (std::size_t a = 0; a < d; ++a) {
            u[a] = p.center(j)[a] - p.center(i)[a];
            m[a] = 0.5 * (p.center(j)[a] + p.center(i)[a]);
        }
        const double len = std::sqrt(std::inner_product(u.begin(), u.end(), u.begin(), 0.0));
        bool ok = true;
        for (std::size_t s = 0; s < p.size() && ok; ++s) {
            double h = 0.0;
            for (std::size_t a = 0; a < d; ++a) h += u[a] / len * (p.center(s)[a] - m[a]);
            if (std::abs(h) < p.radius() - tol) ok = false;
        }
        if (ok) ++clean;
    }
    return clean;
}

// Random subset of a square or triangular lattice patch: exact contacts,
// occasional triangles.
inline std::vector<std::vector<double>> lattice_patch(std::mt19937& rng, bool triangular, int side, double keep) {
    std::bernoulli_distribution take(keep);
    std::vector<std::vector<double>> pts;
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
            if (!take(rng)) continue;
            if (triangular) {
                pts.push_back({2.0 * a + b, std::sqrt(3.0) * b});
            } else {
                pts.push_back({2.0 * a, 2.0 * b});
            }
        }
    }
    return pts;
}

// Rotation by theta followed by translation.
inline std::vector<std::vector<double>> moved(const std::vector<std::vector<double>>& pts, double theta, double tx,
                                              double ty) {
    std::vector<std::vector<double>> out;
    const double c = std::cos(theta), s = std::sin(theta);
    for (const auto& p : pts) out.push_back({c * p[0] - s * p[1] + tx, s * p[0] + c * p[1] + ty});
    return out;
}

}  // namespace testing
