#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepack {

inline constexpr double kDefaultMargin = 3.0;

// Floating-point slack for the exact-real statements about packings.
struct Tolerance {
    double contact = 1e-9;
    double overlap = 1e-9;
    double plane = 1e-9;

    // Throws MalformedInput unless every field lies in (0, 1e-3).
    void validate() const;
};

// Axis-aligned crop of an (in principle infinite) packing. Spheres closer
// than `margin` to a face are treated as boundary spheres.
struct Window {
    std::vector<double> lower;
    std::vector<double> upper;
    double margin = kDefaultMargin;

    std::size_t dimension() const { return lower.size(); }

    // [-half_width, half_width]^dim
    static Window cube(std::size_t dim, double half_width, double margin = kDefaultMargin);

    // Bounding box of the given flat coordinates, padded by `pad` on each side.
    static Window bounding(std::size_t dim, std::span<const double> coords, double pad,
                           double margin = kDefaultMargin);

    void validate() const;
    bool contains(std::span<const double> point, double slack = 0.0) const;

    friend bool operator==(const Window&, const Window&) = default;
};

// A finite window of a congruent sphere packing. Centers are stored flat and
// kept in lexicographic order; instances are immutable after construction.
class Packing {
public:
    Packing() = default;

    // `coords` holds size()*dimension values. Sorts centers lexicographically.
    Packing(std::size_t dimension, std::vector<double> coords, Window window,
            std::string label = {}, double radius = 1.0);

    // Builds from a list of points; rejects ragged input with MalformedInput.
    static Packing from_points(const std::vector<std::vector<double>>& points, Window window,
                               std::string label = {}, double radius = 1.0);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }
    double radius() const { return radius_; }
    const Window& window() const { return window_; }
    const std::string& label() const { return label_; }

    std::span<const double> center(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const { return coords_; }

    Packing with_window(Window window) const;
    Packing with_label(std::string label) const;

    friend bool operator==(const Packing&, const Packing&) = default;

private:
    std::size_t dim_ = 0;
    double radius_ = 1.0;
    std::vector<double> coords_;
    Window window_;
    std::string label_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

struct ValidationVerdict {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
    double distance = 0.0;

    explicit operator bool() const { return ok; }
};

// OK iff every pair of centers is at least 2*radius - tol.overlap apart.
// Reports the lexicographically first violating pair otherwise.
ValidationVerdict validate_packing(const Packing& p, const Tolerance& tol = {});

// Smallest center distance. Throws UndefinedDistance for fewer than 2 centers.
double min_pairwise_distance(const Packing& p);

// Similarity that brings the minimum distance to 2 and sets radius 1.
// Throws DegenerateInput when two centers coincide.
Packing rescale_to_contact(const Packing& p);

// Indices of spheres at least window.margin from every window face.
std::vector<std::size_t> interior_indices(const Packing& p);

}  // namespace sepack
