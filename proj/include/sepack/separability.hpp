#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepack/contact_graph.hpp"
#include "sepack/packing.hpp"

namespace sepack {

// Tangent hyperplane {x : normal . x = offset} of a touching pair.
struct TangentContact {
    Edge edge;
    std::vector<double> normal;
    double offset = 0.0;
};

enum class SeparabilityStatus { WindowCertified, ViolationFound, NoEdges };

std::string_view to_string(SeparabilityStatus status);

struct Violation {
    Edge edge;
    std::size_t sphere;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// sep = clean_edges / total_edges. A WindowCertified status only speaks for
// the spheres present in the window; a ViolationFound is a genuine witness.
struct SeparabilityReport {
    std::size_t clean_edges = 0;
    std::size_t total_edges = 0;
    std::vector<Violation> violations;
    SeparabilityStatus status = SeparabilityStatus::NoEdges;

    double sep() const {
        return total_edges == 0 ? 0.0
                                : static_cast<double>(clean_edges) / static_cast<double>(total_edges);
    }
    // Exact rational comparison sep == num/den.
    bool sep_equals(std::size_t num, std::size_t den) const {
        return total_edges > 0 && clean_edges * den == num * total_edges;
    }
};

// Throws NotAContact unless the pair touches within tol.contact.
TangentContact tangent_hyperplane(const Packing& p, Edge edge, const Tolerance& tol = {});

// First sphere whose interior the hyperplane cuts, i.e. |u.x - b| < r - tol.plane.
// Tangency counts as clean. Candidates come from grid cells meeting the slab.
std::optional<std::size_t> plane_hits_interior(const TangentContact& h, const Packing& p,
                                               const Tolerance& tol = {});

struct SeparabilityOptions {
    // Record every offending sphere per dirty edge instead of the first one.
    bool full_audit = false;
};

SeparabilityReport separability_measure(const Packing& p, const Tolerance& tol = {},
                                        SeparabilityOptions options = {});
SeparabilityReport separability_measure(const Packing& p, const ContactGraph& g,
                                        const Tolerance& tol = {}, SeparabilityOptions options = {});

SeparabilityReport certify_total_separability(const Packing& p, const Tolerance& tol = {},
                                              SeparabilityOptions options = {});

// A family of finite windows indexed by a half-width L.
struct PackingFamily {
    std::string name;
    std::function<Packing(double)> make;
};

struct SepSequence {
    std::vector<double> windows;
    std::vector<SeparabilityReport> reports;
    // The last two values agree after rounding to 3 decimals.
    bool stable = false;

    std::vector<double> values() const;
};

// Finite-window approximants of the limit separability. Requires at least two
// strictly increasing windows.
SepSequence sep_measure_sequence(const PackingFamily& family, const std::vector<double>& windows,
                                 const Tolerance& tol = {});

}  // namespace sepack
