#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "sepack/contact_graph.hpp"
#include "sepack/packing.hpp"
#include "sepack/separability.hpp"

namespace sepack {

// Every packing-level property the catalog and constructions promise, measured
// in one pass.
struct PackingAudit {
    std::size_t sphere_count = 0;
    ValidationVerdict validation;
    std::optional<double> min_distance;
    std::size_t contacts = 0;
    std::map<std::size_t, std::size_t> interior_degrees;  // degree -> count
    std::map<std::size_t, std::size_t> boundary_degrees;
    // Degree the regularity verdict was judged against: the requested k, or
    // the common interior degree when none was requested.
    std::optional<std::size_t> k;
    RegularityVerdict regularity;
    std::optional<std::array<std::size_t, 3>> triangle;
    SeparabilityReport separability;

    // Valid, min distance 2 within tol.contact, triangle-free, certified and
    // interior-regular.
    bool passes(const Tolerance& tol = {}) const;
    std::string failure_summary(const Tolerance& tol = {}) const;
};

PackingAudit audit_packing(const Packing& p, std::optional<std::size_t> k = std::nullopt,
                           const Tolerance& tol = {}, SeparabilityOptions options = {});

}  // namespace sepack
