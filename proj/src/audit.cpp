#include "sepack/audit.hpp"

#include <cmath>
#include <vector>

namespace sepack {

PackingAudit audit_packing(const Packing& p, std::optional<std::size_t> k, const Tolerance& tol,
                           SeparabilityOptions options) {
    PackingAudit audit;
    audit.sphere_count = p.size();
    audit.validation = validate_packing(p, tol);
    if (!audit.validation) return audit;
    if (p.size() >= 2) audit.min_distance = min_pairwise_distance(p);

    const ContactGraph g = build_contact_graph(p, tol);
    audit.contacts = contact_count(g);

    const auto interior = interior_indices(p);
    std::vector<bool> is_interior(p.size(), false);
    for (std::size_t v : interior) is_interior[v] = true;
    for (std::size_t v = 0; v < p.size(); ++v) {
        auto& hist = is_interior[v] ? audit.interior_degrees : audit.boundary_degrees;
        ++hist[g.degree(v)];
    }

    audit.k = k;
    if (!audit.k && audit.interior_degrees.size() == 1) audit.k = audit.interior_degrees.begin()->first;
    if (audit.k) {
        audit.regularity = is_k_regular(g, p, *audit.k);
    } else if (!interior.empty()) {
        // Several interior degrees and no target: irregular, report the first
        // vertex whose degree differs from the first interior vertex.
        audit.regularity.status = Regularity::Irregular;
        audit.regularity.checked = interior.size();
        const std::size_t ref = g.degree(interior.front());
        for (std::size_t v : interior) {
            if (g.degree(v) != ref) {
                audit.regularity.offending_vertex = v;
                audit.regularity.offending_degree = g.degree(v);
                break;
            }
        }
    }

    audit.triangle = contains_triangle(g);
    audit.separability = separability_measure(p, g, tol, options);
    return audit;
}

bool PackingAudit::passes(const Tolerance& tol) const {
    return failure_summary(tol).empty();
}

std::string PackingAudit::failure_summary(const Tolerance& tol) const {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += "; ";
        out += s;
    };
    if (!validation) {
        add("overlap between centers " + std::to_string(validation.violating_pair->first) + " and " +
            std::to_string(validation.violating_pair->second));
        return out;
    }
    if (min_distance && std::abs(*min_distance - 2.0) > tol.contact) {
        add("minimum distance " + std::to_string(*min_distance) + " is not 2");
    }
    if (triangle) add("contact graph contains a triangle");
    if (separability.status != SeparabilityStatus::WindowCertified) {
        add(std::string("separability status ") + std::string(to_string(separability.status)));
    }
    if (regularity.status == Regularity::Inconclusive) add("no interior spheres to judge regularity");
    if (regularity.status == Regularity::Irregular) {
        add("interior sphere " + std::to_string(*regularity.offending_vertex) + " has degree " +
            std::to_string(regularity.offending_degree) +
            (k ? " (expected " + std::to_string(*k) + ")" : std::string{}));
    }
    return out;
}

}  // namespace sepack
