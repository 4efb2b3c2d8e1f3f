#include "sepack/contact_graph.hpp"

#include <algorithm>
#include <string>

#include "sepack/error.hpp"
#include "sepack/spatial_grid.hpp"

namespace sepack {

ContactGraph::ContactGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
    for (auto& [i, j] : edges_) {
        if (i == j || i >= vertex_count || j >= vertex_count) {
            throw Error(ErrorKind::MalformedInput, "edge endpoints out of range or self-loop");
        }
        if (i > j) std::swap(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [i, j] : edges_) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool ContactGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i >= adjacency_.size() || j >= adjacency_.size()) return false;
    const auto& list = adjacency_[i];
    return std::binary_search(list.begin(), list.end(), j);
}

ContactGraph build_contact_graph(const Packing& p, const Tolerance& tol) {
    if (const auto v = validate_packing(p, tol); !v) {
        throw Error(ErrorKind::MalformedInput,
                    "packing overlaps: centers " + std::to_string(v.violating_pair->first) + " and " +
                        std::to_string(v.violating_pair->second) + " at distance " +
                        std::to_string(v.distance));
    }
    const double target = 2.0 * p.radius();
    std::vector<Edge> edges;
    if (p.size() >= 2) {
        // Cells slightly wider than the contact band so no contact spans two cells.
        const SpatialGrid grid(p.coords(), p.dimension(), target + 2.0 * tol.contact);
        for (std::size_t i = 0; i < p.size(); ++i) {
            grid.for_each_candidate(p.center(i), [&](std::size_t j) {
                if (j <= i) return;
                const double dist = distance(p.center(i), p.center(j));
                if (dist >= target - tol.contact && dist <= target + tol.contact) {
                    edges.emplace_back(i, j);
                }
            });
        }
    }
    return ContactGraph(p.size(), std::move(edges));
}

RegularityVerdict is_k_regular(const ContactGraph& g, const Packing& p, std::size_t k) {
    RegularityVerdict verdict;
    for (std::size_t v : interior_indices(p)) {
        ++verdict.checked;
        if (g.degree(v) != k && !verdict.offending_vertex) {
            verdict.offending_vertex = v;
            verdict.offending_degree = g.degree(v);
        }
    }
    if (verdict.checked == 0) {
        verdict.status = Regularity::Inconclusive;
    } else {
        verdict.status = verdict.offending_vertex ? Regularity::Irregular : Regularity::Regular;
    }
    return verdict;
}

std::optional<std::array<std::size_t, 3>> contains_triangle(const ContactGraph& g) {
    for (const auto& [i, j] : g.edges()) {
        const auto& a = g.neighbors(i);
        const auto& b = g.neighbors(j);
        auto ia = std::upper_bound(a.begin(), a.end(), j);
        auto ib = std::upper_bound(b.begin(), b.end(), j);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                return std::array<std::size_t, 3>{i, j, *ia};
            }
        }
    }
    return std::nullopt;
}

}  // namespace sepack
