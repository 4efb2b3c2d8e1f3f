#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sepack/packing.hpp"

namespace sepack {

using Edge = std::pair<std::size_t, std::size_t>;

// Touching pairs of a packing. Edges satisfy i < j and are sorted; adjacency
// lists are sorted and symmetric.
class ContactGraph {
public:
    ContactGraph() = default;
    ContactGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    bool has_edge(std::size_t i, std::size_t j) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// Pairs with |x_i - x_j| within tol.contact of 2*radius. Throws
// MalformedInput (carrying the violating pair) if the packing overlaps.
ContactGraph build_contact_graph(const Packing& p, const Tolerance& tol = {});

inline std::size_t contact_count(const ContactGraph& g) { return g.edges().size(); }

enum class Regularity { Regular, Irregular, Inconclusive };

struct RegularityVerdict {
    Regularity status = Regularity::Inconclusive;
    std::size_t checked = 0;
    std::optional<std::size_t> offending_vertex;
    std::size_t offending_degree = 0;

    bool regular() const { return status == Regularity::Regular; }
};

// Degree test on interior vertices only; boundary spheres may be missing
// neighbours that lie outside the window.
RegularityVerdict is_k_regular(const ContactGraph& g, const Packing& p, std::size_t k);

// First triangle (i < j < l) found by intersecting neighbour lists per edge.
std::optional<std::array<std::size_t, 3>> contains_triangle(const ContactGraph& g);

}  // namespace sepack
