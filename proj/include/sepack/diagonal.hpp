#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sepack/contact_graph.hpp"
#include "sepack/packing.hpp"

namespace sepack {

// Axis-aligned cube of edge 2. parent_direction is the sign vector s of the
// parent vertex it was spawned from (empty for the root); the cube's own
// vertex in direction -s is the one linked back to the parent.
struct DiagonalCube {
    std::vector<double> center;
    std::size_t generation = 0;
    std::vector<int> parent_direction;
};

struct DiagonalState {
    std::size_t dimension = 0;
    std::size_t depth = 0;
    std::vector<DiagonalCube> cubes;  // every spawned cube, coincident ones included
    Packing packing;                  // distinct cube vertices
};

struct DiagonalOptions {
    std::uint64_t max_spheres = 2'000'000;
};

// 1 + 2^d * sum_{j<t} (2^d - 1)^j
std::uint64_t diagonal_cube_count(std::size_t d, std::size_t depth);

// Grows cubes diagonally out of every free vertex: generation 1 has one cube
// per root vertex, later generations 2^d - 1 per cube. The nearest vertex of a
// child sits at distance 2 from its parent vertex along (+-1,...,+-1)/sqrt(d).
// Throws SizeLimit when 2^d * cubes exceeds the sphere budget.
DiagonalState diagonal_construction_state(std::size_t d, std::size_t depth, DiagonalOptions options = {});

inline Packing diagonal_construction(std::size_t d, std::size_t depth, DiagonalOptions options = {}) {
    return diagonal_construction_state(d, depth, options).packing;
}

struct SaturationReport {
    Regularity status = Regularity::Inconclusive;
    std::size_t expected_degree = 0;
    std::vector<std::size_t> saturated;   // sphere indices with every neighbour present
    std::vector<std::size_t> deviations;  // saturated spheres whose degree is not d + 1
};

// A sphere is saturated when its diagonal partner cube exists; its cube is
// always complete. Saturated spheres must have degree d + 1.
SaturationReport interior_regularity_check(const DiagonalState& state, const Tolerance& tol = {});

// Sorted neighbour-distance profiles, one per inspected sphere, in
// lexicographic order.
struct Fingerprint {
    std::vector<std::vector<double>> profiles;

    // Profiles that differ within `tol` per entry are merged.
    std::vector<std::vector<double>> distinct(double tol = 1e-9) const;
};

// Profiles of the interior spheres (window margin).
Fingerprint local_fingerprint(const Packing& p, double radius);
// Profiles of the given spheres.
Fingerprint local_fingerprint(const Packing& p, double radius, std::span<const std::size_t> spheres);

// Equal sets of distinct local profiles, entrywise within tol.
bool same_local_structure(const Fingerprint& a, const Fingerprint& b, double tol = 1e-9);

}  // namespace sepack
