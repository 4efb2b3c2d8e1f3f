#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepack/packing.hpp"

namespace sepack {

using Cell = std::vector<int>;

// A finite set of unit cells of the integer lattice Z^d.
class Polyomino {
public:
    Polyomino() = default;
    // Throws MalformedInput on duplicate cells or wrong cell dimension.
    Polyomino(std::size_t dimension, std::vector<Cell> cells);

    std::size_t dimension() const { return dim_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t area() const { return cells_.size(); }

    // Pairs of cells sharing a facet.
    std::size_t shared_faces() const;
    // Free facets; 2d * area == perimeter + 2 * shared_faces.
    std::size_t perimeter() const { return 2 * dim_ * area() - 2 * shared_faces(); }

private:
    std::size_t dim_ = 0;
    std::vector<Cell> cells_;  // sorted
};

// A (k+delta_1) x ... x (k+delta_d) box carved down to n cells.
struct BoxSpec {
    std::size_t dimension = 0;
    std::int64_t k = 0;
    std::vector<int> delta;  // each 0 or 1
    std::int64_t remainder = 0;  // box volume minus n (cells left empty)

    std::vector<std::int64_t> sides() const;
    std::int64_t volume() const;
};

struct ContactConstruction {
    Polyomino polyomino;
    Packing packing;  // unit spheres inscribed in side-2 cells
    BoxSpec box;      // set by box_packing only
};

// floor(2(n - sqrt n)); throws Domain for n < 1.
std::int64_t c2_formula(std::int64_t n);

// floor(d(n - n^((d-1)/d))) in exact integer arithmetic. Throws Domain for
// n < 1 or d < 2, SizeLimit when d^d * n^(d-1) overflows 128 bits.
std::int64_t cd_upper_bound(std::int64_t n, int d);

// Largest r with r^d <= m.
std::uint64_t integer_root(unsigned __int128 m, int d);

// Centers at 2*cell + 1 with radius 1: contacts are exactly shared facets.
Packing lift_to_packing(const Polyomino& poly, std::string label = "polyomino");

// a-column rows plus a contiguous remainder row, best of a = floor/ceil sqrt n.
ContactConstruction quasi_square_packing(std::int64_t n);

// Smallest box with sides k or k+1 holding n cells, filled lexicographically.
ContactConstruction box_packing(std::int64_t n, int d);

// Exhaustive maximum of shared facets over fixed polyominoes (d = 2, n <= 10)
// or polycubes (d = 3, n <= 8). Throws EnumerationLimit beyond that.
std::int64_t polyomino_oracle(std::int64_t n, int d = 2);

// Number of fixed (translation-distinct) animals; same limits as the oracle.
std::size_t count_fixed_polyominoes(std::int64_t n, int d = 2);

}  // namespace sepack
