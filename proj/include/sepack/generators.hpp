#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sepack/catalog.hpp"
#include "sepack/packing.hpp"
#include "sepack/separability.hpp"

namespace sepack {

// x -> y with y[a] = sign[a] * x[perm[a]].
struct SignedPermutation {
    std::vector<std::size_t> perm;
    std::vector<int> sign;

    std::vector<double> apply(std::span<const double> x) const;
};

// All d! * 2^d signed permutations of degree d.
std::vector<SignedPermutation> hyperoctahedral_group(std::size_t d);

// Point-group orbit of a seed repeated over a lattice. Basis vectors are rows.
struct OrbitSpec {
    std::size_t dimension = 0;
    std::vector<double> seed;
    std::vector<SignedPermutation> point_group;
    std::vector<std::vector<double>> basis;
    std::vector<std::vector<double>> centering;  // extra translation offsets; origin implied
    std::size_t expected_orbit_size = 0;          // 0 disables the degeneracy warning
    bool anchor_at_seed = false;                  // translate so the seed sits at the origin

    // Seed nonzero, basis square and linearly independent.
    void validate() const;
};

struct OrbitGeneration {
    Packing packing;
    std::size_t motif_size = 0;
    std::vector<std::string> warnings;
};

// {g.seed + t} cropped to `window` (normalized units), deduplicated and
// rescaled to contact distance 2. Callers must audit the result.
OrbitGeneration orbit_generate(const OrbitSpec& spec, const Window& window,
                               const Tolerance& tol = {});

// Lattice + motif tiling in raw units, normalized afterwards and cropped to
// the normalized window. Used by every motif and orbit construction.
Packing tile_motif(std::size_t dim, const std::vector<std::vector<double>>& basis,
                   const std::vector<std::vector<double>>& motif, const Window& window,
                   std::string label, const Tolerance& tol = {});

// Centers at the even integers of a 1-D window.
Packing generate_apeirogon(const Window& window);

// Cartesian product of two normalized packings; the contact graph is the
// Cartesian product of the factor graphs. Throws NormalizationRequired.
Packing product_packing(const Packing& p, const Packing& q, const Tolerance& tol = {});

// Triangular lattice with spacing 2; not totally separable.
Packing generate_triangular(const Window& window);

OrbitSpec orbit_spec_for(const CatalogEntry& entry);

// A catalog packing on `window` in normalized units. Throws
// UnsupportedConstruction for catalog-only entries and for orbit entries whose
// seeds fail the packing audit, UnknownEntry for unknown ids.
Packing generate_named(std::string_view id, const Window& window, const Tolerance& tol = {});

// Audits an orbit entry on a probe window; cached per id.
bool orbit_entry_validated(const CatalogEntry& entry);

// Family for sep_measure_sequence: catalog ids plus "triangular".
PackingFamily named_family(std::string_view id, double margin = kDefaultMargin);

}  // namespace sepack
