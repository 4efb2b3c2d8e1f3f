#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepack {

enum class ConstructionKind { Motif, Product, Orbit, CatalogOnly };

std::string_view to_string(ConstructionKind kind);

// Orbit parameters as stored in the catalog file: numbers are exact
// a + b*sqrt(2) pairs and get expanded to doubles on load.
struct OrbitParameters {
    std::vector<double> seed;
    double period = 0.0;
    std::vector<std::vector<double>> centering;
    std::size_t expected_orbit_size = 0;
    bool anchor_at_seed = false;
};

struct CatalogEntry {
    std::string id;
    std::string name;
    std::size_t dimension = 0;
    std::size_t regularity = 0;
    ConstructionKind construction = ConstructionKind::CatalogOnly;
    std::vector<std::string> factors;  // product entries; "apeirogon" is the 1-D factor
    bool inferred = false;             // factor table read off the tessellation name
    std::optional<OrbitParameters> orbit;
};

class Catalog {
public:
    // Parses the JSON catalog document; throws Parse on malformed content.
    static Catalog parse(std::string_view json_text);

    // The catalog compiled into the library from data/catalog.json.
    static const Catalog& builtin();

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    // Throws UnknownEntry listing the valid ids.
    const CatalogEntry& at(std::string_view id) const;
    const CatalogEntry* find(std::string_view id) const;

    std::vector<std::string> ids() const;

private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace sepack
