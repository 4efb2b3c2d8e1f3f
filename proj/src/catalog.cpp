#include "sepack/catalog.hpp"

#include <cmath>
#include <json.hpp>

#include "sepack/error.hpp"
#include "sepack_catalog_data.hpp"

namespace sepack {

std::string_view to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::Motif: return "motif";
        case ConstructionKind::Product: return "product";
        case ConstructionKind::Orbit: return "orbit";
        case ConstructionKind::CatalogOnly: return "catalog-only";
    }
    return "unknown";
}

namespace {

using nlohmann::json;

double surd(const json& pair) {
    if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::Parse, "catalog number must be an [a, b] pair meaning a + b*sqrt(2)");
    }
    return pair[0].get<double>() + pair[1].get<double>() * std::sqrt(2.0);
}

ConstructionKind parse_kind(const std::string& s) {
    if (s == "motif") return ConstructionKind::Motif;
    if (s == "product") return ConstructionKind::Product;
    if (s == "orbit") return ConstructionKind::Orbit;
    if (s == "catalog-only") return ConstructionKind::CatalogOnly;
    throw Error(ErrorKind::Parse, "unknown construction kind '" + s + "'");
}

}  // namespace

Catalog Catalog::parse(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, std::string("catalog is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != 1) {
            throw Error(ErrorKind::Version, "unsupported catalog format_version");
        }
        Catalog catalog;
        for (const json& e : doc.at("entries")) {
            CatalogEntry entry;
            entry.id = e.at("id").get<std::string>();
            entry.name = e.at("name").get<std::string>();
            entry.dimension = e.at("dimension").get<std::size_t>();
            entry.regularity = e.at("regularity").get<std::size_t>();
            const json& c = e.at("construction");
            entry.construction = parse_kind(c.at("kind").get<std::string>());
            if (c.contains("factors")) entry.factors = c.at("factors").get<std::vector<std::string>>();
            entry.inferred = c.value("inferred", false);
            if (entry.construction == ConstructionKind::Orbit) {
                const json& o = c.at("orbit");
                OrbitParameters params;
                for (const json& v : o.at("seed")) params.seed.push_back(surd(v));
                params.period = surd(o.at("period"));
                for (const json& offset : o.at("centering")) {
                    std::vector<double> row;
                    for (const json& v : offset) row.push_back(surd(v));
                    params.centering.push_back(std::move(row));
                }
                params.expected_orbit_size = o.value("expected_orbit_size", std::size_t{0});
                params.anchor_at_seed = o.value("anchor_at_seed", false);
                if (params.seed.size() != entry.dimension) {
                    throw Error(ErrorKind::Parse, "orbit seed of " + entry.id + " has wrong dimension");
                }
                entry.orbit = std::move(params);
            }
            if (entry.construction == ConstructionKind::Product && entry.factors.size() != 2) {
                throw Error(ErrorKind::Parse, "product entry " + entry.id + " needs exactly two factors");
            }
            catalog.entries_.push_back(std::move(entry));
        }
        return catalog;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("catalog schema error: ") + e.what());
    }
}

const Catalog& Catalog::builtin() {
    static const Catalog catalog = parse(kBuiltinCatalogJson);
    return catalog;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
    for (const auto& e : entries_) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

const CatalogEntry& Catalog::at(std::string_view id) const {
    if (const auto* e = find(id)) return *e;
    std::string valid;
    for (const auto& e : entries_) {
        if (!valid.empty()) valid += ", ";
        valid += e.id;
    }
    throw Error(ErrorKind::UnknownEntry,
                "unknown catalog id '" + std::string(id) + "'; valid ids: " + valid);
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.id);
    return out;
}

}  // namespace sepack
