#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepack/audit.hpp"
#include "sepack/diagonal.hpp"
#include "sepack/packing.hpp"

namespace sepack {

inline constexpr int kPackingFormatVersion = 1;

// Line-oriented text format, one packing per file:
//
//   sepack-packing
//   format_version 1
//   dimension 2
//   radius 1
//   label K6
//   window_lower -12 -12
//   window_upper 12 12
//   window_margin 3
//   count 2
//   -1.4142135623730951 0
//   1.4142135623730951 0
//   end
//
// Reals carry 17 significant digits so decode(encode(p)) == p bit for bit.
std::string encode_packing(const Packing& p);

// Throws ParseError (with byte offset) on malformed input and Version on an
// unknown format_version.
Packing decode_packing(std::string_view text);

void write_packing_file(const std::filesystem::path& path, const Packing& p);
Packing read_packing_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct SvgOptions {
    bool contact_edges = true;
    bool tangent_lines = false;
    double pixels_per_unit = 20.0;
};

// 2-D only; throws UnsupportedDimension otherwise. Output is deterministic.
std::string render_svg(const Packing& p, const SvgOptions& options = {}, const Tolerance& tol = {});

// NotClaimed: contact-number constructions, judged on their contact count
// instead of a common degree.
enum class RegularitySource { Catalog, DiagonalSaturation, Observed, NotClaimed };

// Contact count of a quasi-square or box packing against its formula.
struct ContactTarget {
    std::int64_t n = 0;
    int d = 2;
    std::int64_t expected = 0;  // c2_formula for d = 2, cd_upper_bound otherwise
    bool exact = true;          // equality required; otherwise achieved <= expected
};

std::string_view to_string(RegularitySource source);

struct VerifyReport {
    std::string label;
    std::size_t dimension = 0;
    PackingAudit audit;
    RegularitySource regularity_source = RegularitySource::Observed;
    std::optional<SaturationReport> saturation;  // diagonal constructions only
    std::optional<ContactTarget> contact_target;  // quasi-square and box packings only
    double seconds = 0.0;

    bool passed(const Tolerance& tol = {}) const;
};

// Audits a packing. Catalog labels fix the expected k; labels written by the
// diagonal construction switch regularity to the saturation criterion.
VerifyReport verify_packing(const Packing& p, const Tolerance& tol = {}, SeparabilityOptions options = {});

// Structured JSON document with stable field names.
std::string report_to_json(const VerifyReport& report, bool include_timing = true);

struct ContactRow {
    std::int64_t n = 0;
    int d = 2;
    std::int64_t c2 = 0;      // floor(2(n - sqrt n))
    std::int64_t bound = 0;   // floor(d(n - n^((d-1)/d)))
    std::int64_t achieved = 0;  // contacts of the constructed packing
    std::optional<std::int64_t> oracle;
    std::string note;
};

// Builds the quasi-square (d = 2) or box packing and counts its contacts;
// runs the exhaustive oracle when asked and within its limits.
ContactRow contact_row(std::int64_t n, int d, bool run_oracle, Packing* packing_out = nullptr);

std::string format_contact_table(const std::vector<ContactRow>& rows);

}  // namespace sepack
