#include "sepack/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "sepack/catalog.hpp"
#include "sepack/contact_number.hpp"
#include "sepack/error.hpp"

namespace sepack {

namespace {

std::string format_real(double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

void append_reals(std::string& out, std::span<const double> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ' ';
        out += format_real(values[k]);
    }
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

// Splits the input into lines of whitespace-separated tokens, skipping blank
// lines and '#' comments.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next non-empty line; empty vector at end of input.
    std::vector<Token> next() {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::vector<Token> tokens;
            std::size_t i = pos_;
            while (i < end) {
                while (i < end && is_space(text_[i])) ++i;
                if (i >= end) break;
                const std::size_t start = i;
                while (i < end && !is_space(text_[i])) ++i;
                tokens.push_back({text_.substr(start, i - start), start});
            }
            pos_ = end + 1;
            if (tokens.empty() || tokens.front().text.front() == '#') continue;
            return tokens;
        }
        return {};
    }

    std::size_t end_offset() const { return text_.size(); }
    std::string_view rest_of_line(const Token& after) const {
        const std::size_t start = after.offset + after.text.size();
        std::size_t end = text_.find('\n', start);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view s = text_.substr(start, end - start);
        while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
        while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
        return s;
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

double parse_real(const Token& t) {
    double v = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError(t.offset, "expected a real number, got '" + std::string(t.text) + "'");
    }
    return v;
}

std::size_t parse_count(const Token& t) {
    std::size_t v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(t.offset, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
    }
    return v;
}

std::vector<Token> expect_line(LineReader& in, std::string_view keyword) {
    auto tokens = in.next();
    if (tokens.empty()) {
        throw ParseError(in.end_offset(), "unexpected end of input, expected '" + std::string(keyword) + "'");
    }
    if (tokens.front().text != keyword) {
        throw ParseError(tokens.front().offset, "expected '" + std::string(keyword) + "', got '" +
                                                    std::string(tokens.front().text) + "'");
    }
    return tokens;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t values) {
    if (tokens.size() != values + 1) {
        throw ParseError(tokens.front().offset, "'" + std::string(tokens.front().text) + "' expects " +
                                                    std::to_string(values) + " value(s), got " +
                                                    std::to_string(tokens.size() - 1));
    }
}

std::vector<double> parse_vector(const std::vector<Token>& tokens, std::size_t dim) {
    expect_arity(tokens, dim);
    std::vector<double> v;
    for (std::size_t k = 1; k < tokens.size(); ++k) v.push_back(parse_real(tokens[k]));
    return v;
}

}  // namespace

std::string encode_packing(const Packing& p) {
    std::string out;
    out += "sepack-packing\n";
    out += "format_version " + std::to_string(kPackingFormatVersion) + "\n";
    out += "dimension " + std::to_string(p.dimension()) + "\n";
    out += "radius " + format_real(p.radius()) + "\n";
    std::string label = p.label();
    std::replace(label.begin(), label.end(), '\n', ' ');  // the label occupies one line
    out += "label " + label + "\n";
    out += "window_lower ";
    append_reals(out, p.window().lower);
    out += "\nwindow_upper ";
    append_reals(out, p.window().upper);
    out += "\nwindow_margin " + format_real(p.window().margin) + "\n";
    out += "count " + std::to_string(p.size()) + "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        append_reals(out, p.center(i));
        out += '\n';
    }
    out += "end\n";
    return out;
}

Packing decode_packing(std::string_view text) {
    LineReader in(text);
    expect_line(in, "sepack-packing");
    const auto version = expect_line(in, "format_version");
    expect_arity(version, 1);
    if (parse_count(version[1]) != static_cast<std::size_t>(kPackingFormatVersion)) {
        throw Error(ErrorKind::Version, "unsupported packing format_version " + std::string(version[1].text) +
                                            " (this build reads version " +
                                            std::to_string(kPackingFormatVersion) + ")");
    }
    const auto dim_line = expect_line(in, "dimension");
    expect_arity(dim_line, 1);
    const std::size_t dim = parse_count(dim_line[1]);
    if (dim == 0) throw ParseError(dim_line[1].offset, "dimension must be at least 1");
    const auto radius_line = expect_line(in, "radius");
    expect_arity(radius_line, 1);
    const double radius = parse_real(radius_line[1]);
    const auto label_line = expect_line(in, "label");
    const std::string label(label_line.size() > 1 ? in.rest_of_line(label_line.front()) : std::string_view{});

    Window w;
    const auto lower_line = expect_line(in, "window_lower");
    w.lower = parse_vector(lower_line, dim);
    const auto upper_line = expect_line(in, "window_upper");
    w.upper = parse_vector(upper_line, dim);
    const auto margin_line = expect_line(in, "window_margin");
    expect_arity(margin_line, 1);
    w.margin = parse_real(margin_line[1]);

    const auto count_line = expect_line(in, "count");
    expect_arity(count_line, 1);
    const std::size_t count = parse_count(count_line[1]);

    std::vector<double> coords;
    coords.reserve(count * dim);
    for (std::size_t i = 0; i < count; ++i) {
        auto tokens = in.next();
        if (tokens.empty()) {
            throw ParseError(in.end_offset(), "unexpected end of input after " + std::to_string(i) + " of " +
                                                  std::to_string(count) + " centers");
        }
        if (tokens.size() != dim) {
            throw ParseError(tokens.front().offset, "center line has " + std::to_string(tokens.size()) +
                                                        " coordinates, expected " + std::to_string(dim));
        }
        for (const auto& t : tokens) coords.push_back(parse_real(t));
    }
    expect_line(in, "end");
    if (auto extra = in.next(); !extra.empty()) {
        throw ParseError(extra.front().offset, "trailing content after 'end'");
    }
    try {
        return Packing(dim, std::move(coords), std::move(w), label, radius);
    } catch (const Error& e) {
        throw ParseError(lower_line.front().offset, std::string("invalid packing: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

void write_packing_file(const std::filesystem::path& path, const Packing& p) {
    write_text_file(path, encode_packing(p));
}

Packing read_packing_file(const std::filesystem::path& path) {
    return decode_packing(read_text_file(path));
}

std::string_view to_string(RegularitySource source) {
    switch (source) {
        case RegularitySource::Catalog: return "catalog";
        case RegularitySource::DiagonalSaturation: return "diagonal-saturation";
        case RegularitySource::Observed: return "observed";
        case RegularitySource::NotClaimed: return "not-claimed";
    }
    return "unknown";
}

bool VerifyReport::passed(const Tolerance& tol) const {
    if (contact_target) {
        const auto achieved = static_cast<std::int64_t>(audit.contacts);
        const bool count_ok = contact_target->exact ? achieved == contact_target->expected
                                                    : achieved <= contact_target->expected;
        if (!count_ok) return false;
    }
    if (regularity_source == RegularitySource::NotClaimed) {
        PackingAudit copy = audit;
        copy.regularity = RegularityVerdict{Regularity::Regular, 0, std::nullopt, 0};
        // An isolated sphere has nothing to certify.
        if (copy.separability.status == SeparabilityStatus::NoEdges) {
            copy.separability.status = SeparabilityStatus::WindowCertified;
        }
        return copy.passes(tol);
    }
    if (!saturation) return audit.passes(tol);
    // Diagonal constructions are judged on saturated spheres only.
    PackingAudit copy = audit;
    copy.regularity.status = saturation->status;
    copy.regularity.offending_vertex.reset();
    if (!saturation->deviations.empty()) {
        copy.regularity.offending_vertex = saturation->deviations.front();
    }
    return copy.passes(tol);
}

VerifyReport verify_packing(const Packing& p, const Tolerance& tol, SeparabilityOptions options) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.label = p.label();
    report.dimension = p.dimension();

    std::optional<std::size_t> k;
    if (const CatalogEntry* entry = Catalog::builtin().find(p.label());
        entry && entry->dimension == p.dimension()) {
        k = entry->regularity;
        report.regularity_source = RegularitySource::Catalog;
    }
    report.audit = audit_packing(p, k, tol, options);

    static const std::regex diagonal_label(R"(diagonal:d=(\d+):depth=(\d+))");
    std::smatch m;
    if (std::regex_match(p.label(), m, diagonal_label) && report.audit.validation.ok) {
        const std::size_t d = std::stoul(m[1]);
        const std::size_t depth = std::stoul(m[2]);
        try {
            if (d == p.dimension() && diagonal_cube_count(d, depth) <= 200'000) {
                const DiagonalState state = diagonal_construction_state(d, depth);
                bool same = state.packing.size() == p.size();
                for (std::size_t i = 0; same && i < p.size(); ++i) {
                    same = distance(state.packing.center(i), p.center(i)) <= tol.contact;
                }
                if (same) {
                    report.saturation = interior_regularity_check(state, tol);
                    report.regularity_source = RegularitySource::DiagonalSaturation;
                }
            }
        } catch (const Error&) {
            report.saturation.reset();
        }
    }
    static const std::regex quasi_label(R"(quasi-square-(\d+))");
    static const std::regex box_label(R"(box-(\d+)-d(\d+))");
    if (std::regex_match(p.label(), m, quasi_label) && p.dimension() == 2) {
        const std::int64_t n = std::stoll(m[1]);
        if (n >= 1 && static_cast<std::size_t>(n) == p.size()) {
            report.contact_target = ContactTarget{n, 2, c2_formula(n), true};
        }
    } else if (std::regex_match(p.label(), m, box_label)) {
        const std::int64_t n = std::stoll(m[1]);
        const int d = std::stoi(m[2]);
        if (n >= 1 && d >= 2 && static_cast<std::size_t>(d) == p.dimension() &&
            static_cast<std::size_t>(n) == p.size()) {
            report.contact_target = ContactTarget{n, d, cd_upper_bound(n, d), false};
        }
    }
    if (report.contact_target) report.regularity_source = RegularitySource::NotClaimed;

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const VerifyReport& r, bool include_timing) {
    using nlohmann::ordered_json;
    const PackingAudit& a = r.audit;
    ordered_json doc;
    doc["format"] = "sepack-verify-report";
    doc["version"] = 1;
    doc["label"] = r.label;
    doc["dimension"] = r.dimension;
    doc["spheres"] = a.sphere_count;
    doc["passed"] = r.passed();
    doc["valid"] = a.validation.ok;
    if (!a.validation.ok) {
        doc["overlap"] = {{"pair", {a.validation.violating_pair->first, a.validation.violating_pair->second}},
                          {"distance", a.validation.distance}};
    }
    doc["min_distance"] = a.min_distance ? ordered_json(*a.min_distance) : ordered_json(nullptr);
    doc["contacts"] = a.contacts;

    auto histogram = [](const std::map<std::size_t, std::size_t>& h) {
        ordered_json out = ordered_json::object();
        for (const auto& [deg, count] : h) out[std::to_string(deg)] = count;
        return out;
    };
    doc["degree_histogram"] = {{"interior", histogram(a.interior_degrees)},
                               {"boundary", histogram(a.boundary_degrees)}};

    ordered_json reg;
    reg["source"] = std::string(to_string(r.regularity_source));
    if (r.saturation) {
        const auto& s = *r.saturation;
        reg["status"] = s.status == Regularity::Regular     ? "regular"
                        : s.status == Regularity::Irregular ? "irregular"
                                                            : "inconclusive";
        reg["k"] = s.expected_degree;
        reg["checked"] = s.saturated.size();
        reg["deviations"] = s.deviations;
    } else {
        const auto& v = a.regularity;
        reg["status"] = v.status == Regularity::Regular     ? "regular"
                        : v.status == Regularity::Irregular ? "irregular"
                                                            : "inconclusive";
        reg["k"] = a.k ? ordered_json(*a.k) : ordered_json(nullptr);
        reg["checked"] = v.checked;
        if (v.offending_vertex) {
            reg["offending_vertex"] = *v.offending_vertex;
            reg["offending_degree"] = v.offending_degree;
        }
    }
    doc["regularity"] = reg;
    if (r.contact_target) {
        const auto& t = *r.contact_target;
        doc["contact_number"] = {{"n", t.n},
                                 {"d", t.d},
                                 {"achieved", a.contacts},
                                 {t.d == 2 ? "c2_formula" : "cd_upper_bound", t.expected},
                                 {"relation", t.exact ? "equal" : "at-most"}};
    }

    doc["triangle"] = a.triangle ? ordered_json(*a.triangle) : ordered_json(nullptr);

    const auto& s = a.separability;
    ordered_json sep;
    sep["status"] = std::string(to_string(s.status));
    sep["clean_edges"] = s.clean_edges;
    sep["total_edges"] = s.total_edges;
    sep["sep"] = s.sep();
    sep["sep_fraction"] = std::to_string(s.clean_edges) + "/" + std::to_string(s.total_edges);
    ordered_json violations = ordered_json::array();
    for (const auto& v : s.violations) violations.push_back({v.edge.first, v.edge.second, v.sphere});
    sep["violations"] = violations;
    doc["separability"] = sep;

    if (include_timing) doc["timing_seconds"] = r.seconds;
    return doc.dump(2) + "\n";
}

ContactRow contact_row(std::int64_t n, int d, bool run_oracle, Packing* packing_out) {
    ContactRow row;
    row.n = n;
    row.d = d;
    row.c2 = c2_formula(n);
    row.bound = cd_upper_bound(n, d);
    const ContactConstruction built = d == 2 ? quasi_square_packing(n) : box_packing(n, d);
    row.achieved = static_cast<std::int64_t>(contact_count(build_contact_graph(built.packing)));
    if (run_oracle) {
        try {
            row.oracle = polyomino_oracle(n, d);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::EnumerationLimit) throw;
            row.note = "oracle skipped: " + std::string(e.what());
        }
    }
    if (packing_out) *packing_out = built.packing;
    return row;
}

std::string format_contact_table(const std::vector<ContactRow>& rows) {
    std::string out = "n\td\tc2_formula\tcd_upper_bound\tachieved\toracle\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + '\t' + std::to_string(r.d) + '\t' + std::to_string(r.c2) + '\t' +
               std::to_string(r.bound) + '\t' + std::to_string(r.achieved) + '\t' +
               (r.oracle ? std::to_string(*r.oracle) : std::string("-")) + '\n';
    }
    return out;
}

}  // namespace sepack
