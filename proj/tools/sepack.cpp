// Command-line front end: generate, verify, measure and render packings.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sepack/catalog.hpp"
#include "sepack/contact_number.hpp"
#include "sepack/diagonal.hpp"
#include "sepack/error.hpp"
#include "sepack/generators.hpp"
#include "sepack/io.hpp"
#include "sepack/separability.hpp"

namespace {

using namespace sepack;

constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 3;

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<double> parse_windows(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(ErrorKind::MalformedInput, "bad window value '" + item + "' in --windows");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and measure totally separable sphere packings"};
    app.require_subcommand(1);

    std::string name, out_path, in_path, report_path, windows;
    double window = 0.0;
    double margin = kDefaultMargin;
    std::size_t d = 2, depth = 1;
    std::int64_t n = 1;
    std::uint64_t max_spheres = DiagonalOptions{}.max_spheres;
    bool oracle = false, full_audit = false, no_edges = false, tangents = false;

    auto* gen = app.add_subcommand("gen", "Generate a window of a catalogued packing");
    gen->add_option("--name", name, "Catalog id (e.g. K6)")->required();
    gen->add_option("--window", window, "Half-width L of the window [-L, L]^d")->required()->check(
        CLI::PositiveNumber);
    gen->add_option("--margin", margin, "Boundary margin excluded from regularity checks")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--out", out_path, "Packing file to write")->required();

    auto* diag = app.add_subcommand("construct-diagonal", "Diagonal cube construction");
    diag->add_option("--d", d, "Dimension")->required();
    diag->add_option("--depth", depth, "Number of generations")->required();
    diag->add_option("--out", out_path, "Packing file to write")->required();
    diag->add_option("--max-spheres", max_spheres, "Sphere budget");

    auto* contact = app.add_subcommand("contact-opt", "Contact-maximizing lattice packing of n spheres");
    contact->add_option("--n", n, "Number of spheres")->required();
    contact->add_option("--d", d, "Dimension")->required();
    contact->add_flag("--oracle", oracle, "Run the exhaustive polyomino oracle when within limits");
    contact->add_option("--out", out_path, "Packing file to write")->required();

    auto* verify = app.add_subcommand("verify", "Audit a packing file and write a JSON report");
    verify->add_option("file", in_path, "Packing file")->required();
    verify->add_flag("--full-audit", full_audit, "Record every offending sphere per dirty contact");
    verify->add_option("--report", report_path, "Report path ('-' for stdout)")->required();

    auto* measure = app.add_subcommand("measure", "Print the separability measure of a packing file");
    measure->add_option("file", in_path, "Packing file")->required();

    auto* seq = app.add_subcommand("sep-sequence", "Separability measure over growing windows");
    seq->add_option("--name", name, "Catalog id, 'triangular' or 'mixed-tail'")->required();
    seq->add_option("--windows", windows, "Comma-separated half-widths, e.g. 6,10,14")->required();

    auto* formulas = app.add_subcommand("formulas", "Contact-number formulas");
    formulas->add_option("--n", n, "Number of spheres")->required();
    formulas->add_option("--d", d, "Dimension")->required();

    auto* render = app.add_subcommand("render", "Render a 2-D packing file as SVG");
    render->add_option("file", in_path, "Packing file")->required();
    render->add_option("--out", out_path, "SVG path")->required();
    render->add_flag("--no-edges", no_edges, "Omit contact-graph edges");
    render->add_flag("--tangents", tangents, "Draw tangent lines at contacts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const Packing p = generate_named(name, Window::cube(Catalog::builtin().at(name).dimension, window, margin));
            write_packing_file(out_path, p);
            std::cout << "wrote " << p.size() << " spheres (" << p.label() << ", d = " << p.dimension() << ") to "
                      << out_path << "\n";
        } else if (*diag) {
            const Packing p = diagonal_construction(d, depth, DiagonalOptions{max_spheres});
            write_packing_file(out_path, p);
            std::cout << "wrote " << p.size() << " spheres (" << p.label() << ") to " << out_path << "\n";
        } else if (*contact) {
            Packing p;
            const ContactRow row = contact_row(n, static_cast<int>(d), oracle, &p);
            write_packing_file(out_path, p);
            std::cout << format_contact_table({row});
            if (!row.note.empty()) std::cout << row.note << "\n";
            if (row.oracle && *row.oracle != row.achieved) {
                std::cerr << "achieved contact count differs from the oracle\n";
                return kExitCheckFailed;
            }
        } else if (*verify) {
            SeparabilityOptions opts;
            opts.full_audit = full_audit;
            const VerifyReport r = verify_packing(read_packing_file(in_path), {}, opts);
            const std::string json = report_to_json(r);
            if (report_path == "-") {
                std::cout << json;
            } else {
                write_text_file(report_path, json);
            }
            const std::string failures = r.passed() ? std::string{} : r.audit.failure_summary();
            std::cerr << (r.passed() ? "PASS" : "FAIL") << ": " << r.label << ", " << r.audit.sphere_count
                      << " spheres, " << r.audit.contacts << " contacts, sep "
                      << r.audit.separability.clean_edges << "/" << r.audit.separability.total_edges
                      << (failures.empty() ? "" : " (" + failures + ")") << "\n";
            if (!r.passed()) return kExitCheckFailed;
        } else if (*measure) {
            const Packing p = read_packing_file(in_path);
            const SeparabilityReport s = separability_measure(p);
            std::cout << "sep " << fixed(s.sep()) << " (" << s.clean_edges << "/" << s.total_edges << ") status "
                      << to_string(s.status) << "\n";
        } else if (*seq) {
            const SepSequence s = sep_measure_sequence(named_family(name), parse_windows(windows));
            std::cout << "L\tclean/total\tsep\n";
            for (std::size_t i = 0; i < s.windows.size(); ++i) {
                const auto& r = s.reports[i];
                std::cout << fixed(s.windows[i], 3) << "\t" << r.clean_edges << "/" << r.total_edges << "\t"
                          << fixed(r.sep()) << "\n";
            }
            std::cout << (s.stable ? "stable" : "not stable") << "\n";
        } else if (*formulas) {
            std::cout << "c2_formula " << c2_formula(n) << "\n";
            std::cout << "cd_upper_bound " << cd_upper_bound(n, static_cast<int>(d)) << "\n";
        } else if (*render) {
            SvgOptions opts;
            opts.contact_edges = !no_edges;
            opts.tangent_lines = tangents;
            write_text_file(out_path, render_svg(read_packing_file(in_path), opts));
        }
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
