#include <cstdio>
#include <string>

#include "sepack/contact_graph.hpp"
#include "sepack/error.hpp"
#include "sepack/io.hpp"
#include "sepack/separability.hpp"

namespace sepack {

namespace {

std::string num(double v) {
    char buf[32];
    if (v == 0.0) v = 0.0;  // drop negative zero
    const int len = std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Packing& p, const SvgOptions& options, const Tolerance& tol) {
    if (p.dimension() != 2) {
        throw Error(ErrorKind::UnsupportedDimension,
                    "SVG rendering needs a 2-dimensional packing, got dimension " + std::to_string(p.dimension()));
    }
    if (!(options.pixels_per_unit > 0.0)) {
        throw Error(ErrorKind::MalformedInput, "pixels_per_unit must be positive");
    }
    const double r = p.radius();
    const Window& w = p.window();
    const double x0 = w.lower[0] - r;
    const double y0 = w.lower[1] - r;
    const double width = w.upper[0] - w.lower[0] + 2 * r;
    const double height = w.upper[1] - w.lower[1] + 2 * r;
    // y grows downward in SVG; flip so the picture matches the coordinates.
    auto sx = [&](double x) { return num(x - x0); };
    auto sy = [&](double y) { return num(y0 + height - y); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) + " " + num(height) +
           "\" width=\"" + num(width * options.pixels_per_unit) + "\" height=\"" +
           num(height * options.pixels_per_unit) + "\">\n";
    out += "<title>" + (p.label().empty() ? std::string("packing") : escape(p.label())) + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"white\"/>\n";

    out += "<g id=\"spheres\" fill=\"#dfe8f4\" stroke=\"#1f3b63\" stroke-width=\"0.04\">\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto c = p.center(i);
        out += "<circle cx=\"" + sx(c[0]) + "\" cy=\"" + sy(c[1]) + "\" r=\"" + num(r) + "\"/>\n";
    }
    out += "</g>\n";

    if (!p.empty() && (options.contact_edges || options.tangent_lines)) {
        const ContactGraph g = build_contact_graph(p, tol);
        if (options.contact_edges) {
            out += "<g id=\"contacts\" stroke=\"#c0392b\" stroke-width=\"0.06\">\n";
            for (const auto& [i, j] : g.edges()) {
                const auto a = p.center(i);
                const auto b = p.center(j);
                out += "<line x1=\"" + sx(a[0]) + "\" y1=\"" + sy(a[1]) + "\" x2=\"" + sx(b[0]) + "\" y2=\"" +
                       sy(b[1]) + "\"/>\n";
            }
            out += "</g>\n";
        }
        if (options.tangent_lines) {
            out += "<g id=\"tangents\" stroke=\"#27ae60\" stroke-width=\"0.03\" stroke-dasharray=\"0.2 0.1\">\n";
            for (const auto& e : g.edges()) {
                const TangentContact h = tangent_hyperplane(p, e, tol);
                const auto a = p.center(e.first);
                const auto b = p.center(e.second);
                const double mx = 0.5 * (a[0] + b[0]);
                const double my = 0.5 * (a[1] + b[1]);
                // Segment of the tangent line spanning two radii on each side.
                const double tx = -h.normal[1] * 2 * r;
                const double ty = h.normal[0] * 2 * r;
                out += "<line x1=\"" + sx(mx - tx) + "\" y1=\"" + sy(my - ty) + "\" x2=\"" + sx(mx + tx) +
                       "\" y2=\"" + sy(my + ty) + "\"/>\n";
            }
            out += "</g>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sepack
