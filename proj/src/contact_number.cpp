#include "sepack/contact_number.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "sepack/error.hpp"

namespace sepack {

Polyomino::Polyomino(std::size_t dimension, std::vector<Cell> cells)
    : dim_(dimension), cells_(std::move(cells)) {
    for (const auto& c : cells_) {
        if (c.size() != dim_) throw Error(ErrorKind::MalformedInput, "cell has wrong dimension");
    }
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
        throw Error(ErrorKind::MalformedInput, "polyomino cells must be distinct");
    }
}

std::size_t Polyomino::shared_faces() const {
    std::size_t shared = 0;
    Cell probe;
    for (const auto& c : cells_) {
        for (std::size_t a = 0; a < dim_; ++a) {
            probe = c;
            ++probe[a];
            if (std::binary_search(cells_.begin(), cells_.end(), probe)) ++shared;
        }
    }
    return shared;
}

std::vector<std::int64_t> BoxSpec::sides() const {
    std::vector<std::int64_t> s(dimension);
    for (std::size_t a = 0; a < dimension; ++a) s[a] = k + delta[a];
    return s;
}

std::int64_t BoxSpec::volume() const {
    std::int64_t v = 1;
    for (auto s : sides()) v *= s;
    return v;
}

std::uint64_t integer_root(unsigned __int128 m, int d) {
    if (d < 1) throw Error(ErrorKind::Domain, "root degree must be positive");
    // pow(r, d) <= m without overflow.
    auto fits = [&](unsigned __int128 r) {
        unsigned __int128 acc = 1;
        for (int i = 0; i < d; ++i) {
            if (r != 0 && acc > m / r) return false;
            acc *= r;
        }
        return acc <= m;
    };
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(m), 1.0L / d));
    while (r > 0 && !fits(r)) --r;
    while (fits(static_cast<unsigned __int128>(r) + 1)) ++r;
    return r;
}

std::int64_t c2_formula(std::int64_t n) {
    return cd_upper_bound(n, 2);
}

std::int64_t cd_upper_bound(std::int64_t n, int d) {
    if (n < 1) throw Error(ErrorKind::Domain, "contact-number formulas need n >= 1");
    if (d < 2) throw Error(ErrorKind::Domain, "contact-number bound needs d >= 2");
    // d * n^((d-1)/d) = (d^d * n^(d-1))^(1/d); floor(d n - x) = d n - ceil(x).
    constexpr auto kMax = std::numeric_limits<unsigned __int128>::max();
    unsigned __int128 m = 1;
    auto mul = [&](std::uint64_t f) {
        if (m > kMax / f) throw Error(ErrorKind::SizeLimit, "contact-number bound overflows 128-bit arithmetic");
        m *= f;
    };
    for (int i = 0; i < d; ++i) mul(static_cast<std::uint64_t>(d));
    for (int i = 0; i < d - 1; ++i) mul(static_cast<std::uint64_t>(n));
    const std::uint64_t root = integer_root(m, d);
    unsigned __int128 power = 1;
    for (int i = 0; i < d; ++i) power *= root;
    const std::int64_t ceil_root = static_cast<std::int64_t>(root) + (power == m ? 0 : 1);
    return static_cast<std::int64_t>(d) * n - ceil_root;
}

Packing lift_to_packing(const Polyomino& poly, std::string label) {
    const std::size_t d = poly.dimension();
    std::vector<double> coords;
    coords.reserve(poly.area() * d);
    for (const auto& c : poly.cells()) {
        for (int v : c) coords.push_back(2.0 * v + 1.0);
    }
    Window w = Window::bounding(d, coords, 1.0);
    return Packing(d, std::move(coords), std::move(w), std::move(label));
}

ContactConstruction quasi_square_packing(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::Domain, "quasi-square packing needs n >= 1");
    const auto floor_root = static_cast<std::int64_t>(integer_root(static_cast<unsigned __int128>(n), 2));
    const std::int64_t ceil_root = floor_root * floor_root == n ? floor_root : floor_root + 1;

    std::int64_t best_cols = 0;
    std::int64_t best_shared = -1;
    for (std::int64_t a : {floor_root, ceil_root}) {
        const std::int64_t rows = n / a;
        const std::int64_t rest = n % a;
        std::int64_t shared = rows * (a - 1) + (rows - 1) * a;
        if (rest > 0) shared += (rest - 1) + rest;
        if (shared > best_shared) {
            best_shared = shared;
            best_cols = a;
        }
    }
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        cells.push_back({static_cast<int>(i % best_cols), static_cast<int>(i / best_cols)});
    }
    ContactConstruction out;
    out.polyomino = Polyomino(2, std::move(cells));
    out.packing = lift_to_packing(out.polyomino, "quasi-square-" + std::to_string(n));
    return out;
}

ContactConstruction box_packing(std::int64_t n, int d) {
    if (n < 1) throw Error(ErrorKind::Domain, "box packing needs n >= 1");
    if (d < 2) throw Error(ErrorKind::Domain, "box packing needs d >= 2");
    const auto dim = static_cast<std::size_t>(d);
    const auto k = static_cast<std::int64_t>(integer_root(static_cast<unsigned __int128>(n), d));

    std::int64_t best_slack = std::numeric_limits<std::int64_t>::max();
    std::vector<BoxSpec> candidates;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        BoxSpec spec;
        spec.dimension = dim;
        spec.k = k;
        spec.delta.resize(dim);
        for (std::size_t a = 0; a < dim; ++a) spec.delta[a] = static_cast<int>((mask >> a) & 1u);
        const std::int64_t slack = spec.volume() - n;
        if (slack < 0) continue;
        spec.remainder = slack;
        if (slack < best_slack) {
            best_slack = slack;
            candidates.clear();
        }
        if (slack == best_slack) candidates.push_back(std::move(spec));
    }

    ContactConstruction best;
    std::size_t best_shared = 0;
    bool have = false;
    for (const BoxSpec& spec : candidates) {
        const auto sides = spec.sides();
        std::vector<Cell> cells;
        Cell c(dim, 0);
        for (std::int64_t i = 0; i < n; ++i) {
            cells.push_back(c);
            for (std::size_t a = dim; a-- > 0;) {
                if (++c[a] < sides[a]) break;
                c[a] = 0;
            }
        }
        Polyomino poly(dim, std::move(cells));
        const std::size_t shared = poly.shared_faces();
        if (!have || shared > best_shared) {
            have = true;
            best_shared = shared;
            best.polyomino = std::move(poly);
            best.box = spec;
        }
    }
    best.packing = lift_to_packing(best.polyomino, "box-" + std::to_string(n) + "-d" + std::to_string(d));
    return best;
}

namespace {

struct EnumerationResult {
    std::size_t count = 0;
    std::int64_t max_shared = 0;
};

// Cells packed as signed bytes; the canonical form is the lexicographically
// sorted translate with every coordinate minimum at zero.
using Shape = std::string;

Shape canonical(std::vector<Cell> cells, std::size_t d) {
    Cell lo(d, std::numeric_limits<int>::max());
    for (const auto& c : cells) {
        for (std::size_t a = 0; a < d; ++a) lo[a] = std::min(lo[a], c[a]);
    }
    for (auto& c : cells) {
        for (std::size_t a = 0; a < d; ++a) c[a] -= lo[a];
    }
    std::sort(cells.begin(), cells.end());
    Shape s;
    s.reserve(cells.size() * d);
    for (const auto& c : cells) {
        for (int v : c) s.push_back(static_cast<char>(v));
    }
    return s;
}

std::vector<Cell> decode(const Shape& s, std::size_t d) {
    std::vector<Cell> cells(s.size() / d, Cell(d));
    for (std::size_t i = 0; i < s.size(); ++i) cells[i / d][i % d] = static_cast<signed char>(s[i]);
    return cells;
}

void check_limits(std::int64_t n, int d) {
    if (n < 1) throw Error(ErrorKind::Domain, "polyomino enumeration needs n >= 1");
    if (d == 2 && n <= 10) return;
    if (d == 3 && n <= 8) return;
    throw Error(ErrorKind::EnumerationLimit,
                "exhaustive enumeration is limited to n <= 10 for d = 2 and n <= 8 for d = 3 (got n = " +
                    std::to_string(n) + ", d = " + std::to_string(d) + ")");
}

// Grows every fixed animal one cell at a time from a seeded unit cell.
EnumerationResult enumerate(std::int64_t n, int d) {
    check_limits(n, d);
    const auto dim = static_cast<std::size_t>(d);
    std::unordered_set<Shape> level{canonical({Cell(dim, 0)}, dim)};
    for (std::int64_t size = 1; size < n; ++size) {
        std::unordered_set<Shape> next;
        for (const Shape& s : level) {
            const auto cells = decode(s, dim);
            const std::set<Cell> present(cells.begin(), cells.end());
            for (const auto& c : cells) {
                for (std::size_t a = 0; a < dim; ++a) {
                    for (int step : {-1, 1}) {
                        Cell grown = c;
                        grown[a] += step;
                        if (present.count(grown)) continue;
                        auto extended = cells;
                        extended.push_back(std::move(grown));
                        next.insert(canonical(std::move(extended), dim));
                    }
                }
            }
        }
        level = std::move(next);
    }
    EnumerationResult result;
    result.count = level.size();
    for (const Shape& s : level) {
        const Polyomino poly(dim, decode(s, dim));
        result.max_shared = std::max(result.max_shared, static_cast<std::int64_t>(poly.shared_faces()));
    }
    return result;
}

}  // namespace

std::int64_t polyomino_oracle(std::int64_t n, int d) {
    return enumerate(n, d).max_shared;
}

std::size_t count_fixed_polyominoes(std::int64_t n, int d) {
    return enumerate(n, d).count;
}

}  // namespace sepack
