#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace sepack {

// Uniform hash grid over flat d-dimensional coordinates. Any two points at
// distance <= cell_size land in cells whose indices differ by at most one
// along every axis.
class SpatialGrid {
public:
    using Key = std::vector<std::int64_t>;

    SpatialGrid(std::span<const double> coords, std::size_t dim, double cell_size);

    std::size_t dimension() const { return dim_; }
    double cell_size() const { return cell_; }
    std::size_t cell_count() const { return cells_.size(); }

    Key key_of(std::span<const double> point) const;

    // Calls f(j) for every stored index in the 3^d block around `point`.
    template <class F>
    void for_each_candidate(std::span<const double> point, F&& f) const {
        const Key base = key_of(point);
        Key probe = base;
        std::vector<int> offset(dim_, -1);
        while (true) {
            for (std::size_t a = 0; a < dim_; ++a) probe[a] = base[a] + offset[a];
            if (auto it = cells_.find(probe); it != cells_.end()) {
                for (std::size_t j : it->second) f(j);
            }
            std::size_t a = 0;
            for (; a < dim_; ++a) {
                if (++offset[a] <= 1) break;
                offset[a] = -1;
            }
            if (a == dim_) break;
        }
    }

    // Calls f(key, indices) for every occupied cell (unspecified order).
    template <class F>
    void for_each_cell(F&& f) const {
        for (const auto& [key, members] : cells_) f(key, members);
    }

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::uint64_t h = 1469598103934665603ull;
            for (std::int64_t v : k) {
                h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::size_t dim_;
    double cell_;
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
};

}  // namespace sepack
