#include "sepack/spatial_grid.hpp"

#include "sepack/error.hpp"

namespace sepack {

SpatialGrid::SpatialGrid(std::span<const double> coords, std::size_t dim, double cell_size)
    : dim_(dim), cell_(cell_size) {
    if (dim == 0 || !(cell_size > 0.0)) {
        throw Error(ErrorKind::MalformedInput, "spatial grid needs dim >= 1 and a positive cell size");
    }
    const std::size_t n = coords.size() / dim;
    for (std::size_t i = 0; i < n; ++i) {
        cells_[key_of(coords.subspan(i * dim, dim))].push_back(i);
    }
}

SpatialGrid::Key SpatialGrid::key_of(std::span<const double> point) const {
    Key key(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
        key[a] = static_cast<std::int64_t>(std::floor(point[a] / cell_));
    }
    return key;
}

}  // namespace sepack
