#pragma once

#include <functional>

#include "arith.hpp"

namespace margeo {

/// Placing triangulation of full-dimensional points in Z^dim, inserting in
/// the given order. Each simplex lists dim+1 point indices.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<Point>& points, std::size_t dim);

/// Visits the nonzero lattice points of the half-open parallelepiped spanned
/// by (1, y_i) over the simplex vertices, as homogeneous points (height, y).
/// Returns the normalized volume (the number of points including zero).
Integer for_each_parallelepiped_point(const std::vector<Point>& points, const std::vector<std::size_t>& simplex,
                                      const std::function<void(const Point&)>& visit);

}  // namespace margeo
