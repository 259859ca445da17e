#pragma once

#include <optional>

#include "affinelab/covariance.hpp"

namespace affinelab {

enum class PrimitiveScheme { hull_area, closest_point };

// The non-collinear point triple driving all affine-invariant orderings:
// mu is the ordering anchor, delta the orientation witness, wp the start
// point (a member of the owning set, identified by index).
struct PrimitiveTriple {
    Point mu;
    Point delta;
    Point wp;
    int wp_index = -1;
    std::optional<Point> vartheta;  // largest-triangle barycenter, hull scheme
    PrimitiveScheme scheme = PrimitiveScheme::closest_point;
};

// Hull scheme: vartheta and delta are the barycenters of the largest and
// second-largest triangles spanned by a hull edge and the mean; wp is the
// vertex of the largest triangle on delta's side of the ray mu->vartheta.
// Ties in the areas (1e-12 relative) are degenerate inputs.
PrimitiveTriple primitives_hull_area(const PointSet& s);

// Closest-point scheme: wp is the A_S-closest point to the mean, delta the
// second closest unless collinear with (mu, wp), in which case the third.
PrimitiveTriple primitives_closest(const PointSet& s, const CovarianceModel& model);

PrimitiveTriple compute_primitives(const PointSet& s, PrimitiveScheme scheme);

}  // namespace affinelab
