#pragma once

#include "affinelab/covariance.hpp"

namespace affinelab {

// Closed vertex sequence; vertex i is adjacent to vertices i-1 and i+1 (mod n).
struct Polygon {
    PointSet vertices;

    explicit Polygon(PointSet v);

    int size() const { return static_cast<int>(vertices.size()); }
    Point vertex(int i) const { return vertices[index(i)]; }
    int index(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }

    // +1 counter-clockwise, -1 clockwise; computed exactly from the turn at
    // the lexicographically smallest vertex. Throws DegenerateInput when that
    // turn is flat (fully collinear polygon).
    int orientation() const;

    double signed_area() const;
};

Polygon apply_affine(const AffineMap& alpha, const Polygon& p);

// Exact O(n^2) simplicity test: no proper edge crossings, no vertex in the
// interior of a non-incident edge, no duplicate vertices.
bool polygon_is_simple(const Polygon& p);

// True iff the open segment between vertices i and j is a diagonal: interior
// to the polygon and crossing no boundary edge (exact).
bool is_diagonal(const Polygon& p, int i, int j);

// +1 strictly inside, 0 on the boundary, -1 outside (exact crossing parity).
int point_in_polygon(const Polygon& p, Point q);

}  // namespace affinelab
