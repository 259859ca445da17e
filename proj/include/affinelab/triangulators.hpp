#pragma once

#include "affinelab/graphs.hpp"
#include "affinelab/orderings.hpp"
#include "affinelab/polygon.hpp"
#include "affinelab/primitives.hpp"

namespace affinelab {

// Graham triangulation over the radial order induced by the triple: visits
// vertex pairs in radial order and keeps every edge that properly crosses
// nothing kept so far (spokes from wp first, then the scan chords).
Triangulation graham_triangulation(const PointSet& s, const PrimitiveTriple& t);

// Interior points of s (not on the convex hull) in the affine-invariant
// insertion order: radial order of the interior subset under its own
// primitives; a two-point subset is ordered by full-set A_S distance to the
// full-set mean.
std::vector<int> interior_insertion_order(const PointSet& s, PrimitiveScheme scheme);

// Fan triangulation of the hull from its minimum-index vertex, then interior
// points inserted in the given order, each splitting its containing triangle.
Triangulation insertion_triangulation(const PointSet& s,
                                      const std::vector<int>& interior_order);
Triangulation insertion_triangulation(const PointSet& s, PrimitiveScheme scheme);

// Exhaustive dual Hamiltonian-path search; at most 14 triangles.
bool dual_hamiltonian_path_exists(const Triangulation& t);

// Hull vertices in affine-invariant boundary order: starting at the hull
// subset's wp, walking the hull cycle counter-clockwise iff delta is left of
// the ray wp->mu (the radial-sort turn direction).
std::vector<int> quadrangulate_hull_order(const PointSet& s, PrimitiveScheme scheme);

// Spoke quadrangulation of an even hull followed by interior insertion:
// each interior point connects to the minimum-order vertex of its containing
// quad and the opposite vertex (to the reflex vertex and its opposite when
// the quad is not convex).
Quadrangulation quadrangulate(const PointSet& s, PrimitiveScheme scheme);

// Ear clipping in traversal order: each pass clips the first ear found.
Triangulation ear_clip(const Polygon& p, const PrimitiveTriple& t);

struct MonotoneDecomposition {
    std::vector<Edge> diagonals;            // polygon vertex index pairs
    std::vector<std::vector<int>> pieces;   // CCW vertex cycles
};

// Cusp vertices of a vertex cycle with respect to the sweep order: reflex
// corners whose neighbors both precede or both follow them in the sweep.
std::vector<int> cycle_cusps(const PointSet& pts, const std::vector<int>& cycle,
                             const SweepOrder& order);
std::vector<int> polygon_cusps(const Polygon& p, const SweepOrder& order);

// Splits p into cusp-free pieces by adding, for every cusp, a diagonal to
// the nearest sweep-compatible vertex on the cusp's far side.
MonotoneDecomposition monotone_decompose(const Polygon& p, Point mu, Point delta,
                                         int wp_index);

// monotone_decompose along the line through wp and mu, then the stack-based
// sweep triangulation of each piece.
Triangulation monotone_triangulate(const Polygon& p, const PrimitiveTriple& t);

}  // namespace affinelab
