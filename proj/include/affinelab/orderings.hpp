#pragma once

#include "affinelab/polygon.hpp"
#include "affinelab/primitives.hpp"

namespace affinelab {

using OrderedIndices = std::vector<int>;

// Strict "swept before" order along the line through wp and mu, starting on
// delta's side; same-line ties resolved by the side of the ray toward mu.
class SweepOrder {
public:
    SweepOrder(Point wp, Point mu, Point delta);

    // < 0 iff p is swept strictly before q; throws DegenerateInput when two
    // distinct positions cannot be ordered (both on the sweep line through
    // mu in its direction).
    int compare(Point p, Point q) const;
    bool before(Point p, Point q) const { return compare(p, q) < 0; }

    // Exact: p and q on the same line parallel to ell-perp.
    bool same_line(Point p, Point q) const;
    // +1 on delta's side of ell-perp, -1 opposite, 0 on the line.
    int side(Point p) const;

    Point wp() const { return wp_; }
    Point mu() const { return mu_; }

private:
    Point wp_, mu_, delta_;
    int sdelta_;
};

struct SweepFrame {
    Point wp, mu;  // ell-perp is the oriented line through wp and mu
    int top = -1;      // t: farthest point on delta's side
    int bottom = -1;   // b: farthest point on the opposite side
    bool one_sided = false;  // all points on one side of ell-perp
};

// Computes t and b with the 1e-12 relative tie rejection on each side's
// farthest line.
SweepFrame sweep_frame(const PointSet& s, Point mu, Point delta, int wp_index);

// Angular order around wp starting at the ray wp->mu, counter-clockwise iff
// delta is left of that ray. wp comes first; a point exactly on the start
// ray sorts immediately after it.
OrderedIndices radially_sort(const PointSet& s, Point mu, Point delta, int wp_index);
OrderedIndices radially_sort(const PointSet& s, const PrimitiveTriple& t);

// Offset order from t towards b per SweepOrder.
OrderedIndices sweep_line_sort(const PointSet& s, Point mu, Point delta, int wp_index);
OrderedIndices sweep_line_sort(const PointSet& s, const PrimitiveTriple& t);

// Boundary order of a simple polygon starting at wp, counter-clockwise iff
// delta is left of the ray mu->wp.
OrderedIndices traversal(const Polygon& p, Point mu, Point delta, int wp_index);
OrderedIndices traversal(const Polygon& p, const PrimitiveTriple& t);

}  // namespace affinelab
