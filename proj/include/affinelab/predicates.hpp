#pragma once

// Adaptive-precision sign predicates. Each function evaluates a small
// determinant with a floating-point filter first and falls back to exact
// expansion arithmetic (after Shewchuk's robust-predicates construction)
// when the filter cannot certify the sign. Returned signs are exact for
// the given double inputs.

namespace affinelab::predicates {

// sign((b - a) x (c - a)): +1 if a,b,c make a left turn, -1 right, 0 collinear.
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

// sign((b - a) x (d - c)); generalizes orient2d to two independent segments.
int cross_sign(double ax, double ay, double bx, double by,
               double cx, double cy, double dx, double dy);

// sign of the incircle determinant: +1 iff d lies strictly inside the
// circumcircle of (a, b, c) when (a, b, c) is counter-clockwise; the sign
// flips for clockwise (a, b, c).
int incircle(double ax, double ay, double bx, double by,
             double cx, double cy, double dx, double dy);

// Filter-stage value of the incircle determinant together with the magnitude
// scale ("permanent") of its terms. |estimate| / permanent is a
// scale-invariant closeness-to-cocircular measure used for degeneracy
// rejection; the sign of estimate is reliable whenever
// |estimate| > iccerrbound_a() * permanent.
double incircle_estimate(double ax, double ay, double bx, double by,
                         double cx, double cy, double dx, double dy,
                         double* permanent);

// Filter error-bound coefficients (relative to the term-magnitude sums).
double ccwerrbound_a();
double iccerrbound_a();

}  // namespace affinelab::predicates
