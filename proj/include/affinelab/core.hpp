#pragma once

#include <cmath>

#include "affinelab/errors.hpp"
#include "affinelab/predicates.hpp"

namespace affinelab {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double squared_length(Point a) { return dot(a, a); }

// Invertible affine map p -> M p + b.
struct AffineMap {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;
    double bx = 0.0, by = 0.0;

    double det() const { return m00 * m11 - m01 * m10; }

    Point apply(Point p) const {
        return {m00 * p.x + m01 * p.y + bx, m10 * p.x + m11 * p.y + by};
    }

    // Linear part only, for displacement vectors.
    Point apply_linear(Point v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }

    AffineMap inverse() const;

    static AffineMap identity() { return {}; }
    static AffineMap linear(double a00, double a01, double a10, double a11) {
        return {a00, a01, a10, a11, 0.0, 0.0};
    }
};

// [[a, b], [b, c]]
struct SymmetricMatrix2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double det() const { return a * c - b * b; }
    double trace() const { return a + c; }

    Point apply(Point v) const { return {a * v.x + b * v.y, b * v.x + c * v.y}; }
};

// q is orthonormal with det +1; columns are unit eigenvectors for
// lambda1 >= lambda2.
struct EigenDecomposition2 {
    double q00 = 1.0, q01 = 0.0;
    double q10 = 0.0, q11 = 1.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    Point column1() const { return {q00, q10}; }
    Point column2() const { return {q01, q11}; }

    SymmetricMatrix2 reconstruct() const {
        return {lambda1 * q00 * q00 + lambda2 * q01 * q01,
                lambda1 * q00 * q10 + lambda2 * q01 * q11,
                lambda1 * q10 * q10 + lambda2 * q11 * q11};
    }
};

// Exact sign of the signed area of (a, b, c): +1 iff c is left of a->b.
inline int orient(Point a, Point b, Point c) {
    return predicates::orient2d(a.x, a.y, b.x, b.y, c.x, c.y);
}

// Exact sign of (b - a) x (d - c).
inline int cross_sign(Point a, Point b, Point c, Point d) {
    return predicates::cross_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y);
}

// True iff u and v lie on the same side of the directed line w->z.
// Throws DegenerateInput if either point is collinear with w, z.
bool same_side(Point w, Point z, Point u, Point v);

// Apply alpha to p; free-function spelling of AffineMap::apply.
inline Point apply_affine(const AffineMap& alpha, Point p) { return alpha.apply(p); }

// Closed-form eigendecomposition of a positive-definite symmetric 2x2
// matrix. lambda1 >= lambda2 > 0; for an isotropic input the eigenvectors
// are the coordinate axes. Throws ModelDegenerate if m is not
// positive-definite.
EigenDecomposition2 eigen_symmetric(const SymmetricMatrix2& m);

}  // namespace affinelab
