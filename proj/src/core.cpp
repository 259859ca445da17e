#include "affinelab/core.hpp"

namespace affinelab {

AffineMap AffineMap::inverse() const {
    const double d = det();
    if (d == 0.0) throw DegenerateInput("affine map is singular");
    const double i00 = m11 / d, i01 = -m01 / d;
    const double i10 = -m10 / d, i11 = m00 / d;
    return {i00, i01, i10, i11, -(i00 * bx + i01 * by), -(i10 * bx + i11 * by)};
}

bool same_side(Point w, Point z, Point u, Point v) {
    const int su = orient(z, w, u);
    const int sv = orient(z, w, v);
    if (su == 0 || sv == 0)
        throw DegenerateInput("same_side: point collinear with the directed line");
    return su == sv;
}

EigenDecomposition2 eigen_symmetric(const SymmetricMatrix2& m) {
    if (!(m.a > 0.0) || !(m.det() > 0.0))
        throw ModelDegenerate("eigen_symmetric: matrix not positive-definite");

    const double half_tr = 0.5 * (m.a + m.c);
    const double half_gap = 0.5 * (m.a - m.c);
    const double disc = std::hypot(half_gap, m.b);
    const double lambda1 = half_tr + disc;
    const double lambda2 = half_tr - disc;

    EigenDecomposition2 eig;
    eig.lambda1 = lambda1;
    eig.lambda2 = lambda2;

    if (m.b == 0.0) {
        if (m.a >= m.c) {
            eig.q00 = 1.0; eig.q10 = 0.0;
        } else {
            eig.q00 = 0.0; eig.q10 = 1.0;
        }
    } else {
        // Pick the better-conditioned expression for the leading eigenvector.
        Point v1{m.b, lambda1 - m.a};
        Point v1alt{lambda1 - m.c, m.b};
        if (squared_length(v1alt) > squared_length(v1)) v1 = v1alt;
        const double norm = std::sqrt(squared_length(v1));
        eig.q00 = v1.x / norm;
        eig.q10 = v1.y / norm;
    }
    // Second column: rotate by +90 degrees so det(Q) = +1.
    eig.q01 = -eig.q10;
    eig.q11 = eig.q00;
    return eig;
}

}  // namespace affinelab
