#include "affinelab/predicates.hpp"

#include <cmath>
#include <vector>

// Exact-arithmetic core: nonoverlapping floating-point expansions as in
// J. R. Shewchuk, "Adaptive Precision Floating-Point Arithmetic and Fast
// Robust Geometric Predicates" (public domain). The fast paths use his
// stage-A filters; the fallback here computes the full determinant exactly
// with generic expansion products instead of the hand-unrolled stages,
// which is plenty at the input sizes this library targets.

namespace affinelab::predicates {
namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBoundA = (10.0 + 96.0 * kEps) * kEps;

using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& hi, double& lo) {
    hi = a + b;
    const double bv = hi - a;
    const double av = hi - bv;
    lo = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& hi, double& lo) {
    hi = a - b;
    const double bv = a - hi;
    const double av = hi + bv;
    lo = (a - av) + (bv - b);
}

inline void two_product(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

Expansion make_two_diff(double a, double b) {
    double hi, lo;
    two_diff(a, b, hi, lo);
    if (lo == 0.0) return {hi};
    return {lo, hi};
}

// Merge two expansions; components stay sorted by increasing magnitude and
// nonoverlapping (Shewchuk's FAST-EXPANSION-SUM with zero elimination).
Expansion expansion_sum(const Expansion& e, const Expansion& f) {
    if (e.empty() || (e.size() == 1 && e[0] == 0.0)) return f.empty() ? Expansion{0.0} : f;
    if (f.empty() || (f.size() == 1 && f[0] == 0.0)) return e;

    Expansion g;
    g.reserve(e.size() + f.size());
    std::size_t i = 0, j = 0;
    while (i < e.size() && j < f.size()) {
        if (std::fabs(e[i]) < std::fabs(f[j])) g.push_back(e[i++]);
        else g.push_back(f[j++]);
    }
    while (i < e.size()) g.push_back(e[i++]);
    while (j < f.size()) g.push_back(f[j++]);

    Expansion h;
    h.reserve(g.size());
    double q = g[0];
    for (std::size_t k = 1; k < g.size(); ++k) {
        double hi, lo;
        two_sum(q, g[k], hi, lo);
        if (lo != 0.0) h.push_back(lo);
        q = hi;
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

// e * b with b a plain double (SCALE-EXPANSION-ZEROELIM).
Expansion expansion_scale(const Expansion& e, double b) {
    Expansion h;
    if (b == 0.0) return {0.0};
    h.reserve(2 * e.size());
    double q, lo;
    two_product(e[0], b, q, lo);
    if (lo != 0.0) h.push_back(lo);
    for (std::size_t i = 1; i < e.size(); ++i) {
        double phi, plo;
        two_product(e[i], b, phi, plo);
        double shi, slo;
        two_sum(q, plo, shi, slo);
        if (slo != 0.0) h.push_back(slo);
        two_sum(phi, shi, q, lo);
        if (lo != 0.0) h.push_back(lo);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Expansion expansion_product(const Expansion& e, const Expansion& f) {
    Expansion acc{0.0};
    for (double c : f) acc = expansion_sum(acc, expansion_scale(e, c));
    return acc;
}

Expansion expansion_negate(Expansion e) {
    for (double& c : e) c = -c;
    return e;
}

int expansion_sign(const Expansion& e) {
    // Largest-magnitude component is last and dominates the rest.
    const double top = e.back();
    return (top > 0.0) - (top < 0.0);
}

int orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
    const Expansion t1 =
        expansion_product(make_two_diff(bx, ax), make_two_diff(cy, ay));
    const Expansion t2 =
        expansion_product(make_two_diff(by, ay), make_two_diff(cx, ax));
    return expansion_sign(expansion_sum(t1, expansion_negate(t2)));
}

int cross_sign_exact(double ax, double ay, double bx, double by,
                     double cx, double cy, double dx, double dy) {
    const Expansion t1 =
        expansion_product(make_two_diff(bx, ax), make_two_diff(dy, cy));
    const Expansion t2 =
        expansion_product(make_two_diff(by, ay), make_two_diff(dx, cx));
    return expansion_sign(expansion_sum(t1, expansion_negate(t2)));
}

int incircle_exact(double ax, double ay, double bx, double by,
                   double cx, double cy, double dx, double dy) {
    const Expansion adx = make_two_diff(ax, dx), ady = make_two_diff(ay, dy);
    const Expansion bdx = make_two_diff(bx, dx), bdy = make_two_diff(by, dy);
    const Expansion cdx = make_two_diff(cx, dx), cdy = make_two_diff(cy, dy);

    const Expansion alift = expansion_sum(expansion_product(adx, adx),
                                          expansion_product(ady, ady));
    const Expansion blift = expansion_sum(expansion_product(bdx, bdx),
                                          expansion_product(bdy, bdy));
    const Expansion clift = expansion_sum(expansion_product(cdx, cdx),
                                          expansion_product(cdy, cdy));

    const Expansion bxcy = expansion_product(bdx, cdy);
    const Expansion cxby = expansion_product(cdx, bdy);
    const Expansion cxay = expansion_product(cdx, ady);
    const Expansion axcy = expansion_product(adx, cdy);
    const Expansion axby = expansion_product(adx, bdy);
    const Expansion bxay = expansion_product(bdx, ady);

    Expansion det = expansion_product(alift, expansion_sum(bxcy, expansion_negate(cxby)));
    det = expansion_sum(det, expansion_product(blift, expansion_sum(cxay, expansion_negate(axcy))));
    det = expansion_sum(det, expansion_product(clift, expansion_sum(axby, expansion_negate(bxay))));
    return expansion_sign(det);
}

}  // namespace

int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
    const double detleft = (bx - ax) * (cy - ay);
    const double detright = (by - ay) * (cx - ax);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = -detleft - detright;
    } else {
        return (det > 0.0) - (det < 0.0);
    }
    if (std::fabs(det) >= kCcwErrBoundA * detsum) return (det > 0.0) - (det < 0.0);
    return orient2d_exact(ax, ay, bx, by, cx, cy);
}

int cross_sign(double ax, double ay, double bx, double by,
               double cx, double cy, double dx, double dy) {
    const double detleft = (bx - ax) * (dy - cy);
    const double detright = (by - ay) * (dx - cx);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = -detleft - detright;
    } else {
        return (det > 0.0) - (det < 0.0);
    }
    if (std::fabs(det) >= kCcwErrBoundA * detsum) return (det > 0.0) - (det < 0.0);
    return cross_sign_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

double incircle_estimate(double ax, double ay, double bx, double by,
                         double cx, double cy, double dx, double dy,
                         double* permanent) {
    const double adx = ax - dx, ady = ay - dy;
    const double bdx = bx - dx, bdy = by - dy;
    const double cdx = cx - dx, cdy = cy - dy;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    if (permanent != nullptr) {
        *permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                     (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                     (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    }
    return det;
}

int incircle(double ax, double ay, double bx, double by,
             double cx, double cy, double dx, double dy) {
    double permanent = 0.0;
    const double det = incircle_estimate(ax, ay, bx, by, cx, cy, dx, dy, &permanent);
    if (std::fabs(det) > kIccErrBoundA * permanent) return (det > 0.0) - (det < 0.0);
    return incircle_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

double ccwerrbound_a() { return kCcwErrBoundA; }
double iccerrbound_a() { return kIccErrBoundA; }

}  // namespace affinelab::predicates
