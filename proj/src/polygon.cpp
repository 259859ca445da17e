#include "affinelab/polygon.hpp"

#include "affinelab/graphs.hpp"

#include <algorithm>

namespace affinelab {
namespace {

bool on_segment_closed(Point a, Point b, Point p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

Polygon::Polygon(PointSet v) : vertices(std::move(v)) {
    if (vertices.size() < 3) throw Error("polygon needs at least 3 vertices");
    for (Point p : vertices)
        if (!p.finite()) throw Error("polygon: non-finite coordinate");
}

int Polygon::orientation() const {
    int m = 0;
    for (int i = 1; i < size(); ++i) {
        if (vertices[i].x < vertices[m].x ||
            (vertices[i].x == vertices[m].x && vertices[i].y < vertices[m].y))
            m = i;
    }
    const int s = orient(vertex(m - 1), vertex(m), vertex(m + 1));
    if (s == 0) throw DegenerateInput("polygon: zero signed area at extreme vertex");
    return s;
}

double Polygon::signed_area() const {
    double area2 = 0.0;
    for (int i = 0; i < size(); ++i) area2 += cross(vertex(i), vertex(i + 1));
    return 0.5 * area2;
}

Polygon apply_affine(const AffineMap& alpha, const Polygon& p) {
    return Polygon(apply_affine(alpha, p.vertices));
}

bool polygon_is_simple(const Polygon& p) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.vertices[i] == p.vertices[j]) return false;

    for (int i = 0; i < n; ++i) {
        const Point a = p.vertex(i), b = p.vertex(i + 1);
        for (int j = i + 1; j < n; ++j) {
            const Point c = p.vertex(j), d = p.vertex(j + 1);
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_properly_cross(a, b, c, d)) return false;
        }
        // No vertex may sit in the interior of a non-incident edge.
        for (int v = 0; v < n; ++v) {
            if (v == i || v == p.index(i + 1)) continue;
            if (on_segment_closed(a, b, p.vertices[v])) return false;
        }
    }
    return true;
}

bool is_diagonal(const Polygon& p, int i, int j) {
    const int n = p.size();
    i = p.index(i);
    j = p.index(j);
    if (i == j) return false;
    if (p.index(i + 1) == j || p.index(j + 1) == i) return false;  // boundary edge

    const Point a = p.vertices[i], b = p.vertices[j];
    for (int k = 0; k < n; ++k) {
        const Point c = p.vertex(k), d = p.vertex(k + 1);
        if (k == i || p.index(k + 1) == i || k == j || p.index(k + 1) == j) continue;
        if (segments_properly_cross(a, b, c, d)) return false;
    }
    // No third vertex may lie on the open segment.
    for (int v = 0; v < n; ++v) {
        if (v == i || v == j) continue;
        if (on_segment_closed(a, b, p.vertices[v])) return false;
    }

    // The segment must leave vertex i through the interior wedge.
    const Point prev = p.vertex(i - 1), next = p.vertex(i + 1);
    const int ori = p.orientation();
    const int convex = orient(prev, a, next) * ori;
    const int s_next = orient(a, next, b) * ori;
    const int s_prev = orient(a, b, prev) * ori;
    if (convex > 0) return s_next > 0 && s_prev > 0;
    return s_next > 0 || s_prev > 0;
}

int point_in_polygon(const Polygon& p, Point q) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        if (on_segment_closed(p.vertex(i), p.vertex(i + 1), q)) return 0;

    // Crossing parity against the upward ray from q; orient() keeps the
    // on-line cases exact.
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        Point a = p.vertex(i), b = p.vertex(i + 1);
        if ((a.x > q.x) == (b.x > q.x)) continue;
        if (a.x > b.x) std::swap(a, b);
        if (orient(a, b, q) < 0) inside = !inside;
    }
    return inside ? 1 : -1;
}

}  // namespace affinelab
