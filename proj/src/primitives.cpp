#include "affinelab/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "affinelab/graphs.hpp"

namespace affinelab {
namespace {

Point mean_of(const PointSet& s) {
    double sx = 0.0, sy = 0.0;
    for (Point p : s) { sx += p.x; sy += p.y; }
    return {sx / static_cast<double>(s.size()), sy / static_cast<double>(s.size())};
}

Point barycenter(Point a, Point b, Point c) {
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

}  // namespace

PrimitiveTriple primitives_hull_area(const PointSet& s) {
    if (s.size() < 3) throw Error("primitives_hull_area: need at least 3 points");
    const Point mu = mean_of(s);
    const std::vector<int> hull = convex_hull(s);
    const int h = static_cast<int>(hull.size());

    std::vector<double> area2(h);
    for (int i = 0; i < h; ++i) {
        const Point a = s[hull[i]];
        const Point b = s[hull[(i + 1) % h]];
        area2[i] = std::fabs(cross(b - a, mu - a));
    }
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (std::fabs(area2[i] - area2[j]) <=
                1e-12 * std::max(area2[i], area2[j]))
                throw DegenerateInput("primitives_hull_area: tied hull-triangle areas");

    std::vector<int> rank(h);
    std::iota(rank.begin(), rank.end(), 0);
    std::sort(rank.begin(), rank.end(), [&](int a, int b) { return area2[a] > area2[b]; });
    const int e1 = rank[0], e2 = rank[1];

    const int a1 = hull[e1], b1 = hull[(e1 + 1) % h];
    const Point vartheta = barycenter(s[a1], s[b1], mu);
    const Point delta =
        barycenter(s[hull[e2]], s[hull[(e2 + 1) % h]], mu);

    const int side_delta = orient(mu, vartheta, delta);
    if (side_delta == 0)
        throw DegenerateInput("primitives_hull_area: delta on the ray mu->vartheta");
    const int side_a = orient(mu, vartheta, s[a1]);
    const int side_b = orient(mu, vartheta, s[b1]);
    if (side_a == 0 || side_b == 0 || side_a == side_b)
        throw DegenerateInput("primitives_hull_area: ray does not separate the edge");

    const int wp_index = (side_a == side_delta) ? a1 : b1;

    PrimitiveTriple t;
    t.mu = mu;
    t.delta = delta;
    t.wp = s[wp_index];
    t.wp_index = wp_index;
    t.vartheta = vartheta;
    t.scheme = PrimitiveScheme::hull_area;
    if (orient(t.mu, t.wp, t.delta) == 0)
        throw DegenerateInput("primitives_hull_area: collinear triple");
    return t;
}

PrimitiveTriple primitives_closest(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    if (n < 3) throw Error("primitives_closest: need at least 3 points");
    const Point mu = model.mu;

    std::vector<int> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> d(s.size());
    for (int i = 0; i < n; ++i) d[i] = as_distance(model, s[i], mu);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (std::fabs(d[idx[i]] - d[idx[i + 1]]) <=
            1e-12 * std::max(d[idx[i]], d[idx[i + 1]]))
            throw DegenerateInput("primitives_closest: tied A_S distances to the mean");

    const int wp_index = idx[0];
    int delta_index = idx[1];
    if (orient(mu, s[wp_index], s[delta_index]) == 0) {
        delta_index = idx[2];
        if (orient(mu, s[wp_index], s[delta_index]) == 0)
            throw DegenerateInput("primitives_closest: no non-collinear witness");
    }

    PrimitiveTriple t;
    t.mu = mu;
    t.delta = s[delta_index];
    t.wp = s[wp_index];
    t.wp_index = wp_index;
    t.scheme = PrimitiveScheme::closest_point;
    return t;
}

PrimitiveTriple compute_primitives(const PointSet& s, PrimitiveScheme scheme) {
    if (scheme == PrimitiveScheme::hull_area) return primitives_hull_area(s);
    return primitives_closest(s, covariance_model(s));
}

}  // namespace affinelab
