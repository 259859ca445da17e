#include "affinelab/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace affinelab {
namespace {

void require_triple(Point mu, Point delta, Point wp, const char* who) {
    if (orient(wp, mu, delta) == 0)
        throw DegenerateInput(std::string(who) + ": collinear primitive triple");
}

}  // namespace

SweepOrder::SweepOrder(Point wp, Point mu, Point delta)
    : wp_(wp), mu_(mu), delta_(delta) {
    sdelta_ = orient(wp, mu, delta);
    if (sdelta_ == 0) throw DegenerateInput("sweep: collinear primitive triple");
}

bool SweepOrder::same_line(Point p, Point q) const {
    return cross_sign(wp_, mu_, q, p) == 0;
}

int SweepOrder::side(Point p) const { return sdelta_ * orient(wp_, mu_, p); }

int SweepOrder::compare(Point p, Point q) const {
    if (p == q) return 0;
    // key(p) - key(q) has the sign of sdelta * cross(mu - wp, p - q).
    const int primary = sdelta_ * cross_sign(wp_, mu_, q, p);
    if (primary != 0) return -primary;
    // Same sweep line: v before u iff delta left of wp->mu and v left of
    // u->mu (and the mirrored right/right case).
    const int tie = sdelta_ * orient(q, mu_, p);
    if (tie != 0) return -tie;
    throw DegenerateInput("sweep: unresolvable tie on the line through mu");
}

SweepFrame sweep_frame(const PointSet& s, Point mu, Point delta, int wp_index) {
    const int n = static_cast<int>(s.size());
    if (wp_index < 0 || wp_index >= n) throw Error("sweep_frame: wp index out of range");
    const Point wp = s[wp_index];
    const SweepOrder order(wp, mu, delta);

    OrderedIndices idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const int c = order.compare(s[a], s[b]);
        return c != 0 ? c < 0 : a < b;
    });

    SweepFrame frame;
    frame.wp = wp;
    frame.mu = mu;
    frame.top = idx.front();
    frame.bottom = idx.back();

    const Point d0 = mu - wp;
    auto key = [&](int i) {
        return static_cast<double>(order.side(s[i]) >= 0 ? 1 : -1) *
               std::fabs(cross(d0, s[i] - wp));
    };
    auto check_extreme_tie = [&](int extreme, int runner_up) {
        if (order.same_line(s[extreme], s[runner_up])) return;
        const double ke = std::fabs(key(extreme) - key(runner_up));
        const double scale = std::max(std::fabs(key(extreme)), std::fabs(key(runner_up)));
        if (ke <= 1e-12 * scale)
            throw DegenerateInput("sweep_frame: tied farthest lines");
    };
    if (n >= 2) {
        check_extreme_tie(idx[0], idx[1]);
        check_extreme_tie(idx[n - 1], idx[n - 2]);
    }

    bool has_positive = false, has_negative = false;
    for (Point p : s) {
        const int sgn = order.side(p);
        has_positive |= sgn > 0;
        has_negative |= sgn < 0;
    }
    frame.one_sided = !(has_positive && has_negative);
    return frame;
}

OrderedIndices radially_sort(const PointSet& s, Point mu, Point delta, int wp_index) {
    const int n = static_cast<int>(s.size());
    if (wp_index < 0 || wp_index >= n)
        throw Error("radially_sort: wp index out of range");
    const Point wp = s[wp_index];
    require_triple(mu, delta, wp, "radially_sort");

    const int rot = orient(wp, mu, delta);  // +1 left => CCW, -1 => CW

    // Angular class measured from the ray wp->mu in the turn direction:
    // 0 on the ray, 1 first half-plane, 2 opposite ray, 3 second half-plane.
    auto angular_class = [&](Point p) {
        const int side = rot * orient(wp, mu, p);
        if (side > 0) return 1;
        if (side < 0) return 3;
        if (p == wp) throw DegenerateInput("radially_sort: duplicate of wp");
        return dot(mu - wp, p - wp) > 0.0 ? 0 : 2;
    };

    OrderedIndices rest;
    rest.reserve(s.size() - 1);
    for (int i = 0; i < n; ++i)
        if (i != wp_index) rest.push_back(i);

    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        const Point pa = s[a], pb = s[b];
        const int ca = angular_class(pa), cb = angular_class(pb);
        if (ca != cb) return ca < cb;
        if (ca == 1 || ca == 3) {
            const int turn = rot * orient(wp, pa, pb);
            if (turn != 0) return turn > 0;
        }
        // Same ray from wp: nearer point first (general position makes this
        // a guard only).
        const double da = squared_length(pa - wp);
        const double db = squared_length(pb - wp);
        if (da != db) return da < db;
        throw DegenerateInput("radially_sort: coincident points");
    });

    OrderedIndices out{wp_index};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

OrderedIndices radially_sort(const PointSet& s, const PrimitiveTriple& t) {
    return radially_sort(s, t.mu, t.delta, t.wp_index);
}

OrderedIndices sweep_line_sort(const PointSet& s, Point mu, Point delta, int wp_index) {
    const int n = static_cast<int>(s.size());
    if (wp_index < 0 || wp_index >= n)
        throw Error("sweep_line_sort: wp index out of range");
    const Point wp = s[wp_index];
    const SweepOrder order(wp, mu, delta);
    sweep_frame(s, mu, delta, wp_index);  // enforces the extreme-line stance

    OrderedIndices idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (a == b) return false;
        const int c = order.compare(s[a], s[b]);
        if (c != 0) return c < 0;
        throw DegenerateInput("sweep_line_sort: coincident points");
    });
    return idx;
}

OrderedIndices sweep_line_sort(const PointSet& s, const PrimitiveTriple& t) {
    return sweep_line_sort(s, t.mu, t.delta, t.wp_index);
}

OrderedIndices traversal(const Polygon& p, Point mu, Point delta, int wp_index) {
    const int n = p.size();
    if (wp_index < 0 || wp_index >= n) throw Error("traversal: wp index out of range");
    const Point wp = p.vertices[wp_index];
    // Section-specific convention: the side test uses the ray mu->wp.
    if (orient(mu, wp, delta) == 0)
        throw DegenerateInput("traversal: collinear primitive triple");
    if (!polygon_is_simple(p)) throw DegenerateInput("traversal: polygon not simple");

    const bool want_ccw = orient(mu, wp, delta) > 0;
    const bool stored_ccw = p.orientation() > 0;
    const int step = (want_ccw == stored_ccw) ? 1 : -1;

    OrderedIndices out;
    out.reserve(p.size());
    for (int k = 0; k < n; ++k) out.push_back(p.index(wp_index + step * k));
    return out;
}

OrderedIndices traversal(const Polygon& p, const PrimitiveTriple& t) {
    return traversal(p, t.mu, t.delta, t.wp_index);
}

}  // namespace affinelab
