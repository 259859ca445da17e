#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "affinelab/harness.hpp"
#include "affinelab/orderings.hpp"

using namespace affinelab;

TEST_CASE("radial sort quarter-turn example") {
    const PointSet s{{0, 0}, {2, 0}, {0, 2}, {-2, 0}};
    SUBCASE("delta left of wp->mu turns counter-clockwise") {
        const OrderedIndices got = radially_sort(s, {1, 0}, {0, 1}, 0);
        CHECK(got == OrderedIndices{0, 1, 2, 3});
    }
    SUBCASE("delta right of wp->mu turns clockwise") {
        const OrderedIndices got = radially_sort(s, {1, 0}, {0, -1}, 0);
        CHECK(got == OrderedIndices{0, 1, 3, 2});
    }
}

TEST_CASE("radial sort puts on-ray points first and rejects collinear triples") {
    const PointSet s{{0, 0}, {2, 0}, {0, 2}, {-2, 0}};
    CHECK_THROWS_AS(radially_sort(s, {1, 0}, {3, 0}, 0), DegenerateInput);
}

TEST_CASE("radial sort breaks same-ray pairs by distance to wp") {
    // Points 1 and 2 share the ray from wp; the nearer one sorts first.
    const PointSet s{{0, 0}, {4, 2}, {2, 1}, {1, 3}};
    const OrderedIndices got = radially_sort(s, {1, 0}, {0, 1}, 0);
    const auto pos = [&](int v) {
        return std::find(got.begin(), got.end(), v) - got.begin();
    };
    CHECK(pos(2) + 1 == pos(1));
}

TEST_CASE("sweep frame rejects tied farthest lines") {
    // Two distinct lines within 1e-13 of the maximal offset.
    const PointSet s{{0, 0}, {1.0, 2}, {1.0 + 1e-13, -3}, {-2, 1}};
    CHECK_THROWS_AS(sweep_frame(s, {0, 1}, {1, 0}, 0), DegenerateInput);
    // The same offset on the same line is fine: the tie rule handles it.
    const PointSet ok{{0, 0}, {1.0, 2}, {1.0, -3}, {-2, 1}};
    CHECK_NOTHROW(sweep_frame(ok, {0, 1}, {1, 0}, 0));
}

TEST_CASE("two points on the reference line through mu cannot be ordered") {
    const PointSet s{{0, 0}, {0, 5}, {2, 1}, {-1, 2}};
    CHECK_THROWS_AS(sweep_line_sort(s, {0, 1}, {1, 0}, 0), DegenerateInput);
}

TEST_CASE("fully collinear polygons are rejected") {
    const Polygon p({{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(traversal(p, {0, 1}, {1, 1}, 0), DegenerateInput);
}

TEST_CASE("radial sort wedge emptiness (consecutive rays bound empty wedges)") {
    Rng rng(149);
    TrialConfig cfg;
    for (int t = 0; t < 20; ++t) {
        const PointSet s = random_point_set(rng, 10, cfg);
        const PrimitiveTriple tri = primitives_closest(s, covariance_model(s));
        const OrderedIndices order = radially_sort(s, tri);
        const Point wp = s[order[0]];
        const int rot = orient(wp, tri.mu, tri.delta);
        // No point lies strictly inside the wedge between consecutive rays.
        for (std::size_t i = 1; i + 1 < order.size(); ++i) {
            const Point a = s[order[i]];
            const Point b = s[order[i + 1]];
            if (rot * orient(wp, a, b) <= 0) continue;  // wedge >= pi, skip
            for (std::size_t k = 1; k < order.size(); ++k) {
                if (k == i || k == i + 1) continue;
                const Point p = s[order[k]];
                const bool inside =
                    rot * orient(wp, a, p) > 0 && rot * orient(wp, p, b) > 0;
                CHECK_FALSE(inside);
            }
        }
    }
}

TEST_CASE("radial sort matches an angle-arithmetic oracle on clean inputs") {
    Rng rng(241);
    TrialConfig cfg;
    for (int t = 0; t < 20; ++t) {
        const PointSet s = random_point_set(rng, 15, cfg);
        const PrimitiveTriple tri = primitives_closest(s, covariance_model(s));
        const OrderedIndices got = radially_sort(s, tri);

        const Point wp = s[tri.wp_index];
        const int rot = orient(wp, tri.mu, tri.delta);
        const double base = std::atan2(tri.mu.y - wp.y, tri.mu.x - wp.x);
        auto turn_angle = [&](Point p) {
            double a = rot * (std::atan2(p.y - wp.y, p.x - wp.x) - base);
            const double two_pi = 2.0 * 3.14159265358979323846;
            while (a < 0) a += two_pi;
            while (a >= two_pi) a -= two_pi;
            return a;
        };
        OrderedIndices expect;
        for (int i = 0; i < 15; ++i)
            if (i != tri.wp_index) expect.push_back(i);
        std::sort(expect.begin(), expect.end(), [&](int a, int b) {
            return turn_angle(s[a]) < turn_angle(s[b]);
        });
        expect.insert(expect.begin(), tri.wp_index);
        CHECK(got == expect);
    }
}

TEST_CASE("radial sort is affine invariant with mapped primitives") {
    Rng rng(151);
    TrialConfig cfg;
    for (int t = 0; t < 100; ++t) {
        const PointSet s = random_point_set(rng, 12, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const PointSet img = apply_affine(a, s);
        const OrderedIndices o1 =
            radially_sort(s, primitives_closest(s, covariance_model(s)));
        const OrderedIndices o2 =
            radially_sort(img, primitives_closest(img, covariance_model(img)));
        CHECK(o1 == o2);
    }
}

TEST_CASE("sweep-line sort with a vertical reference line orders by x") {
    // ell-perp is the y-axis; delta = (1,0) lies right of wp->mu, so the
    // sweep starts on the positive-x side and decreases.
    const PointSet s{{0, 0}, {3, 5}, {-2, 1}, {1, -4}, {-4, -2}};
    const OrderedIndices got = sweep_line_sort(s, {0, 1}, {1, 0}, 0);
    std::vector<double> xs;
    for (int i : got) xs.push_back(s[i].x);
    CHECK(std::is_sorted(xs.rbegin(), xs.rend()));
}

TEST_CASE("sweep-line tie rule matches the verbatim side test") {
    // Points 1 and 2 share a line parallel to ell-perp (the y-axis).
    const PointSet s{{0, 0}, {2, 3}, {2, -1}, {-1, 2}};
    SUBCASE("delta left of wp->mu") {
        const Point mu{0, 1};
        const Point delta{-1, 0};  // left of the upward ray
        const OrderedIndices got = sweep_line_sort(s, mu, delta, 0);
        // delta's side is x < 0, so the tied pair comes last; v before u iff
        // v is left of u->mu.
        const auto pos = [&](int v) {
            return std::find(got.begin(), got.end(), v) - got.begin();
        };
        const bool v1_first = pos(1) < pos(2);
        const bool v1_left_of_2mu = orient(s[2], mu, s[1]) > 0;
        CHECK(v1_first == v1_left_of_2mu);
    }
    SUBCASE("delta right of wp->mu mirrors the rule") {
        const Point mu{0, 1};
        const Point delta{1, 0};
        const OrderedIndices got = sweep_line_sort(s, mu, delta, 0);
        const auto pos = [&](int v) {
            return std::find(got.begin(), got.end(), v) - got.begin();
        };
        const bool v1_first = pos(1) < pos(2);
        const bool v1_right_of_2mu = orient(s[2], mu, s[1]) < 0;
        CHECK(v1_first == v1_right_of_2mu);
    }
}

TEST_CASE("sweep frame exposes the extreme points and flags one-sided input") {
    const PointSet s{{0, 0}, {3, 5}, {-2, 1}, {1, -4}, {-4, -2}};
    const SweepFrame f = sweep_frame(s, {0, 1}, {1, 0}, 0);
    CHECK(f.top == 1);     // x = 3, farthest on delta's side
    CHECK(f.bottom == 4);  // x = -4, farthest opposite
    CHECK_FALSE(f.one_sided);

    const PointSet one_side{{0, 0}, {1, 1}, {2, -1}, {3, 2}};
    const SweepFrame g = sweep_frame(one_side, {0, 1}, {1, 0}, 0);
    CHECK(g.one_sided);
    CHECK(g.bottom == 0);  // the empty side's extreme is the least-far point
}

TEST_CASE("sweep-line sort is affine invariant with mapped primitives") {
    Rng rng(157);
    TrialConfig cfg;
    for (int t = 0; t < 100; ++t) {
        const PointSet s = random_point_set(rng, 12, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const PointSet img = apply_affine(a, s);
        const OrderedIndices o1 = sweep_line_sort(s, primitives_hull_area(s));
        const OrderedIndices o2 = sweep_line_sort(img, primitives_hull_area(img));
        CHECK(o1 == o2);
    }
}

TEST_CASE("traversal of a square") {
    const Polygon p({{0, 0}, {1, 0}, {1, 1}, {0, 1}});  // CCW storage
    SUBCASE("delta left of mu->wp goes counter-clockwise") {
        // mu inside, wp = vertex 0, ray mu->wp points down-left; (1,0.2) is
        // left of it.
        const OrderedIndices got = traversal(p, {0.5, 0.5}, {1.0, 0.2}, 0);
        CHECK(got == OrderedIndices{0, 1, 2, 3});
    }
    SUBCASE("delta right of mu->wp goes clockwise") {
        const OrderedIndices got = traversal(p, {0.5, 0.5}, {0.2, 1.0}, 0);
        CHECK(got == OrderedIndices{0, 3, 2, 1});
    }
}

TEST_CASE("traversal is affine invariant, reflections included") {
    Rng rng(163);
    TrialConfig cfg;
    for (int t = 0; t < 100; ++t) {
        const Polygon p = random_simple_polygon(rng, 11, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const Polygon img = apply_affine(a, p);
        const OrderedIndices o1 =
            traversal(p, primitives_closest(p.vertices, covariance_model(p.vertices)));
        const OrderedIndices o2 = traversal(
            img, primitives_closest(img.vertices, covariance_model(img.vertices)));
        CHECK(o1 == o2);
    }
}

TEST_CASE("every ordering is a permutation and starts correctly") {
    Rng rng(167);
    TrialConfig cfg;
    const PointSet s = random_point_set(rng, 15, cfg);
    const PrimitiveTriple tri = primitives_closest(s, covariance_model(s));

    for (OrderedIndices order : {radially_sort(s, tri), sweep_line_sort(s, tri)}) {
        OrderedIndices sorted = order;
        std::sort(sorted.begin(), sorted.end());
        OrderedIndices expect(s.size());
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(sorted == expect);
    }
    CHECK(radially_sort(s, tri)[0] == tri.wp_index);

    const Polygon p = random_simple_polygon(rng, 9, cfg);
    const PrimitiveTriple pt =
        primitives_closest(p.vertices, covariance_model(p.vertices));
    CHECK(traversal(p, pt)[0] == pt.wp_index);
}
