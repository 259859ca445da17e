#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "affinelab/core.hpp"
#include "affinelab/harness.hpp"

using namespace affinelab;

namespace {

int sign_of(long long v) { return (v > 0) - (v < 0); }

// Exact integer evaluation of (b-a) x (c-a); coordinates must be small
// integers.
int orient_int(long long ax, long long ay, long long bx, long long by,
               long long cx, long long cy) {
    return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

int incircle_int(long long ax, long long ay, long long bx, long long by,
                 long long cx, long long cy, long long dx, long long dy) {
    const __int128 adx = ax - dx, ady = ay - dy;
    const __int128 bdx = bx - dx, bdy = by - dy;
    const __int128 cdx = cx - dx, cdy = cy - dy;
    const __int128 alift = adx * adx + ady * ady;
    const __int128 blift = bdx * bdx + bdy * bdy;
    const __int128 clift = cdx * cdx + cdy * cdy;
    const __int128 det = alift * (bdx * cdy - cdx * bdy) +
                         blift * (cdx * ady - adx * cdy) +
                         clift * (adx * bdy - bdx * ady);
    return (det > 0) - (det < 0);
}

}  // namespace

TEST_CASE("orient basic examples") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orient({0, 0}, {1, 0}, {0, -1}) == -1);
}

TEST_CASE("orient is antisymmetric under argument swaps") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Point a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const int o = orient(a, b, c);
        CHECK(orient(b, a, c) == -o);
        CHECK(orient(a, c, b) == -o);
        CHECK(orient(c, b, a) == -o);
    }
}

TEST_CASE("orient scales by the determinant sign under affine maps") {
    Rng rng(7);
    TrialConfig cfg;
    for (int i = 0; i < 200; ++i) {
        const Point a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const AffineMap m = random_affine(rng, cfg);
        const int s = m.det() > 0 ? 1 : -1;
        CHECK(orient(m.apply(a), m.apply(b), m.apply(c)) == s * orient(a, b, c));
    }
}

TEST_CASE("orient and incircle agree with exact integer arithmetic") {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        auto coord = [&]() { return static_cast<long long>(rng.next_u64() % 41) - 20; };
        const long long ax = coord(), ay = coord(), bx = coord(), by = coord();
        const long long cx = coord(), cy = coord(), dx = coord(), dy = coord();
        CHECK(predicates::orient2d(ax, ay, bx, by, cx, cy) ==
              orient_int(ax, ay, bx, by, cx, cy));
        CHECK(predicates::cross_sign(ax, ay, bx, by, cx, cy, dx, dy) ==
              sign_of((bx - ax) * (dy - cy) - (by - ay) * (dx - cx)));
        if (orient_int(ax, ay, bx, by, cx, cy) != 0)
            CHECK(predicates::incircle(ax, ay, bx, by, cx, cy, dx, dy) ==
                  incircle_int(ax, ay, bx, by, cx, cy, dx, dy));
    }
}

TEST_CASE("orient resolves ulp-level perturbations exactly") {
    // Points on the line y = x/3 with coordinates near 2^50.
    const double big = 1125899906842624.0;  // 2^50
    CHECK(orient({0, 0}, {3, 1}, {3 * big, big}) == 0);
    CHECK(orient({0, 0}, {3, 1}, {3 * big, std::nextafter(big, 2 * big)}) == 1);
    CHECK(orient({0, 0}, {3, 1}, {3 * big, std::nextafter(big, 0.0)}) == -1);
}

TEST_CASE("same_side examples and degenerate input") {
    CHECK(same_side({0, 0}, {1, 0}, {0, 1}, {5, 3}));
    CHECK_FALSE(same_side({0, 0}, {1, 0}, {0, 1}, {0, -1}));
    CHECK_THROWS_AS(same_side({0, 0}, {1, 0}, {2, 0}, {0, 1}), DegenerateInput);
}

TEST_CASE("same_side is preserved by invertible affine maps") {
    Rng rng(11);
    TrialConfig cfg;
    int checked = 0;
    while (checked < 100) {
        const Point w{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point z{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point u{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point v{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (orient(z, w, u) == 0 || orient(z, w, v) == 0) continue;
        const AffineMap m = random_affine(rng, cfg);
        CHECK(same_side(w, z, u, v) ==
              same_side(m.apply(w), m.apply(z), m.apply(u), m.apply(v)));
        ++checked;
    }
}

TEST_CASE("apply_affine examples") {
    CHECK(apply_affine(AffineMap::identity(), {3, 4}) == Point{3, 4});
    CHECK(apply_affine(AffineMap::linear(2, 0, 0, 1), {1, 1}) == Point{2, 1});

    Rng rng(3);
    TrialConfig cfg;
    for (int i = 0; i < 100; ++i) {
        const AffineMap m = random_affine(rng, cfg);
        const AffineMap inv = m.inverse();
        const Point p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point back = inv.apply(m.apply(p));
        CHECK(std::fabs(back.x - p.x) < 1e-10);
        CHECK(std::fabs(back.y - p.y) < 1e-10);
    }
}

TEST_CASE("eigen_symmetric closed-form cases") {
    SUBCASE("identity") {
        const EigenDecomposition2 e = eigen_symmetric({1, 0, 1});
        CHECK(e.lambda1 == doctest::Approx(1.0));
        CHECK(e.lambda2 == doctest::Approx(1.0));
        const SymmetricMatrix2 r = e.reconstruct();
        CHECK(r.a == doctest::Approx(1.0));
        CHECK(r.b == doctest::Approx(0.0));
        CHECK(r.c == doctest::Approx(1.0));
    }
    SUBCASE("diagonal") {
        const EigenDecomposition2 e = eigen_symmetric({4, 0, 1});
        CHECK(e.lambda1 == doctest::Approx(4.0));
        CHECK(e.lambda2 == doctest::Approx(1.0));
        CHECK(std::fabs(e.q00) == doctest::Approx(1.0));
        CHECK(std::fabs(e.q10) == doctest::Approx(0.0));
    }
    SUBCASE("[[2,1],[1,2]] by hand: lambda 3 and 1, eigenvectors (1,1)/sqrt2") {
        const EigenDecomposition2 e = eigen_symmetric({2, 1, 2});
        CHECK(e.lambda1 == doctest::Approx(3.0));
        CHECK(e.lambda2 == doctest::Approx(1.0));
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::fabs(e.q00) == doctest::Approx(r));
        CHECK(std::fabs(e.q10) == doctest::Approx(r));
        CHECK(e.q00 * e.q10 > 0);  // (1,1) direction up to sign
        CHECK(e.q01 * e.q11 < 0);  // (1,-1) direction up to sign
    }
    SUBCASE("not positive definite") {
        CHECK_THROWS_AS(eigen_symmetric({1, 2, 1}), ModelDegenerate);
        CHECK_THROWS_AS(eigen_symmetric({-1, 0, 2}), ModelDegenerate);
    }
}

TEST_CASE("eigen_symmetric orthonormality and reconstruction on random inputs") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        const double c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
        const SymmetricMatrix2 m{a * a + c * c + 0.01, a * b + c * d,
                                 b * b + d * d + 0.01};
        const EigenDecomposition2 e = eigen_symmetric(m);
        CHECK(e.lambda1 >= e.lambda2);
        CHECK(e.lambda2 > 0);
        CHECK(std::fabs(e.q00 * e.q00 + e.q10 * e.q10 - 1.0) < 1e-12);
        CHECK(std::fabs(e.q01 * e.q01 + e.q11 * e.q11 - 1.0) < 1e-12);
        CHECK(std::fabs(e.q00 * e.q01 + e.q10 * e.q11) < 1e-12);
        const SymmetricMatrix2 r = e.reconstruct();
        const double scale = std::fabs(m.a) + std::fabs(m.b) + std::fabs(m.c);
        CHECK(std::fabs(r.a - m.a) < 1e-9 * scale);
        CHECK(std::fabs(r.b - m.b) < 1e-9 * scale);
        CHECK(std::fabs(r.c - m.c) < 1e-9 * scale);
    }
}
