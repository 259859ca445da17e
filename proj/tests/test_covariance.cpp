#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "affinelab/covariance.hpp"
#include "affinelab/harness.hpp"
#include "affinelab/proximity.hpp"

using namespace affinelab;

namespace {

const PointSet kDiamond{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::vector<double> pairwise_distances(const PointSet& s) {
    std::vector<double> d;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            d.push_back(std::sqrt(squared_length(s[i] - s[j])));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("covariance_model on the diamond: diagonal 1/2") {
    const CovarianceModel m = covariance_model(kDiamond);
    CHECK(m.mu.x == doctest::Approx(0.0));
    CHECK(m.mu.y == doctest::Approx(0.0));
    CHECK(m.sigma.a == doctest::Approx(0.5));
    CHECK(m.sigma.b == doctest::Approx(0.0));
    CHECK(m.sigma.c == doctest::Approx(0.5));
}

TEST_CASE("covariance_model hand example: {(0,0),(2,0),(0,2)}") {
    const CovarianceModel m = covariance_model({{0, 0}, {2, 0}, {0, 2}});
    CHECK(m.mu.x == doctest::Approx(2.0 / 3.0));
    CHECK(m.mu.y == doctest::Approx(2.0 / 3.0));
    CHECK(m.sigma.a == doctest::Approx(8.0 / 9.0));
    CHECK(m.sigma.c == doctest::Approx(8.0 / 9.0));
    CHECK(m.sigma.b == doctest::Approx(-4.0 / 9.0));
}

TEST_CASE("covariance of alpha(S) is M Sigma M^T; mean is alpha(mu)") {
    Rng rng(17);
    TrialConfig cfg;
    for (int i = 0; i < 50; ++i) {
        const PointSet s = random_point_set(rng, 12, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const CovarianceModel m1 = covariance_model(s);
        const CovarianceModel m2 = covariance_model(apply_affine(a, s));

        const Point expect_mu = a.apply(m1.mu);
        CHECK(std::fabs(m2.mu.x - expect_mu.x) < 1e-9);
        CHECK(std::fabs(m2.mu.y - expect_mu.y) < 1e-9);

        // M Sigma M^T, expanded for the 2x2 symmetric case.
        const double sa = m1.sigma.a, sb = m1.sigma.b, sc = m1.sigma.c;
        const double ea = a.m00 * (a.m00 * sa + a.m01 * sb) +
                          a.m01 * (a.m00 * sb + a.m01 * sc);
        const double eb = a.m10 * (a.m00 * sa + a.m01 * sb) +
                          a.m11 * (a.m00 * sb + a.m01 * sc);
        const double ec = a.m10 * (a.m10 * sa + a.m11 * sb) +
                          a.m11 * (a.m10 * sb + a.m11 * sc);
        const double scale = std::fabs(ea) + std::fabs(eb) + std::fabs(ec);
        CHECK(std::fabs(m2.sigma.a - ea) < 1e-9 * scale);
        CHECK(std::fabs(m2.sigma.b - eb) < 1e-9 * scale);
        CHECK(std::fabs(m2.sigma.c - ec) < 1e-9 * scale);
    }
}

TEST_CASE("collinear sets are rejected as model-degenerate") {
    CHECK_THROWS_AS(covariance_model({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), ModelDegenerate);
    CHECK_THROWS_AS(covariance_model({{0, 0}, {1, 0}}), ModelDegenerate);
}

TEST_CASE("model invariants: sigma*sigma_inv and normalizer/denormalizer") {
    Rng rng(19);
    TrialConfig cfg;
    const PointSet s = random_point_set(rng, 15, cfg);
    const CovarianceModel m = covariance_model(s);

    const double i00 = m.sigma.a * m.sigma_inv.a + m.sigma.b * m.sigma_inv.b;
    const double i01 = m.sigma.a * m.sigma_inv.b + m.sigma.b * m.sigma_inv.c;
    const double i11 = m.sigma.b * m.sigma_inv.b + m.sigma.c * m.sigma_inv.c;
    CHECK(std::fabs(i00 - 1.0) < 1e-9);
    CHECK(std::fabs(i01) < 1e-9);
    CHECK(std::fabs(i11 - 1.0) < 1e-9);

    for (int i = 0; i < 20; ++i) {
        const Point p{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const Point q = m.normalizer.apply_linear(m.denormalizer.apply_linear(p));
        CHECK(std::fabs(q.x - p.x) < 1e-9);
        CHECK(std::fabs(q.y - p.y) < 1e-9);
    }
    CHECK(m.lambda_max() >= m.lambda_min());
    CHECK(m.lambda_min() > 0);
}

TEST_CASE("as_norm examples") {
    const CovarianceModel m = covariance_model(kDiamond);
    CHECK(as_norm(m, {1, 0}) == doctest::Approx(2.0));  // (1 0) diag(2,2) (1 0)^T
    CHECK(as_norm(m, {0, 0}) == 0.0);
}

TEST_CASE("as_norm of displacements is affine invariant") {
    Rng rng(23);
    TrialConfig cfg;
    for (int i = 0; i < 50; ++i) {
        const PointSet s = random_point_set(rng, 10, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const PointSet t = apply_affine(a, s);
        const CovarianceModel ms = covariance_model(s);
        const CovarianceModel mt = covariance_model(t);
        for (std::size_t u = 0; u < s.size(); ++u)
            for (std::size_t w = u + 1; w < s.size(); ++w) {
                const double d1 = as_norm(ms, s[u] - s[w]);
                const double d2 = as_norm(mt, t[u] - t[w]);
                CHECK(std::fabs(d1 - d2) < 1e-8 * std::max(d1, d2));
            }
    }
}

TEST_CASE("as_distance basics and the sqrt triangle inequality") {
    Rng rng(29);
    TrialConfig cfg;
    const PointSet s = random_point_set(rng, 12, cfg);
    const CovarianceModel m = covariance_model(s);
    CHECK(as_distance(m, s[0], s[0]) == 0.0);
    CHECK(as_distance(m, s[1], s[4]) == doctest::Approx(as_distance(m, s[4], s[1])));

    for (int i = 0; i < 500; ++i) {
        const Point a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point c{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double ab = std::sqrt(as_distance(m, a, b));
        const double bc = std::sqrt(as_distance(m, b, c));
        const double ac = std::sqrt(as_distance(m, a, c));
        CHECK(ac <= ab + bc + 1e-10);
    }
}

TEST_CASE("isotropic model orders pairs like squared Euclidean distance") {
    const CovarianceModel m = covariance_model(kDiamond);  // sigma = I/2
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const Point a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point c{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point d{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const bool by_as = as_distance(m, a, b) < as_distance(m, c, d);
        const bool by_euclid = squared_length(a - b) < squared_length(c - d);
        CHECK(by_as == by_euclid);
    }
}

TEST_CASE("normalize produces identity covariance and zero mean") {
    SUBCASE("hand example {(2,0),(-2,0),(0,1),(0,-1)}") {
        const PointSet out = normalize({{2, 0}, {-2, 0}, {0, 1}, {0, -1}});
        const CovarianceModel m = covariance_model(out);
        CHECK(std::fabs(m.mu.x) < 1e-9);
        CHECK(std::fabs(m.mu.y) < 1e-9);
        CHECK(m.sigma.a == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::fabs(m.sigma.b) < 1e-9);
        CHECK(m.sigma.c == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("random sets") {
        Rng rng(37);
        TrialConfig cfg;
        for (int i = 0; i < 20; ++i) {
            const PointSet out = normalize(random_point_set(rng, 14, cfg));
            const CovarianceModel m = covariance_model(out);
            CHECK(std::fabs(m.sigma.a - 1.0) < 1e-9);
            CHECK(std::fabs(m.sigma.b) < 1e-9);
            CHECK(std::fabs(m.sigma.c - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("normalize(S) and normalize(alpha(S)) agree up to isometry") {
    Rng rng(41);
    TrialConfig cfg;
    for (int i = 0; i < 25; ++i) {
        const PointSet s = random_point_set(rng, 12, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const std::vector<double> d1 = pairwise_distances(normalize(s));
        const std::vector<double> d2 = pairwise_distances(normalize(apply_affine(a, s)));
        REQUIRE(d1.size() == d2.size());
        for (std::size_t k = 0; k < d1.size(); ++k)
            CHECK(std::fabs(d1[k] - d2[k]) < 1e-8 * std::max(1.0, d1[k]));
    }
}

TEST_CASE("an already-normalized set keeps its distance multiset") {
    Rng rng(43);
    TrialConfig cfg;
    const PointSet s = random_point_set(rng, 10, cfg);
    const PointSet once = normalize(s);
    const std::vector<double> d1 = pairwise_distances(once);
    const std::vector<double> d2 = pairwise_distances(normalize(once));
    for (std::size_t k = 0; k < d1.size(); ++k)
        CHECK(std::fabs(d1[k] - d2[k]) < 1e-9 * std::max(1.0, d1[k]));
}

TEST_CASE("general_position_check reports") {
    SUBCASE("built-in collinear triple") {
        const GeneralPositionReport r =
            general_position_check({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
        REQUIRE(r.collinear_triples.size() == 1);
        CHECK(r.collinear_triples[0] == std::array<int, 3>{0, 1, 2});
    }
    SUBCASE("diamond: all four points equidistant from the mean") {
        const GeneralPositionReport r = general_position_check(kDiamond);
        CHECK(r.collinear_triples.empty());
        CHECK(r.equal_distance_pairs.size() == 6);  // all pairs tie
        CHECK_FALSE(r.in_general_position());
    }
    SUBCASE("random perturbed sets are clean") {
        Rng rng(47);
        TrialConfig cfg;
        for (int i = 0; i < 10; ++i)
            CHECK(general_position_check(random_point_set(rng, 20, cfg))
                      .in_general_position());
    }
}

TEST_CASE("edge-length rank order is affine invariant (ranked edge list)") {
    Rng rng(53);
    TrialConfig cfg;
    for (int i = 0; i < 30; ++i) {
        const PointSet s = random_point_set(rng, 12, cfg);
        const AffineMap a = random_affine(rng, cfg);
        const PointSet t = apply_affine(a, s);
        const RankedEdgeList r1 = ranked_edges(s, covariance_model(s));
        const RankedEdgeList r2 = ranked_edges(t, covariance_model(t));
        REQUIRE(r1.edges.size() == r2.edges.size());
        for (std::size_t k = 0; k < r1.edges.size(); ++k) {
            CHECK(r1.edges[k].i == r2.edges[k].i);
            CHECK(r1.edges[k].j == r2.edges[k].j);
        }
    }
}
