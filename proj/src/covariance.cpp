#include "affinelab/covariance.hpp"

#include <array>
#include <cmath>

namespace affinelab {

PointSet apply_affine(const AffineMap& alpha, const PointSet& s) {
    PointSet out;
    out.reserve(s.size());
    for (Point p : s) out.push_back(alpha.apply(p));
    return out;
}

CovarianceModel covariance_model(const PointSet& s) {
    const std::size_t n = s.size();
    if (n < 3) throw ModelDegenerate("covariance_model: need at least 3 points");
    for (Point p : s)
        if (!p.finite()) throw Error("covariance_model: non-finite coordinate");

    CovarianceModel m;
    m.n = n;

    double sx = 0.0, sy = 0.0;
    for (Point p : s) { sx += p.x; sy += p.y; }
    m.mu = {sx / static_cast<double>(n), sy / static_cast<double>(n)};

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (Point p : s) {
        const double dx = p.x - m.mu.x;
        const double dy = p.y - m.mu.y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    m.sigma = {sxx * inv_n, sxy * inv_n, syy * inv_n};

    const double det = m.sigma.det();
    const double tr = m.sigma.trace();
    if (!(det > 1e-12 * tr * tr))
        throw ModelDegenerate("covariance_model: point set is (near-)collinear");

    m.sigma_inv = {m.sigma.c / det, -m.sigma.b / det, m.sigma.a / det};
    m.eig = eigen_symmetric(m.sigma);

    const double r1 = std::sqrt(m.eig.lambda1);
    const double r2 = std::sqrt(m.eig.lambda2);
    // Q Lambda^{1/2}: columns scaled by sqrt eigenvalues.
    m.denormalizer = AffineMap::linear(m.eig.q00 * r1, m.eig.q01 * r2,
                                       m.eig.q10 * r1, m.eig.q11 * r2);
    // (Q Lambda^{1/2})^{-1} = Lambda^{-1/2} Q^T.
    m.normalizer = AffineMap::linear(m.eig.q00 / r1, m.eig.q10 / r1,
                                     m.eig.q01 / r2, m.eig.q11 / r2);
    return m;
}

double as_norm(const CovarianceModel& model, Point v) {
    return dot(v, model.sigma_inv.apply(v));
}

double as_distance(const CovarianceModel& model, Point u, Point w) {
    return as_norm(model, u - w);
}

PointSet normalize(const PointSet& s) {
    const CovarianceModel m = covariance_model(s);
    PointSet out;
    out.reserve(s.size());
    for (Point p : s) out.push_back(m.to_normalized(p));
    return out;
}

GeneralPositionReport general_position_check(const PointSet& s) {
    GeneralPositionReport report;
    const int n = static_cast<int>(s.size());

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(s[i], s[j], s[k]) == 0)
                    report.collinear_triples.push_back({i, j, k});

    CovarianceModel model;
    try {
        model = covariance_model(s);
    } catch (const ModelDegenerate&) {
        return report;  // collinear set; the triples above already say so
    }

    std::vector<double> d(s.size());
    for (int i = 0; i < n; ++i) d[i] = as_distance(model, s[i], model.mu);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double gap = std::fabs(d[i] - d[j]);
            if (gap <= 1e-12 * std::max(std::fabs(d[i]), std::fabs(d[j])))
                report.equal_distance_pairs.push_back({i, j});
        }
    return report;
}

}  // namespace affinelab
