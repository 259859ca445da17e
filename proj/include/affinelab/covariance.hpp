#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "affinelab/core.hpp"

namespace affinelab {

// Index identity: the i-th point stays the i-th point under affine maps.
using PointSet = std::vector<Point>;

PointSet apply_affine(const AffineMap& alpha, const PointSet& s);

// Population statistics of a point set together with the derived
// whitening transform. normalizer realizes (Q Lambda^{1/2})^{-1} and
// denormalizer realizes Q Lambda^{1/2}; both have zero translation, the
// centering by mu is applied explicitly in normalize().
struct CovarianceModel {
    std::size_t n = 0;
    Point mu;
    SymmetricMatrix2 sigma;
    SymmetricMatrix2 sigma_inv;
    EigenDecomposition2 eig;
    AffineMap normalizer;
    AffineMap denormalizer;

    double lambda_max() const { return eig.lambda1; }
    double lambda_min() const { return eig.lambda2; }

    // Normalized coordinates of p: normalizer * (p - mu).
    Point to_normalized(Point p) const { return normalizer.apply_linear(p - mu); }
};

// Builds the model with divide-by-n statistics. Throws ModelDegenerate when
// n < 3 or the points are (near-)collinear (det Sigma <= 1e-12 * trace^2).
CovarianceModel covariance_model(const PointSet& s);

// Quadratic form v^T Sigma^{-1} v of a displacement vector; this is the
// squared A_S-norm and induces the same ordering as the norm itself.
double as_norm(const CovarianceModel& model, Point v);

// as_norm(u - w); symmetric in u and w.
double as_distance(const CovarianceModel& model, Point u, Point w);

// { (Q Lambda^{1/2})^{-1} (p - mu) : p in s }, in input order. The result
// has identity covariance and zero mean.
PointSet normalize(const PointSet& s);

struct GeneralPositionReport {
    std::vector<std::array<int, 3>> collinear_triples;
    // Pairs whose A_S-distances to mu agree within 1e-12 relative.
    std::vector<std::pair<int, int>> equal_distance_pairs;

    bool in_general_position() const {
        return collinear_triples.empty() && equal_distance_pairs.empty();
    }
};

// Checks the paper-style general position: no exactly collinear triple and
// pairwise-distinct A_S-distances to the mean. Never throws for n >= 3 with
// a constructible model; a degenerate model is reported as all-collinear.
GeneralPositionReport general_position_check(const PointSet& s);

}  // namespace affinelab
