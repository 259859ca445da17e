#pragma once


#include "affinelab/graphs.hpp"

namespace affinelab {

// Near-cocircular rejection threshold: an incircle test whose filter-stage
// value is within this fraction of its magnitude scale aborts with
// DegenerateInput instead of deciding the flip, so edge sets stay
// deterministic under the invariance harness.
inline constexpr double kCocircularRejectTol = 1e-10;

// Euclidean Delaunay triangulation (lexicographic scan + Lawson flips with
// exact incircle tests). Throws DegenerateInput on duplicate points,
// unresolvable collinear hull chains, or near-cocircular quadruples.
Triangulation delaunay(const PointSet& s);

// A_S-Delaunay triangulation: the Euclidean Delaunay of normalize(s),
// reported on the indices of s.
Triangulation delaunay_as(const PointSet& s);

// O(n^4) empty-disk oracle, test use only (n <= 200). Without a model it
// tests Euclidean circumcircles with the exact incircle predicate; with a
// model it tests circum-ellipses of the quadratic form v^T Sigma^{-1} v
// directly on the input coordinates.
Triangulation brute_force_delaunay(const PointSet& s,
                                   const CovarianceModel* model = nullptr);

// Order-k A_S-Delaunay graph: edge uv kept iff some disk of the A_S metric
// with u, v on its boundary has at most k points strictly inside. Evaluated
// in normalized coordinates by sweeping the pencil of circles through u, v.
EdgeGraph order_k_delaunay(const PointSet& s, const CovarianceModel& model, int k);

enum class Metric { euclidean, as };

// max over vertex pairs of shortest-path length / direct distance, both in
// the chosen metric. Throws Error when the graph is disconnected. `model`
// is required for Metric::as.
double spanning_ratio(const PointSet& s, const EdgeGraph& g, Metric metric,
                      const CovarianceModel* model = nullptr);

}  // namespace affinelab
