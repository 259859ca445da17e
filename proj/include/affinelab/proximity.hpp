#pragma once

#include "affinelab/delaunay.hpp"
#include "affinelab/graphs.hpp"

namespace affinelab {

struct RankedEdge {
    int i, j;
    double length;  // A_S length (square root of the quadratic form)
};

// All n-choose-2 edges sorted by strictly increasing A_S length. Throws
// DegenerateInput if two consecutive lengths agree within 1e-12 relative.
struct RankedEdgeList {
    std::vector<RankedEdge> edges;
};
RankedEdgeList ranked_edges(const PointSet& s, const CovarianceModel& model);

// Edge uv kept iff the closed disk with diameter uv (in normalized
// coordinates) contains no third point strictly inside. A third point on the
// diametral circle within 1e-12 relative is a degenerate input.
EdgeGraph gabriel_as(const PointSet& s, const CovarianceModel& model);

// Edge uv kept iff A_S(u-v) <= max(A_S(u-w), A_S(v-w)) for all w. An exact
// tie in the comparison (1e-12 relative) is a degenerate input.
EdgeGraph rng_as(const PointSet& s, const CovarianceModel& model);

// Unique minimum spanning tree under the strict A_S edge-length order.
EdgeGraph mst_as(const PointSet& s, const CovarianceModel& model);

// Union over u of edges to u's k nearest neighbors. Directed by default
// (pairs keep source, target order); with undirected_union the symmetric
// union is returned.
EdgeGraph knng_as(const PointSet& s, const CovarianceModel& model, int k,
                  bool undirected_union = false);

// Argmin pair of as_distance; ties are degenerate.
Edge closest_pair_as(const PointSet& s, const CovarianceModel& model);

// Scans ranked edges ascending, keeping each edge that crosses no kept edge.
Triangulation greedy_triangulation_as(const PointSet& s, const CovarianceModel& model);

// Exact minimum-A_S-weight triangulation: interval DP for points in convex
// position (n <= 200), exhaustive search over the flip graph otherwise
// (n <= 12).
Triangulation mwt_as_exact(const PointSet& s, const CovarianceModel& model);

double triangulation_weight_as(const PointSet& s, const CovarianceModel& model,
                               const Triangulation& t);

// Gabriel / RNG regions with up to k points strictly inside.
EdgeGraph order_k_gabriel_as(const PointSet& s, const CovarianceModel& model, int k);
EdgeGraph order_k_rng_as(const PointSet& s, const CovarianceModel& model, int k);

struct HierarchyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks MST subset of k-RNG subset of k-GG subset of k-DG for k = 0..kmax
// (k = 0 being the plain RNG/Gabriel/Delaunay chain).
HierarchyReport verify_hierarchy(const PointSet& s, const CovarianceModel& model,
                                 int kmax);

}  // namespace affinelab
