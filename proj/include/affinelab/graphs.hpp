#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "affinelab/covariance.hpp"

namespace affinelab {

using Edge = std::pair<int, int>;

// Index-based geometric graph. Edges are canonical (i < j) and sorted unless
// directed is set, in which case pairs keep their (source, target) order.
struct EdgeGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    bool directed = false;

    bool contains(Edge e) const;
    bool subgraph_of(const EdgeGraph& other) const;
};

// Canonicalizes (sorts, dedupes, validates index ranges and self-loops).
EdgeGraph make_edge_graph(int vertex_count, std::vector<Edge> edges,
                          bool directed = false);

struct Triangulation {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;  // sorted triples, sorted list
    std::vector<Edge> edges;                    // derived, canonical
    std::vector<int> hull;  // outer boundary cycle, canonical rotation

    EdgeGraph edge_graph() const { return {vertex_count, edges, false}; }
};

// Builds a Triangulation from raw triples; derives edges, canonicalizes, and
// stores the given outer cycle (normalized to start at its minimum index,
// second element the smaller neighbor).
Triangulation make_triangulation(int vertex_count,
                                 std::vector<std::array<int, 3>> triangles,
                                 std::vector<int> outer_cycle);

struct Quadrangulation {
    int vertex_count = 0;
    std::vector<std::array<int, 4>> quads;  // canonical cycles, sorted list
    std::vector<Edge> edges;
    std::vector<int> hull;
};

// Rotation/direction-normalized 4-cycle: minimum vertex first, then the
// smaller of its two cycle neighbors.
std::array<int, 4> canonical_quad(std::array<int, 4> cycle);

std::vector<int> canonical_cycle(std::vector<int> cycle);

// Strict convex hull (no collinear vertices kept) as a CCW index cycle.
// Throws DegenerateInput when all points are collinear.
std::vector<int> convex_hull(const PointSet& points);

// True iff the open segments ab and cd intersect in exactly one interior
// point of each (exact arithmetic; touching at shared endpoints is not a
// crossing).
bool segments_properly_cross(Point a, Point b, Point c, Point d);

// +1 strictly inside, 0 on the boundary, -1 outside (exact).
int point_in_triangle(Point p, Point a, Point b, Point c);

// Faces of a crossing-free straight-line graph embedded on `points`.
// `bounded` holds each inner face as a CCW vertex cycle; `outer` is the
// boundary of the unbounded face (CW as traversed). Requires a connected
// graph with at least one cycle.
struct PlanarFaces {
    std::vector<std::vector<int>> bounded;
    std::vector<int> outer;
};
PlanarFaces planar_faces(const PointSet& points, const std::vector<Edge>& edges);

// Audits used by tests and the acceptance suite: exact pairwise
// non-crossing of edges, plus face structure checks. Returns a list of
// human-readable violations (empty = pass).
std::vector<std::string> audit_planarity(const PointSet& points,
                                         const std::vector<Edge>& edges);
std::vector<std::string> audit_point_set_triangulation(const PointSet& points,
                                                       const Triangulation& t);
std::vector<std::string> audit_polygon_triangulation(const PointSet& vertices,
                                                     const Triangulation& t);
std::vector<std::string> audit_quadrangulation(const PointSet& points,
                                               const Quadrangulation& q);

}  // namespace affinelab
