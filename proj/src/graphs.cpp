#include "affinelab/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace affinelab {
namespace {

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// True iff p lies strictly inside the open segment ab (callers have already
// established collinearity).
bool strictly_between(Point a, Point b, Point p) {
    if (a.x != b.x) return (a.x < p.x) != (b.x < p.x) && p.x != a.x && p.x != b.x;
    return (a.y < p.y) != (b.y < p.y) && p.y != a.y && p.y != b.y;
}

}  // namespace

bool EdgeGraph::contains(Edge e) const {
    if (!directed && e.first > e.second) std::swap(e.first, e.second);
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool EdgeGraph::subgraph_of(const EdgeGraph& other) const {
    for (Edge e : edges)
        if (!other.contains(e)) return false;
    return true;
}

EdgeGraph make_edge_graph(int vertex_count, std::vector<Edge> edges, bool directed) {
    for (Edge& e : edges) {
        if (e.first < 0 || e.second < 0 || e.first >= vertex_count ||
            e.second >= vertex_count)
            throw Error("edge index out of range");
        if (e.first == e.second) throw Error("self-loop edge");
        if (!directed && e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {vertex_count, std::move(edges), directed};
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.size() < 3) return cycle;
    const auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle[1] > cycle.back()) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

std::array<int, 4> canonical_quad(std::array<int, 4> cycle) {
    std::vector<int> c(cycle.begin(), cycle.end());
    c = canonical_cycle(std::move(c));
    return {c[0], c[1], c[2], c[3]};
}

Triangulation make_triangulation(int vertex_count,
                                 std::vector<std::array<int, 3>> triangles,
                                 std::vector<int> outer_cycle) {
    Triangulation t;
    t.vertex_count = vertex_count;
    std::set<Edge> edge_set;
    for (auto& tri : triangles) {
        std::sort(tri.begin(), tri.end());
        if (tri[0] < 0 || tri[2] >= vertex_count || tri[0] == tri[1] || tri[1] == tri[2])
            throw Error("invalid triangle");
        edge_set.insert({tri[0], tri[1]});
        edge_set.insert({tri[0], tri[2]});
        edge_set.insert({tri[1], tri[2]});
    }
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
    t.triangles = std::move(triangles);
    t.edges.assign(edge_set.begin(), edge_set.end());
    t.hull = canonical_cycle(std::move(outer_cycle));
    return t;
}

std::vector<int> convex_hull(const PointSet& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw DegenerateInput("convex_hull: need at least 3 points");

    std::vector<int> idx(points.size());
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return points[a].x != points[b].x ? points[a].x < points[b].x
                                          : points[a].y < points[b].y;
    });
    for (int i = 0; i + 1 < n; ++i)
        if (points[idx[i]] == points[idx[i + 1]])
            throw DegenerateInput("convex_hull: duplicate points");

    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(points[chain[chain.size() - 2]], points[chain.back()],
                          points[*it]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<int> lower = build(idx.begin(), idx.end());
    std::vector<int> upper = build(idx.rbegin(), idx.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw DegenerateInput("convex_hull: all points collinear");
    return canonical_cycle(std::move(lower));
}

bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

int point_in_triangle(Point p, Point a, Point b, Point c) {
    const int t = orient(a, b, c);
    if (t == 0) throw DegenerateInput("point_in_triangle: degenerate triangle");
    const int u1 = t * orient(a, b, p);
    const int u2 = t * orient(b, c, p);
    const int u3 = t * orient(c, a, p);
    if (u1 < 0 || u2 < 0 || u3 < 0) return -1;
    if (u1 > 0 && u2 > 0 && u3 > 0) return 1;
    return 0;
}

PlanarFaces planar_faces(const PointSet& points, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> adj(points.size());
    for (Edge e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }

    // CCW angular order around each vertex, starting at the +x axis.
    for (int v = 0; v < n; ++v) {
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) {
            const Point da = points[a] - points[v];
            const Point db = points[b] - points[v];
            const int ha = (da.y < 0.0 || (da.y == 0.0 && da.x < 0.0)) ? 1 : 0;
            const int hb = (db.y < 0.0 || (db.y == 0.0 && db.x < 0.0)) ? 1 : 0;
            if (ha != hb) return ha < hb;
            const int s = orient(points[v], points[a], points[b]);
            if (s != 0) return s > 0;
            return a < b;
        });
    }

    // position of u in adj[v]
    std::map<Edge, int> slot;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < static_cast<int>(adj[v].size()); ++k)
            slot[{v, adj[v][k]}] = k;

    std::set<Edge> visited;
    PlanarFaces faces;
    bool outer_found = false;
    for (Edge e0 : edges) {
        for (Edge start : {e0, Edge{e0.second, e0.first}}) {
            if (visited.count(start)) continue;
            std::vector<int> cycle;
            Edge he = start;
            do {
                visited.insert(he);
                cycle.push_back(he.first);
                const auto& ring = adj[he.second];
                const int k = slot.at({he.second, he.first});
                // Turn to the neighbor immediately clockwise of the reverse
                // edge: traces the face with its interior on the left.
                const int next = ring[(k + static_cast<int>(ring.size()) - 1) %
                                      ring.size()];
                he = {he.second, next};
            } while (he != start);

            double area2 = 0.0;
            for (std::size_t i = 0; i < cycle.size(); ++i)
                area2 += cross(points[cycle[i]],
                               points[cycle[(i + 1) % cycle.size()]]);
            if (area2 < 0.0) {
                if (outer_found) throw Error("planar_faces: ambiguous outer face");
                outer_found = true;
                faces.outer = cycle;
            } else {
                faces.bounded.push_back(std::move(cycle));
            }
        }
    }
    if (!outer_found) throw Error("planar_faces: no outer face found");
    return faces;
}

std::vector<std::string> audit_planarity(const PointSet& points,
                                         const std::vector<Edge>& edges) {
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_properly_cross(points[a], points[b], points[c], points[d]))
                violations.push_back("edges " + edge_str(edges[i]) + " and " +
                                     edge_str(edges[j]) + " cross");
        }
        // A vertex in the interior of an edge breaks planarity even without
        // a proper crossing.
        for (int v = 0; v < static_cast<int>(points.size()); ++v) {
            if (v == a || v == b) continue;
            if (orient(points[a], points[b], points[v]) == 0 &&
                strictly_between(points[a], points[b], points[v]))
                violations.push_back("vertex " + std::to_string(v) +
                                     " lies inside edge " + edge_str(edges[i]));
        }
    }
    return violations;
}

std::vector<std::string> audit_point_set_triangulation(const PointSet& points,
                                                       const Triangulation& t) {
    std::vector<std::string> violations = audit_planarity(points, t.edges);
    const int n = static_cast<int>(points.size());
    const int h = static_cast<int>(convex_hull(points).size());
    const int expect_tris = 2 * n - 2 - h;
    const int expect_edges = 3 * n - 3 - h;
    if (static_cast<int>(t.triangles.size()) != expect_tris)
        violations.push_back("triangle count " + std::to_string(t.triangles.size()) +
                             " != 2n-2-h = " + std::to_string(expect_tris));
    if (static_cast<int>(t.edges.size()) != expect_edges)
        violations.push_back("edge count " + std::to_string(t.edges.size()) +
                             " != 3n-3-h = " + std::to_string(expect_edges));
    const PlanarFaces faces = planar_faces(points, t.edges);
    for (const auto& f : faces.bounded)
        if (f.size() != 3)
            violations.push_back("bounded face with " + std::to_string(f.size()) +
                                 " vertices");
    if (faces.bounded.size() != t.triangles.size())
        violations.push_back("face count does not match triangle count");
    return violations;
}

std::vector<std::string> audit_polygon_triangulation(const PointSet& vertices,
                                                     const Triangulation& t) {
    std::vector<std::string> violations = audit_planarity(vertices, t.edges);
    const int n = static_cast<int>(vertices.size());
    if (static_cast<int>(t.triangles.size()) != n - 2)
        violations.push_back("triangle count " + std::to_string(t.triangles.size()) +
                             " != n-2 = " + std::to_string(n - 2));
    const PlanarFaces faces = planar_faces(vertices, t.edges);
    for (const auto& f : faces.bounded)
        if (f.size() != 3)
            violations.push_back("bounded face with " + std::to_string(f.size()) +
                                 " vertices");
    if (static_cast<int>(faces.outer.size()) != n)
        violations.push_back("outer face does not visit every polygon vertex");
    return violations;
}

std::vector<std::string> audit_quadrangulation(const PointSet& points,
                                               const Quadrangulation& q) {
    std::vector<std::string> violations = audit_planarity(points, q.edges);
    // Face/edge bookkeeping: every interior edge borders two quads, every
    // boundary edge one, so |E| = 2|Q| + |hull|/2.
    const std::size_t expect_edges = 2 * q.quads.size() + q.hull.size() / 2;
    if (q.edges.size() != expect_edges)
        violations.push_back("edge count " + std::to_string(q.edges.size()) +
                             " != 2q + h/2 = " + std::to_string(expect_edges));
    const PlanarFaces faces = planar_faces(points, q.edges);
    for (const auto& f : faces.bounded)
        if (f.size() != 4)
            violations.push_back("bounded face with " + std::to_string(f.size()) +
                                 " vertices");
    if (faces.bounded.size() != q.quads.size())
        violations.push_back("face count does not match quad count");
    std::set<std::array<int, 4>> face_quads;
    for (const auto& f : faces.bounded)
        if (f.size() == 4) face_quads.insert(canonical_quad({f[0], f[1], f[2], f[3]}));
    for (const auto& quad : q.quads)
        if (!face_quads.count(quad))
            violations.push_back("stored quad is not a face of the embedding");
    return violations;
}

}  // namespace affinelab
