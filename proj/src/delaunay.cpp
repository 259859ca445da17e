#include "affinelab/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

namespace affinelab {
namespace {

// Incircle sign with the near-cocircular rejection described in the header.
int incircle_guarded(Point a, Point b, Point c, Point d) {
    double permanent = 0.0;
    const double est = predicates::incircle_estimate(a.x, a.y, b.x, b.y, c.x, c.y,
                                                     d.x, d.y, &permanent);
    if (std::fabs(est) <= kCocircularRejectTol * permanent)
        throw DegenerateInput("near-cocircular quadruple");
    return est > 0.0 ? 1 : -1;
}

struct TriRec {
    int a, b, c;  // CCW
    bool alive = true;
};

Edge canon(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class FlipMesh {
public:
    explicit FlipMesh(const PointSet& pts) : pts_(pts) {}

    void add_triangle(int a, int b, int c) {
        if (orient(pts_[a], pts_[b], pts_[c]) <= 0) std::swap(b, c);
        const int id = static_cast<int>(tris_.size());
        tris_.push_back({a, b, c, true});
        attach(id);
    }

    void legalize() {
        std::queue<Edge> pending;
        for (const auto& [e, ts] : edge_tris_)
            if (ts.size() == 2) pending.push(e);

        std::size_t guard = 0;
        const std::size_t guard_limit = 64 * pts_.size() * pts_.size() + 4096;
        while (!pending.empty()) {
            if (++guard > guard_limit) throw Error("delaunay: flip loop did not settle");
            const Edge e = pending.front();
            pending.pop();
            auto it = edge_tris_.find(e);
            if (it == edge_tris_.end() || it->second.size() != 2) continue;
            const int t1 = it->second[0], t2 = it->second[1];
            if (!tris_[t1].alive || !tris_[t2].alive) continue;

            const int a = third_vertex(t1, e);
            const int b = third_vertex(t2, e);
            const auto [u, v] = e;
            const auto& r1 = tris_[t1];
            if (incircle_guarded(pts_[r1.a], pts_[r1.b], pts_[r1.c], pts_[b]) <= 0)
                continue;

            // A violated edge of a valid triangulation always spans a
            // strictly convex quad: u and v straddle the new diagonal a-b.
            if (orient(pts_[a], pts_[b], pts_[u]) * orient(pts_[a], pts_[b], pts_[v]) >= 0)
                throw Error("delaunay: incircle violation across a non-convex quad");

            detach(t1);
            detach(t2);
            tris_[t1].alive = tris_[t2].alive = false;
            add_triangle(a, u, b);
            add_triangle(b, v, a);
            for (Edge side : {canon(a, u), canon(u, b), canon(b, v), canon(v, a)})
                pending.push(side);
        }
    }

    std::vector<std::array<int, 3>> triangles() const {
        std::vector<std::array<int, 3>> out;
        for (const auto& t : tris_)
            if (t.alive) out.push_back({t.a, t.b, t.c});
        return out;
    }

private:
    void attach(int id) {
        const auto& t = tris_[id];
        edge_tris_[canon(t.a, t.b)].push_back(id);
        edge_tris_[canon(t.b, t.c)].push_back(id);
        edge_tris_[canon(t.c, t.a)].push_back(id);
    }

    void detach(int id) {
        const auto& t = tris_[id];
        for (Edge e : {canon(t.a, t.b), canon(t.b, t.c), canon(t.c, t.a)}) {
            auto& v = edge_tris_[e];
            v.erase(std::remove(v.begin(), v.end(), id), v.end());
            if (v.empty()) edge_tris_.erase(e);
        }
    }

    int third_vertex(int id, Edge e) const {
        const auto& t = tris_[id];
        for (int v : {t.a, t.b, t.c})
            if (v != e.first && v != e.second) return v;
        throw Error("delaunay: malformed triangle adjacency");
    }

    const PointSet& pts_;
    std::vector<TriRec> tris_;
    std::map<Edge, std::vector<int>> edge_tris_;
};

}  // namespace

Triangulation delaunay(const PointSet& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw DegenerateInput("delaunay: need at least 3 points");
    for (Point p : pts)
        if (!p.finite()) throw Error("delaunay: non-finite coordinate");

    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return pts[i].x != pts[j].x ? pts[i].x < pts[j].x : pts[i].y < pts[j].y;
    });
    for (int i = 0; i + 1 < n; ++i)
        if (pts[order[i]] == pts[order[i + 1]])
            throw DegenerateInput("delaunay: duplicate points");

    // Leading collinear run q_0..q_{r-1}; q_r is the first point off the line.
    int r = 2;
    while (r < n && orient(pts[order[0]], pts[order[1]], pts[order[r]]) == 0) ++r;
    if (r == n) throw DegenerateInput("delaunay: all points collinear");

    FlipMesh mesh(pts);
    for (int j = 0; j + 1 < r; ++j)
        mesh.add_triangle(order[j], order[j + 1], order[r]);

    std::vector<int> hull;  // CCW cycle of the current boundary
    if (orient(pts[order[0]], pts[order[r - 1]], pts[order[r]]) > 0) {
        for (int j = 0; j < r; ++j) hull.push_back(order[j]);
    } else {
        for (int j = r - 1; j >= 0; --j) hull.push_back(order[j]);
    }
    hull.push_back(order[r]);

    for (int i = r + 1; i < n; ++i) {
        const int q = order[i];
        const int h = static_cast<int>(hull.size());
        std::vector<bool> visible(h);
        int visible_count = 0;
        for (int j = 0; j < h; ++j) {
            visible[j] = orient(pts[hull[j]], pts[hull[(j + 1) % h]], pts[q]) < 0;
            visible_count += visible[j];
        }
        if (visible_count == 0)
            throw DegenerateInput("delaunay: point collinear with hull chain");

        int arc_start = -1;
        int arcs = 0;
        for (int j = 0; j < h; ++j) {
            if (visible[j] && !visible[(j + h - 1) % h]) {
                arc_start = j;
                ++arcs;
            }
        }
        if (arcs != 1)
            throw DegenerateInput("delaunay: point collinear with hull chain");

        std::vector<int> new_hull{q};
        for (int j = (arc_start + visible_count) % h; j != arc_start; j = (j + 1) % h)
            new_hull.push_back(hull[j]);
        new_hull.push_back(hull[arc_start]);
        for (int j = 0; j < visible_count; ++j) {
            const int a = hull[(arc_start + j) % h];
            const int b = hull[(arc_start + j + 1) % h];
            mesh.add_triangle(a, q, b);
        }
        hull = std::move(new_hull);
    }

    mesh.legalize();
    return make_triangulation(n, mesh.triangles(), hull);
}

Triangulation delaunay_as(const PointSet& s) {
    return delaunay(normalize(s));
}

Triangulation brute_force_delaunay(const PointSet& s, const CovarianceModel* model) {
    const int n = static_cast<int>(s.size());
    if (n < 3) throw DegenerateInput("brute_force_delaunay: need at least 3 points");
    if (n > 200) throw UnsupportedInput("brute_force_delaunay: n > 200");

    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (orient(s[i], s[j], s[k]) == 0) continue;
                bool empty = true;
                if (model == nullptr) {
                    const int o = orient(s[i], s[j], s[k]);
                    for (int w = 0; w < n && empty; ++w) {
                        if (w == i || w == j || w == k) continue;
                        empty = o * predicates::incircle(s[i].x, s[i].y, s[j].x,
                                                         s[j].y, s[k].x, s[k].y,
                                                         s[w].x, s[w].y) <= 0;
                    }
                } else {
                    // Circum-ellipse of the quadratic form: the center c
                    // satisfies Q(p - c) equal over the three points.
                    const SymmetricMatrix2& A = model->sigma_inv;
                    const Point ai = A.apply(s[i]);
                    const Point aj = A.apply(s[j]);
                    const Point ak = A.apply(s[k]);
                    const double qi = dot(s[i], ai), qj = dot(s[j], aj),
                                 qk = dot(s[k], ak);
                    const double m00 = 2.0 * (aj.x - ai.x), m01 = 2.0 * (aj.y - ai.y);
                    const double m10 = 2.0 * (ak.x - ai.x), m11 = 2.0 * (ak.y - ai.y);
                    const double det = m00 * m11 - m01 * m10;
                    const double r0 = qj - qi, r1 = qk - qi;
                    const Point c{(r0 * m11 - r1 * m01) / det,
                                  (m00 * r1 - m10 * r0) / det};
                    const double rr = as_norm(*model, s[i] - c);
                    for (int w = 0; w < n && empty; ++w) {
                        if (w == i || w == j || w == k) continue;
                        empty = as_norm(*model, s[w] - c) >= rr;
                    }
                }
                if (empty) tris.push_back({i, j, k});
            }
    return make_triangulation(n, std::move(tris), convex_hull(s));
}

EdgeGraph order_k_delaunay(const PointSet& s, const CovarianceModel& model, int k) {
    const int n = static_cast<int>(s.size());
    if (n < 3) throw DegenerateInput("order_k_delaunay: need at least 3 points");
    if (k < 0 || k > n - 2) throw UnsupportedInput("order_k_delaunay: k out of range");

    PointSet w(s.size());
    for (int i = 0; i < n; ++i) w[i] = model.to_normalized(s[i]);

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Point mid = 0.5 * (w[u] + w[v]);
            const Point dir = w[v] - w[u];
            const Point perp{-dir.y, dir.x};
            const double ru = squared_length(mid - w[u]);

            // Point x is strictly inside the circle centered at mid + t*perp
            // through u and v iff A + B*t < 0.
            int base = 0;
            std::vector<std::pair<double, int>> events;  // (t, +1 enter / -1 leave)
            for (int x = 0; x < n; ++x) {
                if (x == u || x == v) continue;
                const double A = squared_length(mid - w[x]) - ru;
                const double B = 2.0 * dot(perp, mid - w[x]);
                if (B == 0.0) {
                    if (A == 0.0)
                        throw DegenerateInput("order_k_delaunay: point on every disk");
                    if (A < 0.0) ++base;
                    continue;
                }
                const double t = -A / B;
                if (B > 0.0) {
                    ++base;  // inside for t < t_x
                    events.push_back({t, -1});
                } else {
                    events.push_back({t, +1});
                }
            }
            std::sort(events.begin(), events.end());

            int best = base;
            int current = base;
            std::size_t idx = 0;
            while (idx < events.size()) {
                const double t = events[idx].first;
                int leaves = 0, enters = 0;
                while (idx < events.size() && events[idx].first == t) {
                    (events[idx].second < 0 ? leaves : enters) += 1;
                    ++idx;
                }
                current -= leaves;
                best = std::min(best, current);  // at t: leavers sit on the circle
                current += enters;
                best = std::min(best, current);  // just after t
            }
            if (best <= k) edges.push_back({u, v});
        }
    return make_edge_graph(n, std::move(edges));
}

double spanning_ratio(const PointSet& s, const EdgeGraph& g, Metric metric,
                      const CovarianceModel* model) {
    const int n = static_cast<int>(s.size());
    if (n < 2) throw Error("spanning_ratio: need at least 2 points");
    if (metric == Metric::as && model == nullptr)
        throw Error("spanning_ratio: A_S metric needs a model");

    auto weight = [&](int i, int j) {
        if (metric == Metric::euclidean) return std::sqrt(squared_length(s[i] - s[j]));
        return std::sqrt(as_distance(*model, s[i], s[j]));
    };

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (Edge e : g.edges) {
        const double wgt = weight(e.first, e.second);
        adj[e.first].push_back({e.second, wgt});
        adj[e.second].push_back({e.first, wgt});
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    double ratio = 1.0;
    std::vector<double> dist(n);
    std::vector<bool> done(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), false);
        dist[src] = 0.0;
        for (int round = 0; round < n; ++round) {
            int u = -1;
            for (int i = 0; i < n; ++i)
                if (!done[i] && (u < 0 || dist[i] < dist[u])) u = i;
            if (u < 0 || dist[u] == kInf) break;
            done[u] = true;
            for (auto [v, wgt] : adj[u])
                if (dist[u] + wgt < dist[v]) dist[v] = dist[u] + wgt;
        }
        for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (dist[v] == kInf) throw Error("spanning_ratio: graph disconnected");
            const double direct = weight(src, v);
            if (direct == 0.0) throw DegenerateInput("spanning_ratio: coincident points");
            ratio = std::max(ratio, dist[v] / direct);
        }
    }
    return ratio;
}

}  // namespace affinelab
