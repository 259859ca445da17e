#include "affinelab/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace affinelab {
namespace {

constexpr double kTieTol = 1e-12;

bool nearly_equal(double a, double b) {
    return std::fabs(a - b) <= kTieTol * std::max(std::fabs(a), std::fabs(b));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Count of points strictly inside the diametral disk of (u, v) in normalized
// coordinates; a point on the circle within tolerance is degenerate.
int diametral_count(const PointSet& w, int u, int v) {
    int count = 0;
    for (int x = 0; x < static_cast<int>(w.size()); ++x) {
        if (x == u || x == v) continue;
        const Point du = w[u] - w[x];
        const Point dv = w[v] - w[x];
        const double d = dot(du, dv);
        const double scale = std::sqrt(squared_length(du) * squared_length(dv));
        if (std::fabs(d) <= kTieTol * scale)
            throw DegenerateInput("gabriel: point on a diametral circle");
        if (d < 0.0) ++count;
    }
    return count;
}

// Count of points strictly inside the lune of (u, v); an exact tie against
// the defining max is degenerate.
int lune_count(const PointSet& s, const CovarianceModel& model, int u, int v) {
    const double duv = as_distance(model, s[u], s[v]);
    int count = 0;
    for (int x = 0; x < static_cast<int>(s.size()); ++x) {
        if (x == u || x == v) continue;
        const double m = std::max(as_distance(model, s[u], s[x]),
                                  as_distance(model, s[v], s[x]));
        if (nearly_equal(duv, m))
            throw DegenerateInput("rng: tie in the lune comparison");
        if (m < duv) ++count;
    }
    return count;
}

}  // namespace

RankedEdgeList ranked_edges(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    RankedEdgeList list;
    list.edges.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            list.edges.push_back({i, j, std::sqrt(as_distance(model, s[i], s[j]))});
    std::sort(list.edges.begin(), list.edges.end(),
              [](const RankedEdge& a, const RankedEdge& b) { return a.length < b.length; });
    for (std::size_t i = 0; i + 1 < list.edges.size(); ++i)
        if (nearly_equal(list.edges[i].length, list.edges[i + 1].length))
            throw DegenerateInput("ranked_edges: tied A_S edge lengths");
    return list;
}

EdgeGraph gabriel_as(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    PointSet w(s.size());
    for (int i = 0; i < n; ++i) w[i] = model.to_normalized(s[i]);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (diametral_count(w, u, v) == 0) edges.push_back({u, v});
    return make_edge_graph(n, std::move(edges));
}

EdgeGraph order_k_gabriel_as(const PointSet& s, const CovarianceModel& model, int k) {
    const int n = static_cast<int>(s.size());
    PointSet w(s.size());
    for (int i = 0; i < n; ++i) w[i] = model.to_normalized(s[i]);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (diametral_count(w, u, v) <= k) edges.push_back({u, v});
    return make_edge_graph(n, std::move(edges));
}

EdgeGraph rng_as(const PointSet& s, const CovarianceModel& model) {
    return order_k_rng_as(s, model, 0);
}

EdgeGraph order_k_rng_as(const PointSet& s, const CovarianceModel& model, int k) {
    const int n = static_cast<int>(s.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (lune_count(s, model, u, v) <= k) edges.push_back({u, v});
    return make_edge_graph(n, std::move(edges));
}

EdgeGraph mst_as(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    const RankedEdgeList ranked = ranked_edges(s, model);
    UnionFind uf(n);
    std::vector<Edge> edges;
    for (const RankedEdge& e : ranked.edges)
        if (uf.unite(e.i, e.j)) edges.push_back({e.i, e.j});
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error("mst_as: spanning tree has the wrong size");
    return make_edge_graph(n, std::move(edges));
}

EdgeGraph knng_as(const PointSet& s, const CovarianceModel& model, int k,
                  bool undirected_union) {
    const int n = static_cast<int>(s.size());
    if (k < 1 || k > n - 1) throw UnsupportedInput("knng_as: k out of range");

    std::vector<Edge> edges;
    std::vector<std::pair<double, int>> order;
    for (int u = 0; u < n; ++u) {
        order.clear();
        for (int v = 0; v < n; ++v)
            if (v != u) order.push_back({as_distance(model, s[u], s[v]), v});
        std::sort(order.begin(), order.end());
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (nearly_equal(order[i].first, order[i + 1].first))
                throw DegenerateInput("knng_as: tied distances from a source");
        for (int i = 0; i < k; ++i) edges.push_back({u, order[i].second});
    }
    if (undirected_union) return make_edge_graph(n, std::move(edges), false);
    return make_edge_graph(n, std::move(edges), true);
}

Edge closest_pair_as(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    if (n < 2) throw Error("closest_pair_as: need at least 2 points");
    Edge best{-1, -1};
    double best_d = 0.0, second_d = 0.0;
    bool have_best = false, have_second = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = as_distance(model, s[i], s[j]);
            if (!have_best || d < best_d) {
                second_d = best_d;
                have_second = have_best;
                best_d = d;
                best = {i, j};
                have_best = true;
            } else if (!have_second || d < second_d) {
                second_d = d;
                have_second = true;
            }
        }
    if (have_second && nearly_equal(best_d, second_d))
        throw DegenerateInput("closest_pair_as: tied minimum distance");
    return best;
}

Triangulation greedy_triangulation_as(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    const RankedEdgeList ranked = ranked_edges(s, model);

    std::vector<Edge> kept;
    for (const RankedEdge& e : ranked.edges) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (x == e.i || x == e.j) continue;
            if (orient(s[e.i], s[e.j], s[x]) == 0 &&
                std::min(s[e.i].x, s[e.j].x) <= s[x].x &&
                s[x].x <= std::max(s[e.i].x, s[e.j].x) &&
                std::min(s[e.i].y, s[e.j].y) <= s[x].y &&
                s[x].y <= std::max(s[e.i].y, s[e.j].y))
                throw DegenerateInput("greedy: vertex on a candidate edge");
        }
        for (const Edge& f : kept) {
            if (f.first == e.i || f.first == e.j || f.second == e.i ||
                f.second == e.j)
                continue;
            if (segments_properly_cross(s[e.i], s[e.j], s[f.first], s[f.second])) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back({e.i, e.j});
    }

    const PlanarFaces faces = planar_faces(s, kept);
    std::vector<std::array<int, 3>> tris;
    for (const auto& f : faces.bounded) {
        if (f.size() != 3) throw Error("greedy: non-triangular face");
        tris.push_back({f[0], f[1], f[2]});
    }
    return make_triangulation(n, std::move(tris), convex_hull(s));
}

double triangulation_weight_as(const PointSet& s, const CovarianceModel& model,
                               const Triangulation& t) {
    double total = 0.0;
    for (Edge e : t.edges)
        total += std::sqrt(as_distance(model, s[e.first], s[e.second]));
    return total;
}

namespace {

Triangulation mwt_convex_dp(const PointSet& s, const CovarianceModel& model,
                            const std::vector<int>& hull) {
    const int m = static_cast<int>(hull.size());
    auto w = [&](int a, int b) {
        return std::sqrt(as_distance(model, s[hull[a]], s[hull[b]]));
    };

    // cost[i][j]: total diagonal length inside the fan (i..j); boundary and
    // closing chord excluded.
    std::vector<std::vector<double>> cost(m, std::vector<double>(m, 0.0));
    std::vector<std::vector<int>> pick(m, std::vector<int>(m, -1));
    for (int len = 3; len < m; ++len)
        for (int i = 0; i + len < m; ++i) {
            const int j = i + len;
            double best = -1.0;
            int best_k = -1;
            for (int k = i + 1; k < j; ++k) {
                double c = cost[i][k] + cost[k][j];
                if (k > i + 1) c += w(i, k);
                if (k < j - 1) c += w(k, j);
                if (best_k < 0 || c < best) {
                    best = c;
                    best_k = k;
                }
            }
            cost[i][j] = best;
            pick[i][j] = best_k;
        }

    std::vector<std::array<int, 3>> tris;
    std::vector<std::pair<int, int>> stack{{0, m - 1}};
    while (!stack.empty()) {
        const auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2) continue;
        const int k = (j - i == 2) ? i + 1 : pick[i][j];
        tris.push_back({hull[i], hull[k], hull[j]});
        stack.push_back({i, k});
        stack.push_back({k, j});
    }
    return make_triangulation(static_cast<int>(s.size()), std::move(tris), hull);
}

using TriKey = std::vector<std::array<int, 3>>;

TriKey canonical_key(std::vector<std::array<int, 3>> tris) {
    for (auto& t : tris) std::sort(t.begin(), t.end());
    std::sort(tris.begin(), tris.end());
    return tris;
}

}  // namespace

Triangulation mwt_as_exact(const PointSet& s, const CovarianceModel& model) {
    const int n = static_cast<int>(s.size());
    const std::vector<int> hull = convex_hull(s);
    if (static_cast<int>(hull.size()) == n) {
        if (n > 200) throw UnsupportedInput("mwt_as_exact: convex case limited to n <= 200");
        // Recover the boundary order: the canonical hull cycle is already it.
        return mwt_convex_dp(s, model, hull);
    }
    if (n > 12) throw UnsupportedInput("mwt_as_exact: exhaustive case limited to n <= 12");

    // Exhaustive search over all triangulations via flip-graph traversal.
    const Triangulation start = delaunay_as(s);
    std::set<TriKey> seen;
    std::vector<TriKey> frontier{canonical_key(start.triangles)};
    seen.insert(frontier[0]);

    TriKey best = frontier[0];
    auto weight_of = [&](const TriKey& key) {
        std::set<Edge> edges;
        for (const auto& t : key) {
            edges.insert({t[0], t[1]});
            edges.insert({t[0], t[2]});
            edges.insert({t[1], t[2]});
        }
        double total = 0.0;
        for (Edge e : edges)
            total += std::sqrt(as_distance(model, s[e.first], s[e.second]));
        return total;
    };
    double best_weight = weight_of(best);

    while (!frontier.empty()) {
        const TriKey key = frontier.back();
        frontier.pop_back();

        std::map<Edge, std::vector<int>> edge_tris;
        for (int t = 0; t < static_cast<int>(key.size()); ++t) {
            const auto& tri = key[t];
            edge_tris[{tri[0], tri[1]}].push_back(t);
            edge_tris[{tri[0], tri[2]}].push_back(t);
            edge_tris[{tri[1], tri[2]}].push_back(t);
        }
        for (const auto& [e, ts] : edge_tris) {
            if (ts.size() != 2) continue;
            auto third = [&](int t) {
                for (int v : key[t])
                    if (v != e.first && v != e.second) return v;
                return -1;
            };
            const int a = third(ts[0]);
            const int b = third(ts[1]);
            const auto [u, v] = e;
            // Legal flip iff the quad a-u-b-v is strictly convex.
            if (orient(s[a], s[u], s[b]) * orient(s[b], s[v], s[a]) <= 0) continue;
            if (orient(s[u], s[b], s[v]) * orient(s[v], s[a], s[u]) <= 0) continue;

            TriKey next = key;
            next[ts[0]] = {a, u, b};
            next[ts[1]] = {a, b, v};
            next = canonical_key(std::move(next));
            if (seen.insert(next).second) {
                if (seen.size() > 2000000) throw Error("mwt_as_exact: state explosion");
                const double wgt = weight_of(next);
                if (wgt < best_weight) {
                    best_weight = wgt;
                    best = next;
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    return make_triangulation(n, best, hull);
}

HierarchyReport verify_hierarchy(const PointSet& s, const CovarianceModel& model,
                                 int kmax) {
    HierarchyReport report;
    const EdgeGraph mst = mst_as(s, model);
    for (int k = 0; k <= kmax; ++k) {
        const EdgeGraph rng_k = order_k_rng_as(s, model, k);
        const EdgeGraph gg_k = order_k_gabriel_as(s, model, k);
        const EdgeGraph dg_k = order_k_delaunay(s, model, k);
        auto check = [&](const EdgeGraph& inner, const EdgeGraph& outer,
                         const std::string& name) {
            for (Edge e : inner.edges)
                if (!outer.contains(e))
                    report.violations.push_back(
                        name + " violated at k=" + std::to_string(k) + " by edge (" +
                        std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        };
        check(mst, rng_k, "MST subset of k-RNG");
        check(rng_k, gg_k, "k-RNG subset of k-GG");
        check(gg_k, dg_k, "k-GG subset of k-DG");
    }
    return report;
}

}  // namespace affinelab
