#include "affinelab/triangulators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace affinelab {
namespace {

PointSet gather(const PointSet& s, const std::vector<int>& idx) {
    PointSet out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(s[i]);
    return out;
}

std::vector<std::array<int, 3>> faces_as_triangles(const PointSet& pts,
                                                   const std::vector<Edge>& edges,
                                                   const char* who) {
    const PlanarFaces faces = planar_faces(pts, edges);
    std::vector<std::array<int, 3>> tris;
    tris.reserve(faces.bounded.size());
    for (const auto& f : faces.bounded) {
        if (f.size() != 3)
            throw Error(std::string(who) + ": construction left a non-triangular face");
        tris.push_back({f[0], f[1], f[2]});
    }
    return tris;
}

int turn_or_throw(Point a, Point b, Point c, const char* who) {
    const int t = orient(a, b, c);
    if (t == 0) throw DegenerateInput(std::string(who) + ": collinear triple");
    return t;
}

}  // namespace

Triangulation graham_triangulation(const PointSet& s, const PrimitiveTriple& t) {
    const int n = static_cast<int>(s.size());
    if (n < 3) throw DegenerateInput("graham: need at least 3 points");
    const OrderedIndices order = radially_sort(s, t);

    std::vector<Edge> kept;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int a = order[i], b = order[j];
            bool visible = true;
            for (const Edge& e : kept) {
                if (e.first == a || e.first == b || e.second == a || e.second == b)
                    continue;
                if (segments_properly_cross(s[a], s[b], s[e.first], s[e.second])) {
                    visible = false;
                    break;
                }
            }
            if (visible) kept.push_back({a, b});
        }
    return make_triangulation(n, faces_as_triangles(s, kept, "graham"),
                              convex_hull(s));
}

namespace {

// Affine-invariant ranking by full-set A_S distance to the full-set mean.
// Needed when the interior subset is too small for its own primitives: a
// 3-point subset always normalizes to an equilateral triangle, so subset
// distances to the subset mean tie exactly.
std::vector<int> order_by_full_distance(const PointSet& s, std::vector<int> idx) {
    const CovarianceModel model = covariance_model(s);
    std::vector<double> d(s.size());
    for (int i : idx) d[i] = as_distance(model, s[i], model.mu);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (std::fabs(d[idx[i]] - d[idx[i + 1]]) <=
            1e-12 * std::max(d[idx[i]], d[idx[i + 1]]))
            throw DegenerateInput("interior order: tied distances");
    return idx;
}

}  // namespace

std::vector<int> interior_insertion_order(const PointSet& s, PrimitiveScheme scheme) {
    const std::vector<int> hull = convex_hull(s);
    const std::set<int> hull_set(hull.begin(), hull.end());
    std::vector<int> interior;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (!hull_set.count(i)) interior.push_back(i);

    if (interior.size() <= 1) return interior;
    if (interior.size() <= 3) return order_by_full_distance(s, std::move(interior));

    const PointSet sub = gather(s, interior);
    const PrimitiveTriple t = compute_primitives(sub, scheme);
    const OrderedIndices sub_order = radially_sort(sub, t);
    std::vector<int> out;
    out.reserve(interior.size());
    for (int k : sub_order) out.push_back(interior[k]);
    return out;
}

Triangulation insertion_triangulation(const PointSet& s,
                                      const std::vector<int>& interior_order) {
    const int n = static_cast<int>(s.size());
    const std::vector<int> hull = convex_hull(s);
    const int h = static_cast<int>(hull.size());
    if (static_cast<int>(interior_order.size()) != n - h)
        throw Error("insertion: interior order does not cover the interior");
    if (interior_order.empty())
        throw UnsupportedInput("insertion: needs at least one interior point");

    std::vector<std::array<int, 3>> tris;
    for (int i = 1; i + 1 < h; ++i) tris.push_back({hull[0], hull[i], hull[i + 1]});

    for (int p : interior_order) {
        int found = -1;
        for (int ti = 0; ti < static_cast<int>(tris.size()) && found < 0; ++ti) {
            const auto& tr = tris[ti];
            const int where = point_in_triangle(s[p], s[tr[0]], s[tr[1]], s[tr[2]]);
            if (where == 0)
                throw DegenerateInput("insertion: point on a triangle edge");
            if (where > 0) found = ti;
        }
        if (found < 0) throw Error("insertion: no containing triangle");
        const auto tr = tris[found];
        tris.erase(tris.begin() + found);
        tris.push_back({tr[0], tr[1], p});
        tris.push_back({tr[1], tr[2], p});
        tris.push_back({tr[2], tr[0], p});
    }
    return make_triangulation(n, std::move(tris), hull);
}

Triangulation insertion_triangulation(const PointSet& s, PrimitiveScheme scheme) {
    return insertion_triangulation(s, interior_insertion_order(s, scheme));
}

bool dual_hamiltonian_path_exists(const Triangulation& t) {
    const int m = static_cast<int>(t.triangles.size());
    if (m > 14) throw UnsupportedInput("dual_hamiltonian_path_exists: over 14 triangles");
    if (m <= 1) return true;

    std::map<Edge, std::vector<int>> edge_tris;
    for (int i = 0; i < m; ++i) {
        const auto& tr = t.triangles[i];
        edge_tris[{tr[0], tr[1]}].push_back(i);
        edge_tris[{tr[0], tr[2]}].push_back(i);
        edge_tris[{tr[1], tr[2]}].push_back(i);
    }
    std::vector<unsigned> adj(m, 0);
    for (const auto& [e, ts] : edge_tris)
        if (ts.size() == 2) {
            adj[ts[0]] |= 1u << ts[1];
            adj[ts[1]] |= 1u << ts[0];
        }

    const unsigned full = (1u << m) - 1;
    // reach[mask] = set of possible path endpoints covering exactly `mask`.
    std::vector<unsigned> reach(1u << m, 0);
    for (int i = 0; i < m; ++i) reach[1u << i] = 1u << i;
    for (unsigned mask = 1; mask <= full; ++mask) {
        unsigned ends = reach[mask];
        if (!ends) continue;
        if (mask == full) return true;
        for (int i = 0; i < m; ++i) {
            if (!(ends & (1u << i))) continue;
            unsigned next = adj[i] & ~mask;
            while (next) {
                const int j = __builtin_ctz(next);
                next &= next - 1;
                reach[mask | (1u << j)] |= 1u << j;
            }
        }
    }
    return false;
}

std::vector<int> quadrangulate_hull_order(const PointSet& s, PrimitiveScheme scheme) {
    const std::vector<int> hull = convex_hull(s);
    const int m = static_cast<int>(hull.size());
    const PointSet sub = gather(s, hull);
    const PrimitiveTriple t = compute_primitives(sub, scheme);

    // Boundary walk from wp, turning the way the radial sort would.
    const int rot = orient(sub[t.wp_index], t.mu, t.delta);
    const int embed = orient(sub[0], sub[1], sub[2]) > 0 ? 1 : -1;  // cycle sense
    const int step = (rot == embed) ? 1 : -1;
    const int start = t.wp_index;  // sub is indexed in hull-cycle order

    std::vector<int> out;
    out.reserve(hull.size());
    for (int k = 0; k < m; ++k) out.push_back(hull[((start + step * k) % m + m) % m]);
    return out;
}

namespace {

// +1 strictly inside the simple quad cycle, 0 on its boundary, -1 outside.
int point_in_quad(const PointSet& s, const std::array<int, 4>& q, Point p) {
    std::array<int, 4> turn;
    int pos = 0, neg = 0;
    for (int i = 0; i < 4; ++i) {
        turn[i] = orient(s[q[(i + 3) % 4]], s[q[i]], s[q[(i + 1) % 4]]);
        if (turn[i] > 0) ++pos;
        if (turn[i] < 0) ++neg;
    }
    if (pos + neg < 4) throw DegenerateInput("quad with a flat corner");
    if (pos == 4 || neg == 4) {  // convex
        const int o = pos == 4 ? 1 : -1;
        bool boundary = false;
        for (int i = 0; i < 4; ++i) {
            const int side = o * orient(s[q[i]], s[q[(i + 1) % 4]], p);
            if (side < 0) return -1;
            if (side == 0) boundary = true;
        }
        return boundary ? 0 : 1;
    }
    // One reflex corner r: split along the interior diagonal (r, r+2).
    int r = 0;
    const int o = pos > neg ? 1 : -1;
    for (int i = 0; i < 4; ++i)
        if (turn[i] == -o) r = i;
    const Point vr = s[q[r]], v1 = s[q[(r + 1) % 4]], v2 = s[q[(r + 2) % 4]],
                v3 = s[q[(r + 3) % 4]];
    const int in1 = point_in_triangle(p, vr, v1, v2);
    const int in2 = point_in_triangle(p, v2, v3, vr);
    if (in1 > 0 || in2 > 0) return 1;
    if (in1 == 0 && in2 == 0) return 1;  // on the open shared diagonal
    if (in1 == 0 || in2 == 0) return 0;
    return -1;
}

}  // namespace

Quadrangulation quadrangulate(const PointSet& s, PrimitiveScheme scheme) {
    const int n = static_cast<int>(s.size());
    const std::vector<int> hull_order = quadrangulate_hull_order(s, scheme);
    const int m = static_cast<int>(hull_order.size());
    if (m % 2 != 0)
        throw UnsupportedInput("quadrangulate: odd number of hull points");

    // pos: rank in the sorted sequence (hull first, then insertion order).
    std::vector<int> pos(s.size(), -1);
    for (int i = 0; i < m; ++i) pos[hull_order[i]] = i;
    const std::vector<int> interior = interior_insertion_order(s, scheme);
    for (int i = 0; i < static_cast<int>(interior.size()); ++i)
        pos[interior[i]] = m + i;

    std::vector<std::array<int, 4>> quads;
    for (int k = 1; k + 2 < m; k += 2)
        quads.push_back({hull_order[0], hull_order[k], hull_order[k + 1],
                         hull_order[k + 2]});

    for (int p : interior) {
        int found = -1;
        for (int qi = 0; qi < static_cast<int>(quads.size()) && found < 0; ++qi) {
            const int where = point_in_quad(s, quads[qi], s[p]);
            if (where == 0)
                throw DegenerateInput("quadrangulate: point on a quad boundary");
            if (where > 0) found = qi;
        }
        if (found < 0) throw Error("quadrangulate: no containing quad");
        const std::array<int, 4> q = quads[found];
        quads.erase(quads.begin() + found);

        // Choose the connection vertex a: the unique reflex corner when the
        // quad is not convex, otherwise the minimum-rank corner. c is the
        // corner opposite a.
        int a = -1;
        int reflex = -1, o_pos = 0, o_neg = 0;
        std::array<int, 4> turn;
        for (int i = 0; i < 4; ++i) {
            turn[i] = orient(s[q[(i + 3) % 4]], s[q[i]], s[q[(i + 1) % 4]]);
            (turn[i] > 0 ? o_pos : o_neg) += 1;
        }
        if (o_pos == 4 || o_neg == 4) {
            a = 0;
            for (int i = 1; i < 4; ++i)
                if (pos[q[i]] < pos[q[a]]) a = i;
        } else {
            const int o = o_pos > o_neg ? 1 : -1;
            for (int i = 0; i < 4; ++i)
                if (turn[i] == -o) reflex = i;
            a = reflex;
        }
        const int b = (a + 1) % 4, c = (a + 2) % 4, d = (a + 3) % 4;
        quads.push_back({q[a], q[b], q[c], p});
        quads.push_back({q[c], q[d], q[a], p});
    }

    Quadrangulation result;
    result.vertex_count = n;
    std::set<Edge> edges;
    for (const auto& q : quads)
        for (int i = 0; i < 4; ++i) {
            const int u = q[i], v = q[(i + 1) % 4];
            edges.insert(u < v ? Edge{u, v} : Edge{v, u});
        }
    result.edges.assign(edges.begin(), edges.end());
    for (const auto& q : quads) result.quads.push_back(canonical_quad(q));
    std::sort(result.quads.begin(), result.quads.end());
    result.hull = canonical_cycle(hull_order);
    return result;
}

Triangulation ear_clip(const Polygon& p, const PrimitiveTriple& t) {
    const int n = p.size();
    const OrderedIndices order = traversal(p, t);  // also checks simplicity
    const int ori = p.orientation();

    std::vector<int> next(n), prev(n);
    for (int i = 0; i < n; ++i) {
        next[i] = p.index(i + 1);
        prev[i] = p.index(i - 1);
    }
    std::vector<bool> alive(n, true);
    int remaining = n;

    auto is_ear = [&](int v) {
        const int a = prev[v], c = next[v];
        if (ori * turn_or_throw(p.vertices[a], p.vertices[v], p.vertices[c],
                                "ear_clip") < 0)
            return false;  // reflex corner
        for (int x = 0; x < n; ++x) {
            if (!alive[x] || x == a || x == v || x == c) continue;
            if (point_in_triangle(p.vertices[x], p.vertices[a], p.vertices[v],
                                  p.vertices[c]) >= 0)
                return false;
        }
        return true;
    };

    std::vector<std::array<int, 3>> tris;
    while (remaining > 3) {
        int clipped = -1;
        for (int v : order) {
            if (!alive[v]) continue;
            if (is_ear(v)) {
                tris.push_back({prev[v], v, next[v]});
                alive[v] = false;
                next[prev[v]] = next[v];
                prev[next[v]] = prev[v];
                --remaining;
                clipped = v;
                break;
            }
        }
        if (clipped < 0) throw Error("ear_clip: no ear found in a simple polygon");
    }
    for (int v : order)
        if (alive[v]) {
            tris.push_back({prev[v], v, next[v]});
            break;
        }

    std::vector<int> boundary(n);
    std::iota(boundary.begin(), boundary.end(), 0);
    return make_triangulation(n, std::move(tris), boundary);
}

std::vector<int> cycle_cusps(const PointSet& pts, const std::vector<int>& cycle,
                             const SweepOrder& order) {
    const int m = static_cast<int>(cycle.size());
    int ori = 0;  // orientation of the cycle from its extreme corner
    {
        int ext = 0;
        for (int i = 1; i < m; ++i) {
            const Point a = pts[cycle[i]], b = pts[cycle[ext]];
            if (a.x < b.x || (a.x == b.x && a.y < b.y)) ext = i;
        }
        ori = orient(pts[cycle[(ext + m - 1) % m]], pts[cycle[ext]],
                     pts[cycle[(ext + 1) % m]]);
        if (ori == 0) throw DegenerateInput("cycle_cusps: flat extreme corner");
    }

    std::vector<int> cusps;
    for (int i = 0; i < m; ++i) {
        const int v = cycle[i];
        const int a = cycle[(i + m - 1) % m];
        const int c = cycle[(i + 1) % m];
        const int turn = orient(pts[a], pts[v], pts[c]);
        if (turn == 0) throw DegenerateInput("cycle_cusps: collinear corner");
        if (turn * ori > 0) continue;  // convex corner
        const bool a_before = order.before(pts[a], pts[v]);
        const bool c_before = order.before(pts[c], pts[v]);
        if (a_before == c_before) cusps.push_back(v);
    }
    return cusps;
}

std::vector<int> polygon_cusps(const Polygon& p, const SweepOrder& order) {
    std::vector<int> cycle(p.size());
    std::iota(cycle.begin(), cycle.end(), 0);
    return cycle_cusps(p.vertices, cycle, order);
}

MonotoneDecomposition monotone_decompose(const Polygon& p, Point mu, Point delta,
                                         int wp_index) {
    const int n = p.size();
    if (!polygon_is_simple(p))
        throw DegenerateInput("monotone_decompose: polygon not simple");
    const SweepOrder order(p.vertices[wp_index], mu, delta);

    std::vector<int> sweep(n);
    std::iota(sweep.begin(), sweep.end(), 0);
    std::sort(sweep.begin(), sweep.end(), [&](int a, int b) {
        if (a == b) return false;
        const int c = order.compare(p.vertices[a], p.vertices[b]);
        if (c != 0) return c < 0;
        throw DegenerateInput("monotone_decompose: coincident vertices");
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[sweep[i]] = i;

    const std::vector<int> cusps = polygon_cusps(p, order);

    MonotoneDecomposition dec;
    std::set<Edge> diag_set;
    auto crosses_existing = [&](int a, int b) {
        for (Edge e : diag_set) {
            if (e.first == a || e.first == b || e.second == a || e.second == b)
                continue;
            if (segments_properly_cross(p.vertices[a], p.vertices[b],
                                        p.vertices[e.first], p.vertices[e.second]))
                return true;
        }
        return false;
    };

    for (int v : cusps) {
        const bool neighbors_after = rank[p.index(v + 1)] > rank[v];
        // Scan outward from v in the sweep order toward the far side.
        const int dir = neighbors_after ? -1 : +1;
        int u = -1;
        for (int r = rank[v] + dir; r >= 0 && r < n; r += dir) {
            const int cand = sweep[r];
            if (is_diagonal(p, v, cand) && !crosses_existing(v, cand)) {
                u = cand;
                break;
            }
        }
        if (u < 0) throw Error("monotone_decompose: cusp found no partner");
        diag_set.insert(v < u ? Edge{v, u} : Edge{u, v});
    }

    dec.diagonals.assign(diag_set.begin(), diag_set.end());

    std::vector<Edge> edges = dec.diagonals;
    for (int i = 0; i < n; ++i) {
        const int j = p.index(i + 1);
        edges.push_back(i < j ? Edge{i, j} : Edge{j, i});
    }
    dec.pieces = planar_faces(p.vertices, edges).bounded;
    return dec;
}

namespace {

// Stack-based sweep triangulation of one cusp-free piece (CCW cycle).
// Returns the diagonals added.
std::vector<Edge> triangulate_monotone_piece(const PointSet& pts,
                                             const std::vector<int>& cycle,
                                             const SweepOrder& order) {
    const int m = static_cast<int>(cycle.size());
    std::vector<Edge> diagonals;
    if (m <= 3) return diagonals;

    std::vector<int> by_sweep(m);  // positions within the cycle
    std::iota(by_sweep.begin(), by_sweep.end(), 0);
    std::sort(by_sweep.begin(), by_sweep.end(), [&](int a, int b) {
        if (a == b) return false;
        const int c = order.compare(pts[cycle[a]], pts[cycle[b]]);
        if (c != 0) return c < 0;
        throw DegenerateInput("monotone piece: coincident vertices");
    });
    const int top = by_sweep.front(), bottom = by_sweep.back();

    // side +1: vertices on the cycle-direction walk top->bottom (interior to
    // the left); side -1: the other chain.
    std::vector<int> side(m, 0);
    for (int i = (top + 1) % m; i != bottom; i = (i + 1) % m) side[i] = 1;
    for (int i = (bottom + 1) % m; i != top; i = (i + 1) % m) side[i] = -1;

    auto emit = [&](int a, int b) {
        const int u = cycle[a], v = cycle[b];
        diagonals.push_back(u < v ? Edge{u, v} : Edge{v, u});
    };

    std::vector<int> stack{by_sweep[0], by_sweep[1]};
    for (int j = 2; j + 1 < m; ++j) {
        const int u = by_sweep[j];
        if (side[u] != side[stack.back()]) {
            while (stack.size() > 1) {
                emit(u, stack.back());
                stack.pop_back();
            }
            stack.pop_back();
            stack.push_back(by_sweep[j - 1]);
            stack.push_back(u);
        } else {
            int last = stack.back();
            stack.pop_back();
            while (!stack.empty() &&
                   side[u] * orient(pts[cycle[stack.back()]], pts[cycle[last]],
                                    pts[cycle[u]]) > 0) {
                emit(u, stack.back());
                last = stack.back();
                stack.pop_back();
            }
            stack.push_back(last);
            stack.push_back(u);
        }
    }
    // Bottom vertex: diagonals to everything on the stack except its two
    // boundary neighbors (first and last).
    for (std::size_t i = 1; i + 1 < stack.size(); ++i) emit(bottom, stack[i]);
    return diagonals;
}

}  // namespace

Triangulation monotone_triangulate(const Polygon& p, const PrimitiveTriple& t) {
    const int n = p.size();
    const SweepOrder order(p.vertices[t.wp_index], t.mu, t.delta);
    const MonotoneDecomposition dec =
        monotone_decompose(p, t.mu, t.delta, t.wp_index);

    std::set<Edge> edges;
    for (int i = 0; i < n; ++i) {
        const int j = p.index(i + 1);
        edges.insert(i < j ? Edge{i, j} : Edge{j, i});
    }
    for (Edge e : dec.diagonals) edges.insert(e);
    for (const auto& piece : dec.pieces)
        for (Edge e : triangulate_monotone_piece(p.vertices, piece, order))
            edges.insert(e);

    std::vector<Edge> edge_list(edges.begin(), edges.end());
    std::vector<int> boundary(n);
    std::iota(boundary.begin(), boundary.end(), 0);
    return make_triangulation(n, faces_as_triangles(p.vertices, edge_list, "monotone"),
                              boundary);
}

}  // namespace affinelab
