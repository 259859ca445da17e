#include "affinelab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "affinelab/delaunay.hpp"
#include "affinelab/orderings.hpp"
#include "affinelab/proximity.hpp"
#include "affinelab/triangulators.hpp"

namespace affinelab {

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

PointSet random_point_set(Rng& rng, int n, const TrialConfig& cfg) {
    for (int attempt = 0; attempt < cfg.degeneracy_retries; ++attempt) {
        PointSet pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
        if (general_position_check(pts).in_general_position()) return pts;
        for (Point& p : pts) {
            p.x += rng.uniform(-1e-6, 1e-6);
            p.y += rng.uniform(-1e-6, 1e-6);
        }
        if (general_position_check(pts).in_general_position()) return pts;
    }
    throw DegenerateInput("random_point_set: retry cap exhausted");
}

AffineMap random_affine(Rng& rng, const TrialConfig& cfg) {
    AffineMap a;
    do {
        a.m00 = rng.uniform(-2.0, 2.0);
        a.m01 = rng.uniform(-2.0, 2.0);
        a.m10 = rng.uniform(-2.0, 2.0);
        a.m11 = rng.uniform(-2.0, 2.0);
    } while (std::fabs(a.det()) < cfg.det_floor);
    a.bx = rng.uniform(-2.0, 2.0);
    a.by = rng.uniform(-2.0, 2.0);
    if (rng.uniform01() < cfg.reflect_prob) {
        std::swap(a.m00, a.m10);
        std::swap(a.m01, a.m11);
    }
    return a;
}

Polygon random_simple_polygon(Rng& rng, int n, const TrialConfig& cfg) {
    for (int attempt = 0; attempt < cfg.degeneracy_retries; ++attempt) {
        const PointSet pts = random_point_set(rng, n, cfg);
        double mx = 0.0, my = 0.0;
        for (Point p : pts) { mx += p.x; my += p.y; }
        const Point mean{mx / n, my / n};

        std::vector<int> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const Point da = pts[a] - mean;
            const Point db = pts[b] - mean;
            const int ha = (da.y < 0.0 || (da.y == 0.0 && da.x < 0.0)) ? 1 : 0;
            const int hb = (db.y < 0.0 || (db.y == 0.0 && db.x < 0.0)) ? 1 : 0;
            if (ha != hb) return ha < hb;
            const int s = orient(mean, pts[a], pts[b]);
            if (s != 0) return s > 0;
            return squared_length(da) < squared_length(db);
        });

        PointSet ring;
        ring.reserve(pts.size());
        for (int i : order) ring.push_back(pts[i]);
        Polygon poly(std::move(ring));
        if (polygon_is_simple(poly)) return poly;
    }
    throw DegenerateInput("random_simple_polygon: retry cap exhausted");
}

namespace {

struct CanonicalOutput {
    std::vector<std::vector<int>> sets;
    std::vector<int> sequence;
    std::vector<Point> pts;
    int wp_index = -1;
};

CanonicalOutput from_triangles(const Triangulation& t) {
    CanonicalOutput out;
    for (const auto& tri : t.triangles) out.sets.push_back({tri[0], tri[1], tri[2]});
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

CanonicalOutput from_edges(const EdgeGraph& g) {
    CanonicalOutput out;
    for (Edge e : g.edges) out.sets.push_back({e.first, e.second});
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

CanonicalOutput from_quads(const Quadrangulation& q) {
    CanonicalOutput out;
    for (const auto& quad : q.quads)
        out.sets.push_back({quad[0], quad[1], quad[2], quad[3]});
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

enum class InstanceKind { points, points_interior, points_even_hull, polygon };

struct AlgorithmDef {
    InstanceKind kind = InstanceKind::points;
    bool point_valued = false;
    std::function<CanonicalOutput(const PointSet&)> run_points;
    std::function<CanonicalOutput(const Polygon&)> run_polygon;
};

const std::vector<std::pair<std::string, AlgorithmDef>>& registry() {
    static const std::vector<std::pair<std::string, AlgorithmDef>> defs = [] {
        std::vector<std::pair<std::string, AlgorithmDef>> r;
        auto points_algo = [&](const std::string& id,
                               std::function<CanonicalOutput(const PointSet&)> fn,
                               InstanceKind kind = InstanceKind::points) {
            AlgorithmDef def;
            def.kind = kind;
            def.run_points = std::move(fn);
            r.push_back({id, std::move(def)});
        };
        auto polygon_algo = [&](const std::string& id,
                                std::function<CanonicalOutput(const Polygon&)> fn) {
            AlgorithmDef def;
            def.kind = InstanceKind::polygon;
            def.run_polygon = std::move(fn);
            r.push_back({id, std::move(def)});
        };

        points_algo("delaunay", [](const PointSet& s) { return from_triangles(delaunay(s)); });
        points_algo("delaunay_as",
                    [](const PointSet& s) { return from_triangles(delaunay_as(s)); });
        points_algo("gabriel", [](const PointSet& s) {
            return from_edges(gabriel_as(s, covariance_model(s)));
        });
        points_algo("rng", [](const PointSet& s) {
            return from_edges(rng_as(s, covariance_model(s)));
        });
        points_algo("mst", [](const PointSet& s) {
            return from_edges(mst_as(s, covariance_model(s)));
        });
        points_algo("knng2", [](const PointSet& s) {
            return from_edges(knng_as(s, covariance_model(s), 2));
        });
        points_algo("orderk_dg1", [](const PointSet& s) {
            return from_edges(order_k_delaunay(s, covariance_model(s), 1));
        });
        points_algo("orderk_dg2", [](const PointSet& s) {
            return from_edges(order_k_delaunay(s, covariance_model(s), 2));
        });
        points_algo("greedy", [](const PointSet& s) {
            return from_triangles(greedy_triangulation_as(s, covariance_model(s)));
        });
        points_algo("closest_pair", [](const PointSet& s) {
            const Edge e = closest_pair_as(s, covariance_model(s));
            CanonicalOutput out;
            out.sets.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
            return out;
        });
        points_algo("sort_radial", [](const PointSet& s) {
            CanonicalOutput out;
            out.sequence = radially_sort(s, primitives_closest(s, covariance_model(s)));
            return out;
        });
        points_algo("sort_sweep", [](const PointSet& s) {
            CanonicalOutput out;
            out.sequence = sweep_line_sort(s, primitives_hull_area(s));
            return out;
        });
        points_algo("graham", [](const PointSet& s) {
            return from_triangles(
                graham_triangulation(s, primitives_closest(s, covariance_model(s))));
        });
        points_algo("insertion",
                    [](const PointSet& s) {
                        return from_triangles(
                            insertion_triangulation(s, PrimitiveScheme::closest_point));
                    },
                    InstanceKind::points_interior);
        points_algo("quadrangulate",
                    [](const PointSet& s) {
                        return from_quads(quadrangulate(s, PrimitiveScheme::closest_point));
                    },
                    InstanceKind::points_even_hull);

        polygon_algo("traversal", [](const Polygon& p) {
            CanonicalOutput out;
            out.sequence =
                traversal(p, primitives_closest(p.vertices, covariance_model(p.vertices)));
            return out;
        });
        polygon_algo("earclip", [](const Polygon& p) {
            return from_triangles(ear_clip(p, primitives_hull_area(p.vertices)));
        });
        polygon_algo("monotone", [](const Polygon& p) {
            return from_triangles(monotone_triangulate(
                p, primitives_closest(p.vertices, covariance_model(p.vertices))));
        });

        {
            AlgorithmDef def;
            def.kind = InstanceKind::points;
            def.point_valued = true;
            def.run_points = [](const PointSet& s) {
                const PrimitiveTriple t = primitives_hull_area(s);
                CanonicalOutput out;
                out.pts = {t.mu, t.delta, t.wp, *t.vartheta};
                out.wp_index = t.wp_index;
                return out;
            };
            r.push_back({"primitives_hull", std::move(def)});
        }
        {
            AlgorithmDef def;
            def.kind = InstanceKind::points;
            def.point_valued = true;
            def.run_points = [](const PointSet& s) {
                const PrimitiveTriple t = primitives_closest(s, covariance_model(s));
                CanonicalOutput out;
                out.pts = {t.mu, t.delta, t.wp};
                out.wp_index = t.wp_index;
                return out;
            };
            r.push_back({"primitives_closest", std::move(def)});
        }
        return r;
    }();
    return defs;
}

const AlgorithmDef* find_algorithm(const std::string& id) {
    for (const auto& [name, def] : registry())
        if (name == id) return &def;
    return nullptr;
}

std::string describe_set_diff(const std::vector<std::vector<int>>& a,
                              const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(only_b));
    auto show = [](const std::vector<std::vector<int>>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size() && i < 4; ++i) {
            os << "(";
            for (std::size_t j = 0; j < v[i].size(); ++j)
                os << (j ? "," : "") << v[i][j];
            os << ")";
        }
        if (v.size() > 4) os << "...";
        return os.str();
    };
    std::ostringstream os;
    os << "only in S: " << only_a.size() << " " << show(only_a)
       << "; only in alpha(S): " << only_b.size() << " " << show(only_b);
    return os.str();
}

}  // namespace

std::vector<std::string> algorithm_ids() {
    std::vector<std::string> ids;
    for (const auto& [name, def] : registry()) ids.push_back(name);
    return ids;
}

bool algorithm_exists(const std::string& id) { return find_algorithm(id) != nullptr; }

bool algorithm_uses_polygons(const std::string& id) {
    const AlgorithmDef* def = find_algorithm(id);
    return def != nullptr && def->kind == InstanceKind::polygon;
}

InvarianceReport check_invariance(const std::string& algorithm, const TrialConfig& cfg) {
    const AlgorithmDef* def = find_algorithm(algorithm);
    if (def == nullptr) throw Error("unknown algorithm: " + algorithm);

    InvarianceReport report;
    report.algorithm = algorithm;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t trial_seed =
            cfg.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
        Rng rng(trial_seed);

        bool completed = false;
        for (int attempt = 0; attempt < cfg.degeneracy_retries && !completed; ++attempt) {
            try {
                CanonicalOutput base, mapped;
                AffineMap a;
                if (def->kind == InstanceKind::polygon) {
                    const Polygon poly = random_simple_polygon(rng, cfg.n, cfg);
                    a = random_affine(rng, cfg);
                    base = def->run_polygon(poly);
                    mapped = def->run_polygon(apply_affine(a, poly));
                } else {
                    PointSet pts = random_point_set(rng, cfg.n, cfg);
                    if (def->kind == InstanceKind::points_interior &&
                        static_cast<int>(convex_hull(pts).size()) == cfg.n)
                        throw DegenerateInput("no interior points");
                    if (def->kind == InstanceKind::points_even_hull &&
                        convex_hull(pts).size() % 2 != 0)
                        throw DegenerateInput("odd hull");
                    a = random_affine(rng, cfg);
                    base = def->run_points(pts);
                    mapped = def->run_points(apply_affine(a, pts));
                }

                std::string diff;
                if (def->point_valued) {
                    if (base.wp_index != mapped.wp_index)
                        diff = "wp index " + std::to_string(base.wp_index) + " vs " +
                               std::to_string(mapped.wp_index);
                    else
                        for (std::size_t i = 0; i < base.pts.size(); ++i) {
                            const Point expect = a.apply(base.pts[i]);
                            const Point got = mapped.pts[i];
                            const double err = std::sqrt(squared_length(expect - got));
                            const double scale =
                                1.0 + std::sqrt(squared_length(expect));
                            if (err > 1e-8 * scale) {
                                diff = "primitive point " + std::to_string(i) +
                                       " off by " + std::to_string(err);
                                break;
                            }
                        }
                } else if (!base.sequence.empty() || !mapped.sequence.empty()) {
                    if (base.sequence != mapped.sequence) diff = "index sequences differ";
                } else if (base.sets != mapped.sets) {
                    diff = describe_set_diff(base.sets, mapped.sets);
                }

                if (!diff.empty())
                    report.failures.push_back({trial, trial_seed, a, diff});
                ++report.trials_run;
                completed = true;
            } catch (const DegenerateInput&) {
                ++report.degenerate_resamples;
            }
        }
        if (!completed) ++report.aborted_trials;
    }
    return report;
}

void emit_report_json(const InvarianceReport& report, const std::string& path) {
    nlohmann::json doc;
    doc["algorithm"] = report.algorithm;
    doc["trials_run"] = report.trials_run;
    doc["degenerate_resamples"] = report.degenerate_resamples;
    doc["aborted_trials"] = report.aborted_trials;
    doc["pass"] = report.pass();
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : report.failures) {
        fails.push_back({{"trial", f.trial},
                         {"trial_seed", f.trial_seed},
                         {"alpha", {f.alpha.m00, f.alpha.m01, f.alpha.m10, f.alpha.m11,
                                    f.alpha.bx, f.alpha.by}},
                         {"diff", f.diff}});
    }
    doc["failures"] = fails;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace affinelab
