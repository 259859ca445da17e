#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affinelab/delaunay.hpp"
#include "affinelab/harness.hpp"
#include "affinelab/io.hpp"
#include "affinelab/orderings.hpp"
#include "affinelab/proximity.hpp"
#include "affinelab/triangulators.hpp"

namespace {

using namespace affinelab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInvarianceFailure = 3;

struct Options {
    std::string in_path;
    std::string out_path;
    std::string svg_path;
    std::uint64_t seed = 1;
};

PrimitiveScheme parse_scheme(const std::string& s) {
    if (s == "hull") return PrimitiveScheme::hull_area;
    if (s == "closest") return PrimitiveScheme::closest_point;
    throw CLI::ValidationError("--scheme must be hull or closest");
}

void maybe_svg(const Options& opt, const PointSet& pts, const std::vector<Edge>& edges) {
    if (!opt.svg_path.empty()) emit_svg(pts, edges, opt.svg_path);
}

void print_point(const char* label, Point p) {
    std::cout << label << " " << format_double(p.x) << " " << format_double(p.y)
              << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"affine-invariant triangulations and proximity graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--in", opt.in_path, "input point/polygon file")->expected(1);
    app.add_option("--out", opt.out_path, "output file (JSON unless noted)");
    app.add_option("--svg", opt.svg_path, "also render an SVG to this path");
    app.add_option("--seed", opt.seed, "random seed (AFFINELAB_SEED overrides)");

    // model
    auto* cmd_model = app.add_subcommand("model", "print mean, covariance, eigenvalues");

    // normalize
    auto* cmd_normalize =
        app.add_subcommand("normalize", "write the whitened point set (text format)");

    // delaunay
    std::string metric = "as";
    auto* cmd_delaunay = app.add_subcommand("delaunay", "Delaunay triangulation");
    cmd_delaunay->add_option("--metric", metric, "as|euclid")->capture_default_str();

    // proximity family
    auto* cmd_gabriel = app.add_subcommand("gabriel", "A_S Gabriel graph");
    auto* cmd_rng = app.add_subcommand("rng", "A_S relative neighborhood graph");
    auto* cmd_mst = app.add_subcommand("mst", "A_S minimum spanning tree");
    auto* cmd_greedy = app.add_subcommand("greedy", "A_S greedy triangulation");
    auto* cmd_mwt = app.add_subcommand("mwt", "exact A_S minimum weight triangulation");
    int knn_k = 1;
    bool knn_undirected = false;
    auto* cmd_knng = app.add_subcommand("knng", "k nearest neighbor graph");
    cmd_knng->add_option("--k", knn_k, "neighbors per point")->required();
    cmd_knng->add_flag("--undirected", knn_undirected, "emit the undirected union");
    int orderk = 0;
    auto* cmd_orderk = app.add_subcommand("orderk-dg", "order-k Delaunay graph");
    cmd_orderk->add_option("--k", orderk, "enclosed-point budget")->required();

    // sort / primitives
    std::string sort_method = "radial";
    std::string scheme_name = "closest";
    auto* cmd_sort = app.add_subcommand("sort", "affine-invariant orderings");
    cmd_sort->add_option("--method", sort_method, "radial|sweep|traversal")->required();
    cmd_sort->add_option("--scheme", scheme_name, "hull|closest")->capture_default_str();
    auto* cmd_primitives = app.add_subcommand("primitives", "primitive point triple");
    cmd_primitives->add_option("--scheme", scheme_name, "hull|closest")
        ->capture_default_str();

    // triangulate / quadrangulate
    std::string algo;
    auto* cmd_triangulate = app.add_subcommand("triangulate", "triangulation algorithms");
    cmd_triangulate->add_option("--algo", algo, "graham|insertion|earclip|monotone")
        ->required();
    cmd_triangulate->add_option("--scheme", scheme_name, "hull|closest")
        ->capture_default_str();
    auto* cmd_quad = app.add_subcommand("quadrangulate", "even-hull quadrangulation");
    cmd_quad->add_option("--scheme", scheme_name, "hull|closest")->capture_default_str();

    // check / spanning-ratio / hierarchy
    std::string check_algo;
    int trials = 100;
    int trial_n = 0;
    auto* cmd_check = app.add_subcommand("check", "randomized invariance check");
    cmd_check->add_option("--algo", check_algo, "algorithm id")->required();
    cmd_check->add_option("--trials", trials, "number of trials")->capture_default_str();
    cmd_check->add_option("--n", trial_n, "points per trial (default 20; polygons 15)");
    auto* cmd_sr = app.add_subcommand("spanning-ratio",
                                      "spanning ratio of the A_S Delaunay triangulation");
    std::string sr_metric = "euclid";
    cmd_sr->add_option("--metric", sr_metric, "euclid|as")->capture_default_str();
    int kmax = 3;
    auto* cmd_hier = app.add_subcommand("hierarchy", "proximity hierarchy audit");
    cmd_hier->add_option("--kmax", kmax, "largest order k")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (const char* env_seed = std::getenv("AFFINELAB_SEED"))
        opt.seed = std::strtoull(env_seed, nullptr, 10);

    auto need_in = [&]() -> PointSet {
        if (opt.in_path.empty()) throw Error("--in is required for this command");
        return read_points(opt.in_path);
    };
    auto need_polygon = [&]() -> Polygon {
        if (opt.in_path.empty()) throw Error("--in is required for this command");
        return read_polygon(opt.in_path);
    };
    auto emit_tri = [&](const Triangulation& t, const PointSet& pts) {
        if (!opt.out_path.empty()) emit_graph_json(t, opt.out_path);
        maybe_svg(opt, pts, t.edges);
        std::cout << "triangles " << t.triangles.size() << " edges " << t.edges.size()
                  << "\n";
    };
    auto emit_graph = [&](const EdgeGraph& g, const PointSet& pts) {
        if (!opt.out_path.empty()) emit_graph_json(g, opt.out_path);
        maybe_svg(opt, pts, g.edges);
        std::cout << "edges " << g.edges.size() << "\n";
    };

    if (*cmd_model) {
        const PointSet pts = need_in();
        const CovarianceModel m = covariance_model(pts);
        print_point("mu", m.mu);
        std::cout << "sigma " << format_double(m.sigma.a) << " "
                  << format_double(m.sigma.b) << " " << format_double(m.sigma.c) << "\n";
        std::cout << "sigma_inv " << format_double(m.sigma_inv.a) << " "
                  << format_double(m.sigma_inv.b) << " " << format_double(m.sigma_inv.c)
                  << "\n";
        std::cout << "lambda " << format_double(m.lambda_max()) << " "
                  << format_double(m.lambda_min()) << "\n";
        return kExitOk;
    }
    if (*cmd_normalize) {
        const PointSet pts = need_in();
        const PointSet norm = normalize(pts);
        if (opt.out_path.empty()) {
            for (Point p : norm)
                std::cout << format_double(p.x) << " " << format_double(p.y) << "\n";
        } else {
            write_points(opt.out_path, norm);
        }
        return kExitOk;
    }
    if (*cmd_delaunay) {
        const PointSet pts = need_in();
        if (metric != "as" && metric != "euclid")
            throw Error("--metric must be as or euclid");
        const Triangulation t = metric == "as" ? delaunay_as(pts) : delaunay(pts);
        emit_tri(t, pts);
        return kExitOk;
    }
    if (*cmd_gabriel) {
        const PointSet pts = need_in();
        emit_graph(gabriel_as(pts, covariance_model(pts)), pts);
        return kExitOk;
    }
    if (*cmd_rng) {
        const PointSet pts = need_in();
        emit_graph(rng_as(pts, covariance_model(pts)), pts);
        return kExitOk;
    }
    if (*cmd_mst) {
        const PointSet pts = need_in();
        emit_graph(mst_as(pts, covariance_model(pts)), pts);
        return kExitOk;
    }
    if (*cmd_greedy) {
        const PointSet pts = need_in();
        emit_tri(greedy_triangulation_as(pts, covariance_model(pts)), pts);
        return kExitOk;
    }
    if (*cmd_mwt) {
        const PointSet pts = need_in();
        emit_tri(mwt_as_exact(pts, covariance_model(pts)), pts);
        return kExitOk;
    }
    if (*cmd_knng) {
        const PointSet pts = need_in();
        emit_graph(knng_as(pts, covariance_model(pts), knn_k, knn_undirected), pts);
        return kExitOk;
    }
    if (*cmd_orderk) {
        const PointSet pts = need_in();
        emit_graph(order_k_delaunay(pts, covariance_model(pts), orderk), pts);
        return kExitOk;
    }
    if (*cmd_sort) {
        const PrimitiveScheme scheme = parse_scheme(scheme_name);
        OrderedIndices order;
        if (sort_method == "radial") {
            const PointSet pts = need_in();
            order = radially_sort(pts, compute_primitives(pts, scheme));
        } else if (sort_method == "sweep") {
            const PointSet pts = need_in();
            order = sweep_line_sort(pts, compute_primitives(pts, scheme));
        } else if (sort_method == "traversal") {
            const Polygon poly = need_polygon();
            order = traversal(poly, compute_primitives(poly.vertices, scheme));
        } else {
            throw Error("--method must be radial, sweep or traversal");
        }
        for (std::size_t i = 0; i < order.size(); ++i)
            std::cout << (i ? " " : "") << order[i];
        std::cout << "\n";
        return kExitOk;
    }
    if (*cmd_primitives) {
        const PointSet pts = need_in();
        const PrimitiveTriple t = compute_primitives(pts, parse_scheme(scheme_name));
        print_point("mu", t.mu);
        print_point("delta", t.delta);
        print_point("wp", t.wp);
        std::cout << "wp_index " << t.wp_index << "\n";
        if (t.vartheta) print_point("vartheta", *t.vartheta);
        return kExitOk;
    }
    if (*cmd_triangulate) {
        const PrimitiveScheme scheme = parse_scheme(scheme_name);
        if (algo == "graham") {
            const PointSet pts = need_in();
            emit_tri(graham_triangulation(pts, compute_primitives(pts, scheme)), pts);
        } else if (algo == "insertion") {
            const PointSet pts = need_in();
            emit_tri(insertion_triangulation(pts, scheme), pts);
        } else if (algo == "earclip") {
            const Polygon poly = need_polygon();
            emit_tri(ear_clip(poly, compute_primitives(poly.vertices, scheme)),
                     poly.vertices);
        } else if (algo == "monotone") {
            const Polygon poly = need_polygon();
            emit_tri(
                monotone_triangulate(poly, compute_primitives(poly.vertices, scheme)),
                poly.vertices);
        } else {
            throw Error("--algo must be graham, insertion, earclip or monotone");
        }
        return kExitOk;
    }
    if (*cmd_quad) {
        const PointSet pts = need_in();
        const Quadrangulation q = quadrangulate(pts, parse_scheme(scheme_name));
        if (!opt.out_path.empty()) emit_graph_json(q, opt.out_path);
        maybe_svg(opt, pts, q.edges);
        std::cout << "quads " << q.quads.size() << " edges " << q.edges.size() << "\n";
        return kExitOk;
    }
    if (*cmd_check) {
        if (!algorithm_exists(check_algo)) {
            std::cerr << "unknown algorithm '" << check_algo << "'; available:";
            for (const auto& id : algorithm_ids()) std::cerr << " " << id;
            std::cerr << "\n";
            return kExitUsage;
        }
        TrialConfig cfg;
        cfg.seed = opt.seed;
        cfg.trials = trials;
        cfg.n = trial_n > 0 ? trial_n
                            : (algorithm_uses_polygons(check_algo) ? 15 : 20);
        const InvarianceReport report = check_invariance(check_algo, cfg);
        if (!opt.out_path.empty()) emit_report_json(report, opt.out_path);
        std::cout << report.algorithm << ": " << report.trials_run << " trials, "
                  << report.failures.size() << " failures, "
                  << report.degenerate_resamples << " degenerate resamples, "
                  << report.aborted_trials << " aborted\n";
        for (std::size_t i = 0; i < report.failures.size() && i < 3; ++i)
            std::cout << "  trial " << report.failures[i].trial << ": "
                      << report.failures[i].diff << "\n";
        return report.pass() ? kExitOk : kExitInvarianceFailure;
    }
    if (*cmd_sr) {
        const PointSet pts = need_in();
        const CovarianceModel m = covariance_model(pts);
        const Triangulation t = delaunay_as(pts);
        const Metric mt = sr_metric == "as" ? Metric::as : Metric::euclidean;
        const double sr = spanning_ratio(pts, t.edge_graph(), mt, &m);
        const double bound = 1.998 * std::sqrt(m.lambda_max() / m.lambda_min());
        std::cout << "spanning_ratio " << format_double(sr) << "\n";
        std::cout << "bound " << format_double(bound) << "\n";
        return kExitOk;
    }
    if (*cmd_hier) {
        const PointSet pts = need_in();
        const HierarchyReport report =
            verify_hierarchy(pts, covariance_model(pts), kmax);
        if (report.ok()) {
            std::cout << "hierarchy ok for k <= " << kmax << "\n";
            return kExitOk;
        }
        for (const auto& v : report.violations) std::cout << v << "\n";
        return kExitInvarianceFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
