#include "affinelab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace affinelab {
namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return in;
}

void write_or_throw(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

json edges_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (Edge e : edges) arr.push_back({e.first, e.second});
    return arr;
}

}  // namespace

PointSet parse_points(std::istream& in) {
    PointSet pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double x, y;
        if (!(ls >> x)) {
            std::string leftover;
            if (ls.clear(), ls >> leftover)
                throw ParseError("expected two reals", lineno);
            continue;  // blank or comment-only line
        }
        if (!(ls >> y)) throw ParseError("expected two reals", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens after coordinates", lineno);
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("non-finite coordinate", lineno);
        pts.push_back({x, y});
    }
    if (pts.size() < 3) throw ParseError("need at least 3 vertices", lineno);
    return pts;
}

PointSet read_points(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_points(in);
}

Polygon read_polygon(const std::string& path) {
    return Polygon(read_points(path));
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_points(const std::string& path, const PointSet& s) {
    std::string out;
    for (Point p : s) {
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += '\n';
    }
    write_or_throw(path, out);
}

void emit_graph_json(const EdgeGraph& g, const std::string& path) {
    json doc;
    doc["n"] = g.vertex_count;
    doc["edges"] = edges_json(g.edges);
    if (g.directed) doc["directed"] = true;
    write_or_throw(path, doc.dump(2) + "\n");
}

void emit_graph_json(const Triangulation& t, const std::string& path) {
    json doc;
    doc["n"] = t.vertex_count;
    doc["edges"] = edges_json(t.edges);
    doc["triangles"] = t.triangles;
    doc["hull"] = t.hull;
    write_or_throw(path, doc.dump(2) + "\n");
}

void emit_graph_json(const Quadrangulation& q, const std::string& path) {
    json doc;
    doc["n"] = q.vertex_count;
    doc["edges"] = edges_json(q.edges);
    doc["quads"] = q.quads;
    doc["hull"] = q.hull;
    write_or_throw(path, doc.dump(2) + "\n");
}

GraphDoc read_graph_json(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    GraphDoc g;
    g.n = doc.at("n").get<int>();
    for (const auto& e : doc.at("edges"))
        g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (doc.contains("triangles"))
        g.triangles = doc["triangles"].get<std::vector<std::array<int, 3>>>();
    if (doc.contains("quads"))
        g.quads = doc["quads"].get<std::vector<std::array<int, 4>>>();
    if (doc.contains("hull")) g.hull = doc["hull"].get<std::vector<int>>();
    return g;
}

void emit_svg(const PointSet& points, const std::vector<Edge>& edges,
              const std::string& path) {
    double min_x = points[0].x, max_x = points[0].x;
    double min_y = points[0].y, max_y = points[0].y;
    for (Point p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double pad_x = 0.05 * std::max(max_x - min_x, 1e-12);
    const double pad_y = 0.05 * std::max(max_y - min_y, 1e-12);
    min_x -= pad_x; max_x += pad_x;
    min_y -= pad_y; max_y += pad_y;
    const double span = std::max(max_x - min_x, max_y - min_y);

    auto sx = [&](double x) { return (x - min_x) / span * 800.0; };
    auto sy = [&](double y) { return 800.0 - (y - min_y) / span * 800.0; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", v);
        return std::string(buf);
    };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
    for (Edge e : edges) {
        svg += "  <line x1=\"" + num(sx(points[e.first].x)) + "\" y1=\"" +
               num(sy(points[e.first].y)) + "\" x2=\"" + num(sx(points[e.second].x)) +
               "\" y2=\"" + num(sy(points[e.second].y)) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (Point p : points) {
        svg += "  <circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
               "\" r=\"3\" fill=\"crimson\"/>\n";
    }
    svg += "</svg>\n";
    write_or_throw(path, svg);
}

}  // namespace affinelab
