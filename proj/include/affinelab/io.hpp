#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "affinelab/graphs.hpp"
#include "affinelab/polygon.hpp"

namespace affinelab {

// Text format: one vertex per line, two reals separated by whitespace,
// '#' starts a comment, blank lines ignored. At least 3 vertices.
PointSet read_points(const std::string& path);
PointSet parse_points(std::istream& in);

// Same format; vertex order is the boundary order, closure implicit.
Polygon read_polygon(const std::string& path);

// Shortest round-trip formatting (std::to_chars).
std::string format_double(double v);
void write_points(const std::string& path, const PointSet& s);

// {"n": ..., "edges": [[i,j],...], "triangles": ...?, "quads": ...?,
//  "hull": [...]?} with canonical ordering.
void emit_graph_json(const EdgeGraph& g, const std::string& path);
void emit_graph_json(const Triangulation& t, const std::string& path);
void emit_graph_json(const Quadrangulation& q, const std::string& path);

struct GraphDoc {
    int n = 0;
    std::vector<Edge> edges;
    std::optional<std::vector<std::array<int, 3>>> triangles;
    std::optional<std::vector<std::array<int, 4>>> quads;
    std::optional<std::vector<int>> hull;
};
GraphDoc read_graph_json(const std::string& path);

// Deterministic 800x800 viewport, data bounding box padded 5%, vertices as
// 3px dots, edges as 1px lines.
void emit_svg(const PointSet& points, const std::vector<Edge>& edges,
              const std::string& path);

}  // namespace affinelab
