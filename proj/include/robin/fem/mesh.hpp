#pragma once

#include <array>
#include <vector>

namespace robin::fem {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Planar triangulation. Triangles are counter-clockwise; boundary edges
/// (i, j) have the domain on their left, so the outward normal points right.
struct Mesh {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> boundary_edges;

    std::size_t vertex_count() const { return vertices.size(); }
    double triangle_area(std::size_t t) const;
    double area() const;
    double boundary_length() const;
    /// Longest edge over all triangles.
    double max_edge() const;
    std::vector<bool> boundary_flags() const;
};

/// Throws MeshError unless every triangle has positive area, the boundary
/// edges are exactly the edges used by one triangle (with matching
/// orientation), they form closed loops, and the mesh is connected.
void validate(const Mesh& mesh);

/// Boundary edges recomputed from the triangles.
std::vector<std::array<int, 2>> boundary_from_triangles(const Mesh& mesh);

/// Reorders every triangle counter-clockwise. Throws MeshError on a null triangle.
void orient(Mesh& mesh);

/// Splits every triangle into four through its edge midpoints.
Mesh refine_midpoint(const Mesh& mesh);

}  // namespace robin::fem
