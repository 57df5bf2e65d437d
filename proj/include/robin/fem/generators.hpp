#pragma once

#include "robin/fem/mesh.hpp"

#include <string>

namespace robin::fem {

enum class ShapeKind { disk, ellipse, rectangle, perturbed };

/// disk: a = radius. ellipse: semi-axes a, b. rectangle: sides a, b.
/// perturbed: boundary r(theta) = 1 + eps cos(k theta).
struct ShapeSpec {
    ShapeKind kind = ShapeKind::disk;
    double a = 1.0;
    double b = 1.0;
    double eps = 0.0;
    int k = 0;

    double area() const;
    bool is_ball() const;
    std::string name() const;
};

/// Accepts disk[:R], ellipse:a,b, rect:a,b, square[:side], perturbed:eps,k.
/// Throws DomainError on a malformed or invalid spec.
ShapeSpec parse_shape(const std::string& text);

/// Ring-structured mesh of the disk of given radius with target edge length h.
/// Boundary vertices lie on the circle.
Mesh disk_mesh(double radius, double h);
/// Affine image of a disk mesh; boundary vertices lie on the ellipse.
Mesh ellipse_mesh(double a, double b, double h);
/// Structured grid on [0, a] x [0, b] with alternating diagonals.
Mesh rectangle_mesh(double a, double b, double h);
/// Radial image of a disk mesh under rho -> rho (1 + eps cos(k theta)).
Mesh perturbed_disk_mesh(double eps, int k, double h);

Mesh generate(const ShapeSpec& shape, double h);

}  // namespace robin::fem
