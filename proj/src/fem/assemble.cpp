#include "robin/fem/assemble.hpp"

#include "robin/error.hpp"

#include <cmath>
#include <vector>

namespace robin::fem {

SystemParts assemble_parts(const Mesh& mesh) {
    const auto n = static_cast<Eigen::Index>(mesh.vertex_count());
    std::vector<Eigen::Triplet<double>> ks, ms, bs;
    ks.reserve(9 * mesh.triangles.size());
    ms.reserve(9 * mesh.triangles.size());
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        const Point& p0 = mesh.vertices[static_cast<std::size_t>(tri[0])];
        const Point& p1 = mesh.vertices[static_cast<std::size_t>(tri[1])];
        const Point& p2 = mesh.vertices[static_cast<std::size_t>(tri[2])];
        const double area = mesh.triangle_area(t);
        if (!(area > 0.0)) throw MeshError("assemble: degenerate or inverted triangle");
        // Gradients of the barycentric basis functions times 2 area.
        const double gx[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
        const double gy[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const double kab = (gx[a] * gx[b] + gy[a] * gy[b]) / (4.0 * area);
                const double mab = area / 12.0 * (a == b ? 2.0 : 1.0);
                ks.emplace_back(tri[a], tri[b], kab);
                ms.emplace_back(tri[a], tri[b], mab);
            }
        }
    }
    for (const auto& e : mesh.boundary_edges) {
        const Point& p = mesh.vertices[static_cast<std::size_t>(e[0])];
        const Point& q = mesh.vertices[static_cast<std::size_t>(e[1])];
        const double len = std::hypot(q.x - p.x, q.y - p.y);
        bs.emplace_back(e[0], e[0], len / 3.0);
        bs.emplace_back(e[1], e[1], len / 3.0);
        bs.emplace_back(e[0], e[1], len / 6.0);
        bs.emplace_back(e[1], e[0], len / 6.0);
    }
    SystemParts parts;
    parts.stiffness.resize(n, n);
    parts.mass.resize(n, n);
    parts.boundary_mass.resize(n, n);
    parts.stiffness.setFromTriplets(ks.begin(), ks.end());
    parts.mass.setFromTriplets(ms.begin(), ms.end());
    parts.boundary_mass.setFromTriplets(bs.begin(), bs.end());
    return parts;
}

RobinSystem assemble(const Mesh& mesh, double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("assemble: sigma must be >= 0");
    SystemParts parts = assemble_parts(mesh);
    RobinSystem sys;
    sys.k_sigma = parts.stiffness + sigma * parts.boundary_mass;
    sys.mass = std::move(parts.mass);
    return sys;
}

Eigen::VectorXd lumped_mass(const Mesh& mesh) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh.vertex_count()));
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const double third = mesh.triangle_area(t) / 3.0;
        for (int v : mesh.triangles[t]) m[v] += third;
    }
    return m;
}

}  // namespace robin::fem
