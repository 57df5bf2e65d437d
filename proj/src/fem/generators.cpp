#include "robin/fem/generators.hpp"

#include "robin/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace robin::fem {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_h(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("mesh generator: h must be > 0");
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw DomainError("shape: bad number '" + item + "'");
        }
        if (used != item.size()) throw DomainError("shape: bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// Triangulates the strip between two concentric rings by advancing along
// the ring whose next vertex comes first in angle.
void zipper(std::vector<std::array<int, 3>>& tris, const std::vector<int>& inner, const std::vector<double>& ia,
            const std::vector<int>& outer, const std::vector<double>& oa) {
    const std::size_t p = inner.size();
    const std::size_t q = outer.size();
    std::size_t i = 0, j = 0;
    auto angle = [](const std::vector<double>& a, std::size_t k) {
        return k < a.size() ? a[k] : a[k - a.size()] + kTwoPi;
    };
    while (i < p || j < q) {
        const bool take_inner = j == q || (i < p && angle(ia, i + 1) < angle(oa, j + 1));
        if (take_inner) {
            tris.push_back({inner[i % p], outer[j % q], inner[(i + 1) % p]});
            ++i;
        } else {
            tris.push_back({inner[i % p], outer[j % q], outer[(j + 1) % q]});
            ++j;
        }
    }
}

Mesh finish(Mesh mesh) {
    orient(mesh);
    mesh.boundary_edges = boundary_from_triangles(mesh);
    validate(mesh);
    return mesh;
}

}  // namespace

double ShapeSpec::area() const {
    switch (kind) {
        case ShapeKind::disk: return std::numbers::pi * a * a;
        case ShapeKind::ellipse: return std::numbers::pi * a * b;
        case ShapeKind::rectangle: return a * b;
        case ShapeKind::perturbed: return std::numbers::pi * (1.0 + 0.5 * eps * eps);
    }
    return 0.0;
}

bool ShapeSpec::is_ball() const {
    return kind == ShapeKind::disk || (kind == ShapeKind::ellipse && a == b) ||
           (kind == ShapeKind::perturbed && eps == 0.0);
}

std::string ShapeSpec::name() const {
    std::ostringstream out;
    switch (kind) {
        case ShapeKind::disk: out << "disk:" << a; break;
        case ShapeKind::ellipse: out << "ellipse:" << a << ',' << b; break;
        case ShapeKind::rectangle: out << "rect:" << a << ',' << b; break;
        case ShapeKind::perturbed: out << "perturbed:" << eps << ',' << k; break;
    }
    return out.str();
}

ShapeSpec parse_shape(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::vector<double> args = colon == std::string::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
    ShapeSpec s;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) throw DomainError("shape '" + text + "': wrong number of parameters");
    };
    if (head == "disk") {
        need(0, 1);
        s.kind = ShapeKind::disk;
        s.a = s.b = args.empty() ? 1.0 : args[0];
    } else if (head == "ellipse") {
        need(2, 2);
        s.kind = ShapeKind::ellipse;
        s.a = args[0];
        s.b = args[1];
    } else if (head == "rect" || head == "rectangle") {
        need(2, 2);
        s.kind = ShapeKind::rectangle;
        s.a = args[0];
        s.b = args[1];
    } else if (head == "square") {
        need(0, 1);
        s.kind = ShapeKind::rectangle;
        s.a = s.b = args.empty() ? 1.0 : args[0];
    } else if (head == "perturbed") {
        need(2, 2);
        s.kind = ShapeKind::perturbed;
        s.eps = args[0];
        if (args[1] != std::floor(args[1]) || args[1] < 1.0) throw DomainError("shape: perturbation mode must be an integer >= 1");
        s.k = static_cast<int>(args[1]);
        if (!(std::abs(s.eps) * (1.0 + s.k) < 1.0)) throw DomainError("shape: perturbation too large for a valid mesh");
    } else {
        throw DomainError("unknown shape '" + text + "'");
    }
    if (!(s.a > 0.0) || !(s.b > 0.0) || !std::isfinite(s.a) || !std::isfinite(s.b)) {
        throw DomainError("shape '" + text + "': sizes must be positive");
    }
    return s;
}

Mesh disk_mesh(double radius, double h) {
    check_h(h);
    if (!(radius > 0.0)) throw DomainError("disk_mesh: radius must be > 0");
    const int rings = std::max(2, static_cast<int>(std::ceil(radius / h)));
    Mesh mesh;
    mesh.vertices.push_back({0.0, 0.0});
    std::vector<int> prev{0};
    std::vector<double> prev_angle{0.0};
    int prev_count = 1;
    for (int i = 1; i <= rings; ++i) {
        const double r = radius * i / rings;
        const int count = std::max({6, prev_count, static_cast<int>(std::lround(kTwoPi * r / h))});
        std::vector<int> ring(static_cast<std::size_t>(count));
        std::vector<double> angle(static_cast<std::size_t>(count));
        const double shift = (i % 2 == 0) ? 0.5 : 0.0;
        for (int j = 0; j < count; ++j) {
            const double t = kTwoPi * (j + shift) / count;
            angle[static_cast<std::size_t>(j)] = t;
            ring[static_cast<std::size_t>(j)] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back({r * std::cos(t), r * std::sin(t)});
        }
        if (i == 1) {
            for (int j = 0; j < count; ++j) {
                mesh.triangles.push_back({0, ring[static_cast<std::size_t>(j)], ring[static_cast<std::size_t>((j + 1) % count)]});
            }
        } else {
            zipper(mesh.triangles, prev, prev_angle, ring, angle);
        }
        prev = std::move(ring);
        prev_angle = std::move(angle);
        prev_count = count;
    }
    return finish(std::move(mesh));
}

Mesh ellipse_mesh(double a, double b, double h) {
    check_h(h);
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ellipse_mesh: semi-axes must be > 0");
    Mesh mesh = disk_mesh(1.0, h / std::max(a, b));
    for (auto& p : mesh.vertices) {
        p.x *= a;
        p.y *= b;
    }
    return finish(std::move(mesh));
}

Mesh rectangle_mesh(double a, double b, double h) {
    check_h(h);
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("rectangle_mesh: sides must be > 0");
    const int nx = std::max(1, static_cast<int>(std::ceil(a / h)));
    const int ny = std::max(1, static_cast<int>(std::ceil(b / h)));
    Mesh mesh;
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) mesh.vertices.push_back({a * i / nx, b * j / ny});
    }
    auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int v00 = id(i, j), v10 = id(i + 1, j), v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
            if ((i + j) % 2 == 0) {
                mesh.triangles.push_back({v00, v10, v11});
                mesh.triangles.push_back({v00, v11, v01});
            } else {
                mesh.triangles.push_back({v00, v10, v01});
                mesh.triangles.push_back({v10, v11, v01});
            }
        }
    }
    return finish(std::move(mesh));
}

Mesh perturbed_disk_mesh(double eps, int k, double h) {
    check_h(h);
    if (k < 1 || !(std::abs(eps) * (1.0 + k) < 1.0)) throw DomainError("perturbed_disk_mesh: invalid perturbation");
    Mesh mesh = disk_mesh(1.0, h / (1.0 + std::abs(eps) * (1.0 + k)));
    for (auto& p : mesh.vertices) {
        const double t = std::atan2(p.y, p.x);
        const double f = 1.0 + eps * std::cos(k * t);
        p.x *= f;
        p.y *= f;
    }
    return finish(std::move(mesh));
}

Mesh generate(const ShapeSpec& shape, double h) {
    switch (shape.kind) {
        case ShapeKind::disk: return disk_mesh(shape.a, h);
        case ShapeKind::ellipse: return ellipse_mesh(shape.a, shape.b, h);
        case ShapeKind::rectangle: return rectangle_mesh(shape.a, shape.b, h);
        case ShapeKind::perturbed: return perturbed_disk_mesh(shape.eps, shape.k, h);
    }
    throw DomainError("generate: unknown shape");
}

}  // namespace robin::fem
