#include "robin/fem/mesh.hpp"

#include "robin/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace robin::fem {

namespace {

double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double distance(const Point& a, const Point& b) { return std::hypot(b.x - a.x, b.y - a.y); }

std::pair<int, int> key(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

}  // namespace

double Mesh::triangle_area(std::size_t t) const {
    const auto& tri = triangles[t];
    return signed_area(vertices[static_cast<std::size_t>(tri[0])], vertices[static_cast<std::size_t>(tri[1])],
                       vertices[static_cast<std::size_t>(tri[2])]);
}

double Mesh::area() const {
    double sum = 0.0;
    for (std::size_t t = 0; t < triangles.size(); ++t) sum += triangle_area(t);
    return sum;
}

double Mesh::boundary_length() const {
    double sum = 0.0;
    for (const auto& e : boundary_edges) {
        sum += distance(vertices[static_cast<std::size_t>(e[0])], vertices[static_cast<std::size_t>(e[1])]);
    }
    return sum;
}

double Mesh::max_edge() const {
    double h = 0.0;
    for (const auto& tri : triangles) {
        for (int k = 0; k < 3; ++k) {
            h = std::max(h, distance(vertices[static_cast<std::size_t>(tri[k])],
                                     vertices[static_cast<std::size_t>(tri[(k + 1) % 3])]));
        }
    }
    return h;
}

std::vector<bool> Mesh::boundary_flags() const {
    std::vector<bool> flags(vertices.size(), false);
    for (const auto& e : boundary_edges) {
        flags[static_cast<std::size_t>(e[0])] = true;
        flags[static_cast<std::size_t>(e[1])] = true;
    }
    return flags;
}

std::vector<std::array<int, 2>> boundary_from_triangles(const Mesh& mesh) {
    std::map<std::pair<int, int>, std::pair<int, std::array<int, 2>>> uses;
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            const int a = tri[k];
            const int b = tri[(k + 1) % 3];
            auto& slot = uses[key(a, b)];
            ++slot.first;
            slot.second = {a, b};
        }
    }
    std::vector<std::array<int, 2>> out;
    for (const auto& [k, v] : uses) {
        if (v.first == 1) out.push_back(v.second);
    }
    return out;
}

void orient(Mesh& mesh) {
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const double a = mesh.triangle_area(t);
        if (a == 0.0) throw MeshError("orient: degenerate triangle");
        if (a < 0.0) std::swap(mesh.triangles[t][1], mesh.triangles[t][2]);
    }
}

void validate(const Mesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    if (n < 3 || mesh.triangles.empty()) throw MeshError("mesh: needs at least one triangle");
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int v : mesh.triangles[t]) {
            if (v < 0 || v >= n) throw MeshError("mesh: triangle references a missing vertex");
        }
        if (!(mesh.triangle_area(t) > 0.0)) {
            std::ostringstream msg;
            msg << "mesh: triangle " << t << " has non-positive area " << mesh.triangle_area(t);
            throw MeshError(msg.str());
        }
    }

    std::map<std::pair<int, int>, std::vector<std::array<int, 2>>> uses;
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            uses[key(tri[k], tri[(k + 1) % 3])].push_back({tri[k], tri[(k + 1) % 3]});
        }
    }
    std::map<std::pair<int, int>, int> declared;
    for (const auto& e : mesh.boundary_edges) {
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1]) {
            throw MeshError("mesh: invalid boundary edge");
        }
        if (++declared[key(e[0], e[1])] > 1) throw MeshError("mesh: duplicated boundary edge");
        auto it = uses.find(key(e[0], e[1]));
        if (it == uses.end() || it->second.size() != 1) {
            throw MeshError("mesh: boundary edge must belong to exactly one triangle");
        }
        if (it->second.front() != e) throw MeshError("mesh: boundary edge orientation is not outward");
    }
    for (const auto& [k, v] : uses) {
        if (v.size() > 2) throw MeshError("mesh: edge shared by more than two triangles");
        if (v.size() == 1 && !declared.count(k)) throw MeshError("mesh: free edge missing from boundary list");
    }

    std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
    std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
    for (const auto& e : mesh.boundary_edges) {
        ++out_degree[static_cast<std::size_t>(e[0])];
        ++in_degree[static_cast<std::size_t>(e[1])];
    }
    for (int v = 0; v < n; ++v) {
        if (out_degree[static_cast<std::size_t>(v)] != in_degree[static_cast<std::size_t>(v)]) {
            throw MeshError("mesh: boundary edges do not form closed loops");
        }
    }

    // Connectivity through shared vertices.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            used[static_cast<std::size_t>(tri[k])] = true;
            parent[static_cast<std::size_t>(find(tri[k]))] = find(tri[(k + 1) % 3]);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) throw MeshError("mesh: vertex not used by any triangle");
    }
    const int root = find(0);
    for (int v = 1; v < n; ++v) {
        if (find(v) != root) throw MeshError("mesh: domain is not connected");
    }
}

Mesh refine_midpoint(const Mesh& mesh) {
    Mesh out;
    out.vertices = mesh.vertices;
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
        auto [it, inserted] = mid.try_emplace(key(a, b), static_cast<int>(out.vertices.size()));
        if (inserted) {
            const Point& p = mesh.vertices[static_cast<std::size_t>(a)];
            const Point& q = mesh.vertices[static_cast<std::size_t>(b)];
            out.vertices.push_back({0.5 * (p.x + q.x), 0.5 * (p.y + q.y)});
        }
        return it->second;
    };
    out.triangles.reserve(4 * mesh.triangles.size());
    for (const auto& tri : mesh.triangles) {
        const int a = tri[0], b = tri[1], c = tri[2];
        const int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
        out.triangles.push_back({a, ab, ca});
        out.triangles.push_back({ab, b, bc});
        out.triangles.push_back({ca, bc, c});
        out.triangles.push_back({ab, bc, ca});
    }
    for (const auto& e : mesh.boundary_edges) {
        const int m = midpoint(e[0], e[1]);
        out.boundary_edges.push_back({e[0], m});
        out.boundary_edges.push_back({m, e[1]});
    }
    return out;
}

}  // namespace robin::fem
