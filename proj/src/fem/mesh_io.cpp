#include "robin/fem/mesh_io.hpp"

#include "robin/error.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>

namespace robin::fem {

namespace {

long read_count(std::istream& in, const char* what) {
    long n = -1;
    if (!(in >> n) || n < 0) throw MeshError(std::string("mesh file: bad ") + what + " count");
    return n;
}

}  // namespace

Mesh read_mesh(std::istream& in) {
    std::string tag;
    int version = 0;
    if (!(in >> tag >> version) || tag != "robinmesh" || version != 1) {
        throw MeshError("mesh file: expected header 'robinmesh 1'");
    }
    Mesh mesh;
    const long nv = read_count(in, "vertex");
    mesh.vertices.resize(static_cast<std::size_t>(nv));
    for (auto& p : mesh.vertices) {
        if (!(in >> p.x >> p.y)) throw MeshError("mesh file: truncated vertex list");
    }
    const long nt = read_count(in, "triangle");
    mesh.triangles.resize(static_cast<std::size_t>(nt));
    for (auto& t : mesh.triangles) {
        if (!(in >> t[0] >> t[1] >> t[2])) throw MeshError("mesh file: truncated triangle list");
    }
    const long nb = read_count(in, "boundary edge");
    mesh.boundary_edges.resize(static_cast<std::size_t>(nb));
    for (auto& e : mesh.boundary_edges) {
        if (!(in >> e[0] >> e[1])) throw MeshError("mesh file: truncated boundary list");
    }
    in >> std::ws;
    if (!in.eof()) throw MeshError("mesh file: trailing data after boundary list");
    validate(mesh);
    return mesh;
}

Mesh load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open mesh file " + path);
    return read_mesh(in);
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
    out << "robinmesh 1\n" << mesh.vertices.size() << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& p : mesh.vertices) out << p.x << ' ' << p.y << '\n';
    out << mesh.triangles.size() << '\n';
    for (const auto& t : mesh.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << mesh.boundary_edges.size() << '\n';
    for (const auto& e : mesh.boundary_edges) out << e[0] << ' ' << e[1] << '\n';
}

void save_mesh(const std::string& path, const Mesh& mesh) {
    std::ofstream out(path);
    if (!out) throw MeshError("cannot write mesh file " + path);
    write_mesh(out, mesh);
}

}  // namespace robin::fem
