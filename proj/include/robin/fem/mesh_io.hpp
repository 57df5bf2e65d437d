#pragma once

#include "robin/fem/mesh.hpp"

#include <iosfwd>
#include <string>

namespace robin::fem {

/// Plain-text format:
///   robinmesh 1
///   <nv>  then nv lines "x y"
///   <nt>  then nt lines "i j k"   (0-based)
///   <nb>  then nb lines "i j"
/// Throws MeshError on malformed input; the result is validated.
Mesh read_mesh(std::istream& in);
Mesh load_mesh(const std::string& path);

void write_mesh(std::ostream& out, const Mesh& mesh);
void save_mesh(const std::string& path, const Mesh& mesh);

}  // namespace robin::fem
