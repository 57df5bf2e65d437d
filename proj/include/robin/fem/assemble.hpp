#pragma once

#include "robin/fem/mesh.hpp"

#include <Eigen/Sparse>

namespace robin::fem {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct SystemParts {
    SparseMatrix stiffness;      ///< int grad u . grad v
    SparseMatrix mass;           ///< int u v
    SparseMatrix boundary_mass;  ///< int_{boundary} u v
};

struct RobinSystem {
    SparseMatrix k_sigma;  ///< stiffness + sigma * boundary_mass
    SparseMatrix mass;
};

/// Exact P1 element integrals. Throws MeshError on a degenerate triangle.
SystemParts assemble_parts(const Mesh& mesh);

/// Requires sigma >= 0; sigma = 0 gives the (singular) Neumann form.
RobinSystem assemble(const Mesh& mesh, double sigma);

/// Lumped mass of each vertex: one third of the incident triangle areas.
Eigen::VectorXd lumped_mass(const Mesh& mesh);

}  // namespace robin::fem
