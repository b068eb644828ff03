#pragma once

#include <Eigen/SparseCore>

#include "subdif/mesh.hpp"

namespace subdif {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Consistent P1 mass matrix; symmetric positive definite, 1^T M 1 = |Omega|.
SparseMatrix assemble_mass(const Mesh& mesh);

// Stiffness matrix for -div(a grad .) with element-wise constant a and pure
// Neumann boundary; symmetric PSD with kernel spanned by constants.
// Throws std::invalid_argument if any coefficient is nonpositive.
SparseMatrix assemble_stiffness(const Mesh& mesh, const ElementField& a);

// Neumann load b_i = int_{dOmega} eta phi_i dS by the nodal trapezoidal rule
// on boundary edges. eta is given per boundary node, ordered like
// mesh.boundary_nodes. Interior entries are zero.
NodalField assemble_neumann_load(const Mesh& mesh, const Eigen::VectorXd& eta);

// Solve -div(a grad w) = 0 with a dw/dnu = eta and the mean-zero constraint
// int_Omega w dx = 0, via one Lagrange multiplier row. Throws
// IncompatibleNeumannData when the load violates the compatibility
// condition sum(b) ~ 0.
NodalField solve_neumann_elliptic(const Mesh& mesh, const ElementField& a,
                                  const Eigen::VectorXd& eta);

struct IncompatibleNeumannData : std::runtime_error {
    explicit IncompatibleNeumannData(double defect_);
    double defect;  // |sum of load entries|
};

}  // namespace subdif
