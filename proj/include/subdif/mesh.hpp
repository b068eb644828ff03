#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace subdif {

// Nodal values, one scalar per mesh node.
using NodalField = Eigen::VectorXd;
// Element values, one scalar per triangle (e.g. the diffusivity a).
using ElementField = Eigen::VectorXd;

struct BoundaryEdge {
    int a = 0;  // boundary node indices (global), edge runs a -> b
    int b = 0;
    double length = 0.0;
};

// Structured P1 triangulation of the unit square (0,1)^2.
//
// The square is divided into n x n cells of side h = 1/n; every cell is
// split along its lower-left -> upper-right diagonal into two triangles
// with positive orientation. Boundary nodes are listed counterclockwise
// starting from the origin.
struct Mesh {
    int n = 0;                                    // subdivisions per side
    double h = 0.0;                               // 1/n
    Eigen::Matrix<double, Eigen::Dynamic, 2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary_nodes;              // ordered trace of the boundary
    std::vector<BoundaryEdge> boundary_edges;

    int node_count() const { return static_cast<int>(nodes.rows()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    int node_index(int ix, int iy) const { return iy * (n + 1) + ix; }

    double triangle_area(int t) const;
    // Barycenter of triangle t.
    Eigen::Vector2d centroid(int t) const;
    // Constant gradient of the P1 interpolant of nodal values on triangle t.
    Eigen::Vector2d element_gradient(int t, const NodalField& v) const;
    // P1 value at the centroid of triangle t.
    double centroid_value(int t, const NodalField& v) const;

    // Trapezoidal quadrature weight of each boundary node (sum of half the
    // adjacent edge lengths); indexed like boundary_nodes.
    std::vector<double> boundary_weights() const;
};

// Build the uniform mesh; throws std::invalid_argument for n < 2.
Mesh build_uniform_mesh(int n);

// Plain-text node / triangle listing for debugging.
void export_mesh(const Mesh& mesh, std::ostream& out);

}  // namespace subdif
