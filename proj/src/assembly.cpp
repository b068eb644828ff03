#include "subdif/assembly.hpp"

#include <Eigen/SparseLU>
#include <stdexcept>
#include <string>
#include <vector>

namespace subdif {

namespace {

// Element geometry factors: b_i = y_j - y_k, c_i = x_k - x_j (cyclic).
struct ElementGeometry {
    double b[3], c[3], area;
};

ElementGeometry element_geometry(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    ElementGeometry g{};
    for (int i = 0; i < 3; ++i) {
        const auto pj = mesh.nodes.row(tri[(i + 1) % 3]);
        const auto pk = mesh.nodes.row(tri[(i + 2) % 3]);
        g.b[i] = pj[1] - pk[1];
        g.c[i] = pk[0] - pj[0];
    }
    g.area = mesh.triangle_area(t);
    return g;
}

}  // namespace

SparseMatrix assemble_mass(const Mesh& mesh) {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(9 * mesh.triangle_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const double s = mesh.triangle_area(t) / 12.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trip.emplace_back(tri[i], tri[j], (i == j ? 2.0 : 1.0) * s);
    }
    SparseMatrix M(mesh.node_count(), mesh.node_count());
    M.setFromTriplets(trip.begin(), trip.end());
    return M;
}

SparseMatrix assemble_stiffness(const Mesh& mesh, const ElementField& a) {
    if (a.size() != mesh.triangle_count())
        throw std::invalid_argument("assemble_stiffness: coefficient size mismatch");
    if ((a.array() <= 0.0).any())
        throw std::invalid_argument("assemble_stiffness: coefficient must be strictly positive");

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(9 * mesh.triangle_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const auto g = element_geometry(mesh, t);
        const double s = a[t] / (4.0 * g.area);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trip.emplace_back(tri[i], tri[j], s * (g.b[i] * g.b[j] + g.c[i] * g.c[j]));
    }
    SparseMatrix K(mesh.node_count(), mesh.node_count());
    K.setFromTriplets(trip.begin(), trip.end());
    return K;
}

NodalField assemble_neumann_load(const Mesh& mesh, const Eigen::VectorXd& eta) {
    if (eta.size() != static_cast<Eigen::Index>(mesh.boundary_nodes.size()))
        throw std::invalid_argument("assemble_neumann_load: eta size mismatch");
    NodalField b = NodalField::Zero(mesh.node_count());
    const auto w = mesh.boundary_weights();
    for (std::size_t i = 0; i < mesh.boundary_nodes.size(); ++i)
        b[mesh.boundary_nodes[i]] = w[i] * eta[static_cast<Eigen::Index>(i)];
    return b;
}

IncompatibleNeumannData::IncompatibleNeumannData(double defect_)
    : std::runtime_error("solve_neumann_elliptic: incompatible Neumann data, |sum b| = " +
                         std::to_string(defect_)),
      defect(defect_) {}

NodalField solve_neumann_elliptic(const Mesh& mesh, const ElementField& a,
                                  const Eigen::VectorXd& eta) {
    const NodalField b = assemble_neumann_load(mesh, eta);
    const double defect = std::abs(b.sum());
    const double scale = b.cwiseAbs().sum();
    if (scale > 0.0 && defect > 1e-10 * scale) throw IncompatibleNeumannData(defect);

    const SparseMatrix K = assemble_stiffness(mesh, a);
    const SparseMatrix M = assemble_mass(mesh);
    const NodalField m1 = M * NodalField::Ones(mesh.node_count());

    // Saddle system [K m; m^T 0] enforcing 1^T M w = 0.
    const int N = mesh.node_count();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(K.nonZeros() + 2 * N);
    for (int k = 0; k < K.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(K, k); it; ++it)
            trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    for (int i = 0; i < N; ++i) {
        trip.emplace_back(i, N, m1[i]);
        trip.emplace_back(N, i, m1[i]);
    }
    SparseMatrix S(N + 1, N + 1);
    S.setFromTriplets(trip.begin(), trip.end());

    Eigen::SparseLU<SparseMatrix> lu(S);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("solve_neumann_elliptic: factorization failed");
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N + 1);
    rhs.head(N) = b;
    const Eigen::VectorXd sol = lu.solve(rhs);
    return sol.head(N);
}

}  // namespace subdif
