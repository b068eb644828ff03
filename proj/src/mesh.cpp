#include "subdif/mesh.hpp"

#include <ostream>
#include <stdexcept>

namespace subdif {

double Mesh::triangle_area(int t) const {
    const auto& tri = triangles[t];
    const auto p0 = nodes.row(tri[0]);
    const auto p1 = nodes.row(tri[1]);
    const auto p2 = nodes.row(tri[2]);
    return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]));
}

Eigen::Vector2d Mesh::centroid(int t) const {
    const auto& tri = triangles[t];
    return (nodes.row(tri[0]) + nodes.row(tri[1]) + nodes.row(tri[2])).transpose() / 3.0;
}

Eigen::Vector2d Mesh::element_gradient(int t, const NodalField& v) const {
    const auto& tri = triangles[t];
    const double area2 = 2.0 * triangle_area(t);
    Eigen::Vector2d g = Eigen::Vector2d::Zero();
    for (int i = 0; i < 3; ++i) {
        const auto pj = nodes.row(tri[(i + 1) % 3]);
        const auto pk = nodes.row(tri[(i + 2) % 3]);
        // grad of the hat function at vertex i
        g[0] += v[tri[i]] * (pj[1] - pk[1]) / area2;
        g[1] += v[tri[i]] * (pk[0] - pj[0]) / area2;
    }
    return g;
}

double Mesh::centroid_value(int t, const NodalField& v) const {
    const auto& tri = triangles[t];
    return (v[tri[0]] + v[tri[1]] + v[tri[2]]) / 3.0;
}

std::vector<double> Mesh::boundary_weights() const {
    std::vector<double> w(boundary_nodes.size(), 0.0);
    std::vector<int> pos(node_count(), -1);
    for (std::size_t i = 0; i < boundary_nodes.size(); ++i) pos[boundary_nodes[i]] = static_cast<int>(i);
    for (const auto& e : boundary_edges) {
        w[pos[e.a]] += 0.5 * e.length;
        w[pos[e.b]] += 0.5 * e.length;
    }
    return w;
}

Mesh build_uniform_mesh(int n) {
    if (n < 2) throw std::invalid_argument("build_uniform_mesh: n must be >= 2");
    Mesh m;
    m.n = n;
    m.h = 1.0 / n;
    const int nn = n + 1;
    m.nodes.resize(nn * nn, 2);
    for (int iy = 0; iy < nn; ++iy)
        for (int ix = 0; ix < nn; ++ix) {
            m.nodes(m.node_index(ix, iy), 0) = ix * m.h;
            m.nodes(m.node_index(ix, iy), 1) = iy * m.h;
        }

    m.triangles.reserve(2 * n * n);
    for (int cy = 0; cy < n; ++cy)
        for (int cx = 0; cx < n; ++cx) {
            const int v00 = m.node_index(cx, cy);
            const int v10 = m.node_index(cx + 1, cy);
            const int v01 = m.node_index(cx, cy + 1);
            const int v11 = m.node_index(cx + 1, cy + 1);
            m.triangles.push_back({v00, v10, v11});
            m.triangles.push_back({v00, v11, v01});
        }

    // counterclockwise boundary trace starting at the origin
    m.boundary_nodes.reserve(4 * n);
    for (int ix = 0; ix < n; ++ix) m.boundary_nodes.push_back(m.node_index(ix, 0));
    for (int iy = 0; iy < n; ++iy) m.boundary_nodes.push_back(m.node_index(n, iy));
    for (int ix = n; ix > 0; --ix) m.boundary_nodes.push_back(m.node_index(ix, n));
    for (int iy = n; iy > 0; --iy) m.boundary_nodes.push_back(m.node_index(0, iy));

    m.boundary_edges.reserve(4 * n);
    const int nb = static_cast<int>(m.boundary_nodes.size());
    for (int i = 0; i < nb; ++i) {
        BoundaryEdge e;
        e.a = m.boundary_nodes[i];
        e.b = m.boundary_nodes[(i + 1) % nb];
        e.length = (m.nodes.row(e.b) - m.nodes.row(e.a)).norm();
        m.boundary_edges.push_back(e);
    }
    return m;
}

void export_mesh(const Mesh& mesh, std::ostream& out) {
    out << "# nodes " << mesh.node_count() << "\n";
    for (int i = 0; i < mesh.node_count(); ++i)
        out << i << " " << mesh.nodes(i, 0) << " " << mesh.nodes(i, 1) << "\n";
    out << "# triangles " << mesh.triangle_count() << "\n";
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        out << t << " " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
    }
}

}  // namespace subdif
