#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace eigenbound {

// Icosahedron subdivided `level` times with vertices projected to the unit
// sphere. Vertex and face ordering is deterministic; the vertex set is
// closed under the antipodal map (the icosahedron is centrally symmetric).
struct IcosphereMesh {
  Eigen::MatrixXd vertices;               // V x 3, unit rows
  std::vector<std::array<int, 3>> faces;  // CCW as seen from outside

  int vertex_count() const { return static_cast<int>(vertices.rows()); }
};

IcosphereMesh build_icosphere(int level);

// Solid angle of the spherical triangle (a, b, c) on the unit sphere.
double spherical_triangle_area(const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b,
                               const Eigen::Vector3d& c);

}  // namespace eigenbound
