#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "eigenbound/radial_graph.hpp"

namespace eigenbound {

// Intrinsic triangle mesh of a 2-dimensional radial-graph hypersurface:
// icosphere combinatorics with geodesic edge lengths of the ambient.
struct TriMesh {
  int level = 0;
  Eigen::MatrixXd directions;              // V x 3 unit parameter directions
  Eigen::VectorXd t;                       // radius at each vertex
  std::vector<std::array<int, 3>> faces;
  Eigen::MatrixXd edge_len;                // F x 3, entry k = |edge opposite corner k|

  int vertex_count() const { return static_cast<int>(directions.rows()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  int edge_count() const { return 3 * face_count() / 2; }
  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }
};

// Builds the level-l mesh. Edge lengths: exact constant-curvature law of
// cosines for CONSTANT ambients (and the k=1 rank-1 encoding), 3-point
// Gauss quadrature of the induced metric along great-circle parameter
// paths for WARPED ambients. Rejects meshes with degenerate triangles.
TriMesh build_intrinsic_mesh(const RadialGraph& graph, int level,
                             Exec exec = default_exec());

// Total area from flat-triangle (Heron) areas of the intrinsic lengths.
double mesh_area(const TriMesh& mesh);

}  // namespace eigenbound
