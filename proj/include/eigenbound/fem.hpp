#pragma once

#include <Eigen/Sparse>

#include "eigenbound/trimesh.hpp"

namespace eigenbound {

// Assembled cotangent stiffness with lumped (diagonal) mass. Constants span
// the stiffness kernel; both forms come purely from intrinsic edge lengths.
struct SpectralOperator {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd lumped_mass;
  double area = 0.0;

  int size() const { return static_cast<int>(lumped_mass.size()); }
};

SpectralOperator assemble(const TriMesh& mesh, Exec exec = default_exec());

}  // namespace eigenbound
