#include "eigenbound/fem.hpp"

#include <cmath>

namespace eigenbound {

SpectralOperator assemble(const TriMesh& mesh, Exec exec) {
  const int nv = mesh.vertex_count();
  const int nf = mesh.face_count();

  // Per-face cotangents and areas in parallel; accumulation stays in fixed
  // face order so the assembled matrices are thread-count independent.
  Eigen::MatrixXd cot(nf, 3);
  Eigen::VectorXd area(nf);
  parallel_for(
      nf,
      [&](std::size_t fi) {
        const int f = static_cast<int>(fi);
        const double a = mesh.edge_len(f, 0), b = mesh.edge_len(f, 1),
                     c = mesh.edge_len(f, 2);
        double s = a + b + c;
        const double prod = (s * (b + c - a) * (c + a - b) * (a + b - c));
        const double ar = 0.25 * std::sqrt(std::max(prod, 0.0));
        area[f] = ar;
        // cot of the angle at corner k (opposite edge k)
        cot(f, 0) = (b * b + c * c - a * a) / (4.0 * ar);
        cot(f, 1) = (c * c + a * a - b * b) / (4.0 * ar);
        cot(f, 2) = (a * a + b * b - c * c) / (4.0 * ar);
      },
      exec);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(nf) * 12);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(nv);
  for (int f = 0; f < nf; ++f) {
    const auto& face = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      const int i = face[(k + 1) % 3], j = face[(k + 2) % 3];
      const double w = 0.5 * cot(f, k);
      trips.emplace_back(i, j, -w);
      trips.emplace_back(j, i, -w);
      trips.emplace_back(i, i, w);
      trips.emplace_back(j, j, w);
      mass[face[k]] += area[f] / 3.0;
    }
  }
  SpectralOperator op;
  op.stiffness.resize(nv, nv);
  op.stiffness.setFromTriplets(trips.begin(), trips.end());
  op.lumped_mass = mass;
  std::vector<double> areas(area.data(), area.data() + nf);
  op.area = pairwise_sum(areas);
  return op;
}

}  // namespace eigenbound
