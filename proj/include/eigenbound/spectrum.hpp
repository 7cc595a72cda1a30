#pragma once

#include <optional>

#include "eigenbound/fem.hpp"

namespace eigenbound {

struct SpectralResult {
  double lambda1 = 0.0;
  Eigen::VectorXd eigenvector;  // M-normalized, M-orthogonal to constants
  double residual = 0.0;        // |S x - lambda M x| / (lambda |M x|)
  int mesh_level = 0;
  int vertex_count = 0;
};

// Smallest positive eigenvalue of S x = lambda M x on the complement of the
// constants. Dense below 3000 vertices, shift-invert Lanczos with inverse-
// iteration polish above; both paths agree to 1e-9 relative.
SpectralResult smallest_positive_eigenvalue(const SpectralOperator& op,
                                            int mesh_level = 0);

// Force a specific path (used by the method-independence tests).
SpectralResult smallest_positive_eigenvalue_dense(const SpectralOperator& op,
                                                  int mesh_level = 0);
SpectralResult smallest_positive_eigenvalue_sparse(const SpectralOperator& op,
                                                   int mesh_level = 0);

struct RayleighBound {
  double bound = 0.0;              // quotient of the combined test family
  double max_center_defect = 0.0;  // largest |int g_i dm| / Vol(M) removed
};

// Rayleigh quotient of the test family g_i = sin_delta(r) x_i / r built on
// the mesh vertices, each g_i projected M-orthogonal to constants. With
// center == nullopt the coordinates are taken about the graph pole;
// otherwise about the embedded point (CONSTANT ambients only).
RayleighBound rayleigh_bound(const RadialGraph& graph, const TriMesh& mesh,
                             const SpectralOperator& op,
                             const std::optional<Vec>& center = std::nullopt);

// max_i |S f_i - lambda1(S(R)) M f_i|_{M^-1} / |f_i|_M for the coordinate
// functions f_i = x_i / r on a geodesic-sphere mesh.
double coordinate_eigenfunction_residual(const AmbientModel& ambient, double R,
                                         int level,
                                         Exec exec = default_exec());
double coordinate_eigenfunction_residual_at(const AmbientModel& ambient,
                                            double R, int level, double lambda,
                                            Exec exec = default_exec());

struct ConvergenceStudy {
  std::vector<int> levels;
  std::vector<double> lambdas;
  double observed_order = 0.0;  // NaN when the sequence is not monotone
  double extrapolated = 0.0;    // Richardson estimate from the last pair
  double fem_budget = 0.0;      // 2 |lambda_finest - extrapolated|
  bool monotone = false;
};

ConvergenceStudy convergence_study(const RadialGraph& graph,
                                   const std::vector<int>& levels,
                                   Exec exec = default_exec());

}  // namespace eigenbound
