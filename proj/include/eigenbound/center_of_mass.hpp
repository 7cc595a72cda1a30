#pragma once

#include <Eigen/Dense>

#include "eigenbound/radial_graph.hpp"

namespace eigenbound {

// Mass distribution G(r) of the center-of-mass condition
// int_M G(|X|_p) X dm = 0.
struct MassDistribution {
  enum class Tag { SIN_DELTA_OVER_R, SINH_OVER_R };
  Tag tag = Tag::SIN_DELTA_OVER_R;
  CurvatureClass cls;

  // G from the test-function family the theorems use: sin_delta(r)/r for
  // the pinched-curvature cases, sinh(r)/r for rank-1 ambients.
  static MassDistribution for_ambient(const AmbientModel& a);

  double value(double r) const;  // continuous at 0 with G(0) = 1
};

struct CenterResult {
  Vec point;  // embedded coordinates
  double moment_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Embedded surface samples with their dm weights (CONSTANT ambients).
struct PointCloud {
  Eigen::MatrixXd points;  // N x e rows, e = embedding dimension
  Eigen::VectorXd dm;
};

PointCloud embedded_surface(const RadialGraph& graph,
                            const SurfaceTable& table);

// G-weighted first moment at p: int_M G(|X|) X dm with X = log_p(q),
// returned as a tangent vector at p in embedding coordinates.
Vec moment(const AmbientModel& ambient, const PointCloud& cloud,
           const MassDistribution& G, const Vec& p,
           Exec exec = default_exec());

// Moment at the graph pole, valid for every ambient kind (X = t(u) u in
// the pole's normal coordinates; no log map involved).
Vec pole_moment(const RadialGraph& graph, const SurfaceTable& table,
                const MassDistribution& G, Exec exec = default_exec());

// Damped fixed-point iteration p <- exp_p(alpha m(p) / mass(p)) with
// backtracking on the moment norm. Success: |m(p)| <= tol Vol(M).
CenterResult solve_center(const AmbientModel& ambient, const PointCloud& cloud,
                          const MassDistribution& G, const Vec& init,
                          double tol = 1e-10, int max_iter = 200,
                          Exec exec = default_exec());

CenterResult solve_center(const RadialGraph& graph, const DirectionGrid& grid,
                          const MassDistribution& G, double tol = 1e-10,
                          int max_iter = 200, Exec exec = default_exec());

}  // namespace eigenbound
