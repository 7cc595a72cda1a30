#pragma once

#include <Eigen/Dense>
#include <string>

namespace eigenbound {

// Quadrature rule on the unit sphere S^{d-1}: nodes with positive weights
// summing to area(S^{d-1}).
struct DirectionGrid {
  enum class Rule { ICOSPHERE_VERTEX, HOPF_PRODUCT, QMC_SOBOL };

  Rule rule = Rule::ICOSPHERE_VERTEX;
  int sphere_dim = 2;      // d - 1
  Eigen::MatrixXd nodes;   // N x d, unit rows
  Eigen::VectorXd weights; // N, positive
  double order = 2.0;      // advertised convergence order under refinement
  int resolution = 0;      // level / n_s / log2(N) depending on the rule
  int resolution2 = 0;     // angular count for HOPF_PRODUCT

  int size() const { return static_cast<int>(nodes.rows()); }
  int ambient_dim() const { return sphere_dim + 1; }
  std::string label() const;
};

// S^2: icosphere vertices weighted by a third of each incident spherical
// triangle's area (second-order rule).
DirectionGrid icosphere_grid(int level);

// S^3: product rule in Hopf-like coordinates
//   u = (sqrt(1-s) cos a1, sqrt(1-s) sin a1, sqrt(s) cos a2, sqrt(s) sin a2)
// with Gauss-Legendre in s on [0,1] and trapezoid in the two angles; the
// measure is (1/2) ds da1 da2.
DirectionGrid hopf_grid(int n_s, int n_angle);

// S^{d-1}, d >= 5: Sobol points mapped through the inverse normal CDF and
// normalized; weights are exactly area/N.
DirectionGrid sobol_sphere_grid(int ambient_dim, int log2_n);

// Rule choice by dimension at a resolution knob (icosphere level for d=3,
// scaled Hopf counts for d=4, log2 N for d >= 5).
DirectionGrid default_grid(int ambient_dim, int resolution);

// One refinement step coarser, for a-posteriori quadrature error estimates.
DirectionGrid coarser_grid(const DirectionGrid& g);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w);

}  // namespace eigenbound
