#include "eigenbound/grids.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eigenbound/icosphere.hpp"
#include "eigenbound/numerics.hpp"
#include "eigenbound/sobol.hpp"

namespace eigenbound {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string DirectionGrid::label() const {
  switch (rule) {
    case Rule::ICOSPHERE_VERTEX:
      return "icosphere" + std::to_string(resolution);
    case Rule::HOPF_PRODUCT:
      return "hopf" + std::to_string(resolution) + "x" +
             std::to_string(resolution2);
    case Rule::QMC_SOBOL:
      return "sobol2p" + std::to_string(resolution);
  }
  return "?";
}

void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-like initial guess
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

DirectionGrid icosphere_grid(int level) {
  const IcosphereMesh mesh = build_icosphere(level);
  const int n = mesh.vertex_count();
  DirectionGrid g;
  g.rule = DirectionGrid::Rule::ICOSPHERE_VERTEX;
  g.sphere_dim = 2;
  g.order = 2.0;
  g.resolution = level;
  g.nodes = mesh.vertices;
  g.weights = Eigen::VectorXd::Zero(n);
  for (const auto& f : mesh.faces) {
    const double area = spherical_triangle_area(
        mesh.vertices.row(f[0]), mesh.vertices.row(f[1]),
        mesh.vertices.row(f[2]));
    for (int k = 0; k < 3; ++k) g.weights[f[k]] += area / 3.0;
  }
  return g;
}

DirectionGrid hopf_grid(int n_s, int n_angle) {
  if (n_s < 2 || n_angle < 4)
    throw std::invalid_argument("hopf_grid: resolution too small");
  Eigen::VectorXd gx, gw;
  gauss_legendre(n_s, gx, gw);
  DirectionGrid g;
  g.rule = DirectionGrid::Rule::HOPF_PRODUCT;
  g.sphere_dim = 3;
  g.order = 4.0;
  g.resolution = n_s;
  g.resolution2 = n_angle;
  const int n = n_s * n_angle * n_angle;
  g.nodes.resize(n, 4);
  g.weights.resize(n);
  const double wa = 2.0 * kPi / n_angle;
  int idx = 0;
  for (int i = 0; i < n_s; ++i) {
    const double s = 0.5 * (gx[i] + 1.0);
    const double ws = 0.5 * gw[i];
    const double c1 = std::sqrt(1.0 - s), c2 = std::sqrt(s);
    for (int j = 0; j < n_angle; ++j) {
      const double a1 = wa * j;
      for (int k = 0; k < n_angle; ++k, ++idx) {
        const double a2 = wa * k;
        g.nodes(idx, 0) = c1 * std::cos(a1);
        g.nodes(idx, 1) = c1 * std::sin(a1);
        g.nodes(idx, 2) = c2 * std::cos(a2);
        g.nodes(idx, 3) = c2 * std::sin(a2);
        g.weights[idx] = 0.5 * ws * wa * wa;
      }
    }
  }
  return g;
}

DirectionGrid sobol_sphere_grid(int ambient_dim, int log2_n) {
  if (ambient_dim < 3 || ambient_dim > 10)
    throw std::invalid_argument("sobol_sphere_grid: ambient_dim in [3, 10]");
  if (log2_n < 4 || log2_n > 24)
    throw std::invalid_argument("sobol_sphere_grid: log2_n in [4, 24]");
  const std::uint64_t n = 1ull << log2_n;
  SobolSequence seq(ambient_dim);
  DirectionGrid g;
  g.rule = DirectionGrid::Rule::QMC_SOBOL;
  g.sphere_dim = ambient_dim - 1;
  g.order = 1.0;
  g.resolution = log2_n;
  g.nodes.resize(static_cast<int>(n), ambient_dim);
  const double w = unit_sphere_area(ambient_dim) / static_cast<double>(n);
  g.weights = Eigen::VectorXd::Constant(static_cast<int>(n), w);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto u = seq.point(i);
    Eigen::VectorXd z(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) z[c] = inverse_normal_cdf(u[c]);
    const double nz = z.norm();
    if (nz < 1e-9)
      z = Eigen::VectorXd::Unit(ambient_dim, 0);
    else
      z /= nz;
    g.nodes.row(static_cast<int>(i)) = z;
  }
  return g;
}

DirectionGrid default_grid(int ambient_dim, int resolution) {
  if (ambient_dim == 3) return icosphere_grid(resolution);
  if (ambient_dim == 4)
    return hopf_grid(6 * resolution, 12 * resolution);
  return sobol_sphere_grid(ambient_dim, std::min(24, 10 + 2 * resolution));
}

DirectionGrid coarser_grid(const DirectionGrid& g) {
  switch (g.rule) {
    case DirectionGrid::Rule::ICOSPHERE_VERTEX:
      return icosphere_grid(std::max(1, g.resolution - 1));
    case DirectionGrid::Rule::HOPF_PRODUCT:
      return hopf_grid(std::max(2, g.resolution / 2),
                       std::max(4, g.resolution2 / 2));
    case DirectionGrid::Rule::QMC_SOBOL:
      return sobol_sphere_grid(g.sphere_dim + 1, std::max(4, g.resolution - 1));
  }
  return g;
}

}  // namespace eigenbound
