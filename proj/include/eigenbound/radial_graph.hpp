#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eigenbound/ambient.hpp"
#include "eigenbound/grids.hpp"
#include "eigenbound/parallel.hpp"

namespace eigenbound {

// One band-limited perturbation term: coeff * Z_degree(<u, pole>) with the
// zonal harmonic normalized to 1 at its pole.
struct ZonalTerm {
  int degree = 1;
  double coeff = 0.0;
  Vec pole;
};

// Star-shaped closed hypersurface as a radial graph over the unit tangent
// sphere at the base point:  q(u) = exp_p(t(u) u),
//   t(u) = r0 * (1 + sum_j coeff_j Z_{l_j}(<u, pole_j>)).
class RadialGraph {
 public:
  RadialGraph(const AmbientModel& ambient, double r0,
              std::vector<ZonalTerm> terms, bool antipodally_symmetric);

  const AmbientModel& ambient() const { return ambient_; }
  double base_radius() const { return r0_; }
  const std::vector<ZonalTerm>& terms() const { return terms_; }
  bool antipodally_symmetric() const { return symmetric_; }
  bool is_constant() const { return terms_.empty(); }
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }

  double radius(const Vec& u) const;        // t(u)
  Vec radius_gradient(const Vec& u) const;  // tangential gradient of t at u

  // Normal coordinates about the pole: X(q) = t(u) u, so |X| = t(u).
  Vec normal_coordinates(const Vec& u) const { return radius(u) * u; }

  RadialGraph scaled(double c) const;  // Euclidean ambients only

  std::string serialize() const;
  static RadialGraph deserialize(const std::string& text);

 private:
  AmbientModel ambient_;
  double r0_;
  std::vector<ZonalTerm> terms_;
  bool symmetric_;
  double r_min_ = 0.0, r_max_ = 0.0;
};

RadialGraph make_geodesic_sphere(const AmbientModel& ambient, double radius);

// Seeded band-limited random graph. Two zonal terms per degree up to the
// band limit (even degrees only when symmetric), amplitudes rescaled so the
// largest perturbation magnitude is `amplitude`; the amplitude is clamped
// down when the ambient radius caps demand it.
RadialGraph random_star_graph(const AmbientModel& ambient, std::uint64_t seed,
                              double r0, double amplitude, int bandlimit,
                              bool symmetric);

// Per-node surface data: dm = sec_theta * phi * du.
struct SurfaceTable {
  Eigen::MatrixXd nodes;    // N x d grid directions
  Eigen::VectorXd weights;  // du weights
  Eigen::VectorXd t;        // radius samples
  Eigen::MatrixXd grad;     // N x d tangential gradient of t
  Eigen::VectorXd sec_theta;
  Eigen::VectorXd phi;
  Eigen::VectorXd dm_weight;

  int size() const { return static_cast<int>(t.size()); }
};

SurfaceTable evaluate(const RadialGraph& graph, const DirectionGrid& grid,
                      Exec exec = default_exec());

// Integral over M of per-node values against dm (fixed-order pairwise sum).
double surface_integral(const SurfaceTable& table, const Eigen::VectorXd& f);
double surface_integral(const SurfaceTable& table,
                        const std::function<double(int)>& f,
                        Exec exec = default_exec());
double surface_volume(const SurfaceTable& table);  // F = 1: Vol(M)

// Volume enclosed by the graph, and of the transplanted body in the
// comparison space form (same radial profile, model density). They agree
// for CONSTANT and RANK1 ambients where the model space is the ambient.
double domain_volume(const RadialGraph& graph, const DirectionGrid& grid,
                     Exec exec = default_exec());
double transplant_volume(const RadialGraph& graph, const DirectionGrid& grid,
                         Exec exec = default_exec());

// Same volumes from an already-evaluated table (reuses its radii/weights).
double domain_volume(const RadialGraph& graph, const SurfaceTable& table,
                     Exec exec = default_exec());
double transplant_volume(const RadialGraph& graph, const SurfaceTable& table,
                         Exec exec = default_exec());

}  // namespace eigenbound
