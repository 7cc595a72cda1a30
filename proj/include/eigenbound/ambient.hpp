#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "eigenbound/numerics.hpp"

namespace eigenbound {

class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vec = Eigen::VectorXd;

// Curvature regime selecting the sin_delta / cos_delta branch.
struct CurvatureClass {
  enum class Tag { NONNEG_PINCHED, NONPOS, PINCHED_NEG };
  Tag tag = Tag::NONPOS;
  double delta = 1.0;  // fixed to 1 for NONPOS so the formula set is total

  static CurvatureClass nonneg_pinched(double delta);
  static CurvatureClass nonpos();
  static CurvatureClass pinched_neg(double delta);

  // Constant curvature of the matching space form: +delta^2, 0, -delta^2.
  double space_form_curvature() const;
  std::string label() const;
};

double sin_delta(const CurvatureClass& c, double r);
double cos_delta(const CurvatureClass& c, double r);

// Rotationally symmetric warp psi for synthetic test ambients.
struct WarpSpec {
  enum class Family { SIN_DELTA, LINEAR, SINH_DELTA, PERTURBED_SIN };
  Family family = Family::LINEAR;
  double delta = 1.0;
  double eps = 0.0;  // PERTURBED_SIN only
  int m = 2;         // PERTURBED_SIN only, m >= 2
  double r_max = 1.0;

  static WarpSpec sin_delta(double delta, double r_max);
  static WarpSpec linear(double r_max);
  static WarpSpec sinh_delta(double delta, double r_max);
  static WarpSpec perturbed_sin(double delta, double eps, int m, double r_max);

  double psi(double r) const;
  double dpsi(double r) const;
  double ddpsi(double r) const;
  std::string label() const;
};

struct CurvatureCertificate {
  bool pass = false;
  double radial_min = 0, radial_max = 0;
  double tangential_min = 0, tangential_max = 0;
  double violating_r = std::numeric_limits<double>::quiet_NaN();
};

// Sectional-curvature sweep of a warped ambient against the band declared
// by the curvature class (slack 1e-9). K_radial = -psi''/psi,
// K_tangential = (1 - psi'^2)/psi^2.
CurvatureCertificate curvature_certificate(const WarpSpec& warp,
                                           const CurvatureClass& cls,
                                           int samples);

struct PolarPoint {
  double r = 0.0;
  Vec u;  // unit direction at the pole
};

// Ambient Riemannian manifold: constant curvature, rotationally symmetric
// warped product, or noncompact rank-1 symmetric space normalized to
// -4 <= K <= -1.
class AmbientModel {
 public:
  enum class Kind { CONSTANT, WARPED, RANK1 };

  static AmbientModel constant(int dim, double curvature);
  static AmbientModel warped(int dim, const WarpSpec& warp,
                             const CurvatureClass& cls);
  static AmbientModel rank1(int k, int n);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }          // ambient dimension
  int sphere_dim() const { return dim_ - 1; }  // parameter sphere S^{dim-1}
  double curvature() const { return curvature_; }  // CONSTANT only
  const CurvatureClass& curvature_class() const { return cls_; }
  const WarpSpec& warp() const;
  int rank1_k() const { return rank1_k_; }
  int rank1_n() const { return rank1_n_; }

  // Upper radius of validity for radial quantities (pi/(2 delta) for
  // NONNEG_PINCHED, r_max for WARPED, unbounded otherwise).
  double max_radius() const;

  // Volume density of the geodesic sphere of radius r (Jacobian of exp in
  // polar coordinates, with the unit-sphere measure split off).
  double density(double r) const;
  double density_derivative(double r) const;

  // First Laplace eigenvalue of the geodesic sphere S(r). CONSTANT and
  // RANK1 only; WARPED has no closed form.
  double sphere_eigenvalue(double r) const;

  double sphere_area(double r) const;
  double ball_volume(double r) const;
  double radius_from_volume(double volume) const;

  // Squared norm of a sphere-tangent vector w at direction u under the
  // geodesic-sphere metric at radius t: g_{S(t)}(w, w).
  double sphere_metric_norm_sq(double t, const Vec& u, const Vec& w) const;

  // Orthonormal vertical directions {J_a u} at u (RANK1; empty for k=1).
  std::vector<Vec> vertical_projectors(const Vec& u) const;

  // Comparison space form used for transplantation; CONSTANT and RANK1
  // models compare against themselves.
  AmbientModel model_space() const;

  std::string label() const;

  // ---- constant-curvature model geometry (CONSTANT only) ----
  // Points live in an embedding: R^dim when flat, the sphere of radius
  // 1/delta in R^{dim+1} for k > 0, the hyperboloid in Minkowski
  // R^{dim,1} for k < 0 (coordinate 0 is timelike).
  Vec pole() const;
  Vec embed(const PolarPoint& p) const;
  PolarPoint polar(const Vec& x) const;
  Vec exp_map(const Vec& base, const Vec& v) const;
  Vec log_map(const Vec& base, const Vec& q) const;
  double tangent_norm(const Vec& v) const;  // Lorentz norm when k < 0
  double distance(const Vec& a, const Vec& b) const;
  double geodesic_distance(const PolarPoint& a, const PolarPoint& b) const;

 private:
  AmbientModel() = default;
  void require_constant(const char* op) const;
  void check_radius(double r) const;

  Kind kind_ = Kind::CONSTANT;
  int dim_ = 3;
  double curvature_ = 0.0;
  CurvatureClass cls_;
  WarpSpec warp_;
  int rank1_k_ = 1, rank1_n_ = 2;
};

}  // namespace eigenbound
