#pragma once

#include <Eigen/Dense>

namespace eigenbound {

// Gegenbauer polynomial C_l^alpha(s) via the three-term recurrence.
double gegenbauer(int l, double alpha, double s);

// d/ds C_l^alpha(s) = 2 alpha C_{l-1}^{alpha+1}(s).
double gegenbauer_derivative(int l, double alpha, double s);

// Zonal spherical harmonic of degree l on S^{d-1} with pole v, normalized
// to Z(v) = 1:  Z(u) = C_l^{(d-2)/2}(<u,v>) / C_l^{(d-2)/2}(1).
// Exactly band-limited of degree l; its sphere-tangential gradient is
// Z'(s) (v - s u) with s = <u,v>.
struct Zonal {
  int degree;
  int ambient_dim;  // d, sphere S^{d-1}

  double value(double s) const;
  double slope(double s) const;  // dZ/ds
};

}  // namespace eigenbound
