#pragma once

#include <functional>
#include <stdexcept>

namespace eigenbound {

// Surface area of the unit sphere S^{d-1} in R^d.
double unit_sphere_area(int d);

// Adaptive Gauss-Legendre integration of f over [a, b]. Subdivides until
// the local 15-point estimate agrees with the two-half refinement to the
// requested relative tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

struct RootOptions {
  double rel_tol = 1e-13;
  int max_iter = 200;
};

// Solves f(x) = target for strictly increasing f on [lo, hi]: bisection to a
// 1e-3 bracket, then Newton with df, falling back to bisection when a step
// leaves the bracket.
double solve_monotone(const std::function<double(double)>& f,
                      const std::function<double(double)>& df, double target,
                      double lo, double hi, const RootOptions& opts = {});

// AS241 inverse of the standard normal CDF (double precision).
double inverse_normal_cdf(double p);

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eigenbound
