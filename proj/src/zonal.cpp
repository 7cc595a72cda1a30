#include "eigenbound/zonal.hpp"

namespace eigenbound {

double gegenbauer(int l, double alpha, double s) {
  if (l == 0) return 1.0;
  double cm2 = 1.0;
  double cm1 = 2.0 * alpha * s;
  for (int j = 2; j <= l; ++j) {
    const double c =
        (2.0 * (j + alpha - 1.0) * s * cm1 - (j + 2.0 * alpha - 2.0) * cm2) / j;
    cm2 = cm1;
    cm1 = c;
  }
  return cm1;
}

double gegenbauer_derivative(int l, double alpha, double s) {
  if (l == 0) return 0.0;
  return 2.0 * alpha * gegenbauer(l - 1, alpha + 1.0, s);
}

double Zonal::value(double s) const {
  const double alpha = 0.5 * (ambient_dim - 2);
  return gegenbauer(degree, alpha, s) / gegenbauer(degree, alpha, 1.0);
}

double Zonal::slope(double s) const {
  const double alpha = 0.5 * (ambient_dim - 2);
  return gegenbauer_derivative(degree, alpha, s) /
         gegenbauer(degree, alpha, 1.0);
}

}  // namespace eigenbound
