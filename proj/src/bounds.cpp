#include "eigenbound/bounds.hpp"

#include <cmath>

namespace eigenbound {

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
      return "HOLDS";
    case Verdict::HOLDS_WITHIN_TOLERANCE:
      return "HOLDS_WITHIN_TOLERANCE";
    case Verdict::VIOLATED:
      return "VIOLATED";
    case Verdict::NOT_EVALUATED:
      return "NOT_EVALUATED";
  }
  return "?";
}

double radial_gradient_energy(const SurfaceTable& table,
                              const std::function<double(double)>& dfdr_sq,
                              Exec exec) {
  const int n = table.size();
  std::vector<double> terms(static_cast<std::size_t>(n));
  parallel_for(
      n,
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const double sec = table.sec_theta[k];
        const double grad_r_sq = 1.0 - 1.0 / (sec * sec);
        terms[i] = dfdr_sq(table.t[k]) * grad_r_sq * table.dm_weight[k];
      },
      exec);
  return pairwise_sum(terms);
}

double gradient_correction(const SurfaceTable& table, const CurvatureClass& cls,
                           Exec exec) {
  return radial_gradient_energy(
      table,
      [&cls](double t) {
        const double c = cos_delta(cls, t);
        return c * c;
      },
      exec);
}

BoundChecker::BoundChecker(const RadialGraph& graph, const DirectionGrid& grid,
                           Exec exec)
    : graph_(graph), exec_(exec) {
  table_ = evaluate(graph, grid, exec);
  table_coarse_ = evaluate(graph, coarser_grid(grid), exec);
}

BoundReport BoundChecker::assemble_report(const std::string& check,
                                          const Sides& fine,
                                          const Sides& coarse,
                                          double budget_fem) const {
  BoundReport r;
  r.check = check;
  r.lhs = fine.lhs;
  r.rhs = fine.rhs;
  r.comparison_radius = fine.radius;
  r.vol_m = fine.vol_m;
  r.vol_sphere = fine.vol_sphere;
  r.correction = fine.correction;
  r.lambda1 = fine.lambda1;
  r.lambda1_sphere = fine.lambda1_sphere;
  r.budget_fem = budget_fem;
  if (std::isnan(fine.lhs)) {
    r.verdict = Verdict::NOT_EVALUATED;
    return r;
  }
  r.margin = fine.rhs - fine.lhs;
  const double scale = std::abs(fine.lhs) + std::abs(fine.rhs);
  r.relative_margin = r.margin / std::max(scale, 1e-300);
  const double margin_coarse = coarse.rhs - coarse.lhs;
  r.budget_quadrature = std::abs(r.margin - margin_coarse) + 1e-12 * scale;
  r.error_budget = r.budget_quadrature + r.budget_fem;
  if (r.margin >= r.error_budget)
    r.verdict = Verdict::HOLDS;
  else if (r.margin < -r.error_budget)
    r.verdict = Verdict::VIOLATED;
  else
    r.verdict = Verdict::HOLDS_WITHIN_TOLERANCE;
  if (equality_class()) r.equality_gap = std::abs(r.margin);
  return r;
}

Eigen::VectorXd BoundChecker::distances(const SurfaceTable& table,
                                        const std::optional<Vec>& p) const {
  if (!p) return table.t;
  const AmbientModel& a = graph_.ambient();
  if (a.kind() != AmbientModel::Kind::CONSTANT)
    throw unsupported_error(
        "bounds: off-pole base points need a constant-curvature ambient");
  Eigen::VectorXd d(table.size());
  parallel_for(
      table.size(),
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const Vec q = a.embed({table.t[k], table.nodes.row(k)});
        d[k] = a.distance(*p, q);
      },
      exec_);
  return d;
}

void BoundChecker::require_warped_certificate(const char* check) const {
  const AmbientModel& a = graph_.ambient();
  if (a.kind() != AmbientModel::Kind::WARPED) return;
  const CurvatureCertificate cert =
      curvature_certificate(a.warp(), a.curvature_class(), 512);
  if (!cert.pass)
    throw validation_error(std::string(check) +
                           ": warped ambient fails its curvature certificate");
}

BoundReport BoundChecker::lemma1(const std::optional<Vec>& p) const {
  const AmbientModel& a = graph_.ambient();
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const Eigen::VectorXd d = distances(table, p);
    if (a.kind() == AmbientModel::Kind::RANK1) {
      const double vol = domain_volume(graph_, table, exec_);
      s.radius = a.radius_from_volume(vol);
      const double shr = std::sinh(s.radius);
      s.vol_sphere = a.sphere_area(s.radius);
      s.rhs = s.vol_sphere * shr * shr;
      Eigen::VectorXd f(d.size());
      for (int i = 0; i < d.size(); ++i) {
        const double sh = std::sinh(d[i]);
        f[i] = sh * sh;
      }
      s.lhs = surface_integral(table, f);
    } else {
      const AmbientModel model = a.model_space();
      const CurvatureClass cls = model.curvature_class();
      const double vol = transplant_volume(graph_, table, exec_);
      s.radius = model.radius_from_volume(vol);
      const double sd = sin_delta(cls, s.radius);
      s.vol_sphere = model.sphere_area(s.radius);
      s.rhs = s.vol_sphere * sd * sd;
      Eigen::VectorXd f(d.size());
      for (int i = 0; i < d.size(); ++i) {
        const double v = sin_delta(cls, d[i]);
        f[i] = v * v;
      }
      s.lhs = surface_integral(table, f);
    }
    return s;
  };
  return assemble_report("LEMMA1", sides(table_), sides(table_coarse_), 0.0);
}

BoundReport BoundChecker::lemma2(const std::optional<Vec>& p) const {
  const AmbientModel& a = graph_.ambient();
  if (a.kind() != AmbientModel::Kind::RANK1)
    throw unsupported_error("lemma2: rank-1 ambients only");
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const double vol = domain_volume(graph_, table, exec_);
    s.radius = a.radius_from_volume(vol);
    const double th = std::tanh(s.radius);
    s.vol_sphere = a.sphere_area(s.radius);
    s.rhs = s.vol_sphere * th * th;
    const Eigen::VectorXd d = distances(table, p);
    Eigen::VectorXd f(d.size());
    for (int i = 0; i < d.size(); ++i) {
      const double t = std::tanh(d[i]);
      f[i] = t * t;
    }
    s.lhs = surface_integral(table, f);
    return s;
  };
  return assemble_report("LEMMA2", sides(table_), sides(table_coarse_), 0.0);
}

BoundReport BoundChecker::lemma_l2() const {
  const AmbientModel& a = graph_.ambient();
  if (a.kind() == AmbientModel::Kind::RANK1)
    throw unsupported_error("lemma_l2: constant or warped ambients only");
  require_warped_certificate("lemma_l2");
  // The per-vector Jacobi estimate needs sin_delta(r) <= r, so ambients
  // with K <= -delta^2 go through the K <= 0 branch of the hypothesis
  // (which their curvature bound also satisfies).
  CurvatureClass bound_cls = a.curvature_class();
  if (bound_cls.tag == CurvatureClass::Tag::PINCHED_NEG)
    bound_cls = CurvatureClass::nonpos();
  const int n = a.dim() - 1;
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < table.size(); ++i) {
      const double t = table.t[i];
      const double q = table.grad.row(i).squaredNorm();
      const double s_ind = a.kind() == AmbientModel::Kind::CONSTANT
                               ? sin_delta(a.curvature_class(), t)
                               : a.warp().psi(t);
      const double coord_sum = (q + t * t) / (q + s_ind * s_ind) +
                               (n - 1) * t * t / (s_ind * s_ind);
      const double sb = sin_delta(bound_cls, t);
      const double bound = n * t * t / (sb * sb);
      if (coord_sum - bound > worst) {
        worst = coord_sum - bound;
        s.lhs = coord_sum;
        s.rhs = bound;
      }
    }
    return s;
  };
  return assemble_report("LEMMA_L2", sides(table_), sides(table_coarse_), 0.0);
}

BoundReport BoundChecker::theorem1(const SpectralInput& spectral) const {
  const AmbientModel& a = graph_.ambient();
  const auto tag = a.curvature_class().tag;
  if (a.kind() == AmbientModel::Kind::RANK1 ||
      tag == CurvatureClass::Tag::PINCHED_NEG)
    throw validation_error("theorem1: needs 0 <= K <= delta^2 or K <= 0");
  require_warped_certificate("theorem1");
  const AmbientModel model = a.model_space();
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const double vol = transplant_volume(graph_, table, exec_);
    s.radius = model.radius_from_volume(vol);
    s.vol_sphere = model.sphere_area(s.radius);
    s.lambda1_sphere = model.sphere_eigenvalue(s.radius);
    s.lambda1 = spectral.lambda1;
    s.lhs = s.lambda1 / s.lambda1_sphere;
    s.rhs = s.vol_m / s.vol_sphere;
    return s;
  };
  const Sides fine = sides(table_);
  return assemble_report("THM1", fine, sides(table_coarse_),
                         spectral.fem_budget / fine.lambda1_sphere);
}

BoundReport BoundChecker::theorem2(const SpectralInput& spectral) const {
  const AmbientModel& a = graph_.ambient();
  if (a.kind() == AmbientModel::Kind::RANK1 ||
      a.curvature_class().tag != CurvatureClass::Tag::PINCHED_NEG)
    throw validation_error("theorem2: needs K <= -delta^2");
  require_warped_certificate("theorem2");
  const AmbientModel model = a.model_space();
  const int n = a.dim() - 1;
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const double vol = transplant_volume(graph_, table, exec_);
    s.radius = model.radius_from_volume(vol);
    s.vol_sphere = model.sphere_area(s.radius);
    s.lambda1_sphere = model.sphere_eigenvalue(s.radius);
    s.lambda1 = spectral.lambda1;
    s.correction = gradient_correction(table, model.curvature_class(), exec_);
    s.lhs = s.lambda1 / s.lambda1_sphere;
    s.rhs = s.vol_m / s.vol_sphere + s.correction / (n * s.vol_sphere);
    return s;
  };
  const Sides fine = sides(table_);
  return assemble_report("THM2", fine, sides(table_coarse_),
                         spectral.fem_budget / fine.lambda1_sphere);
}

BoundReport BoundChecker::theorem3(const std::optional<SpectralInput>& spectral,
                                   bool sharp_form) const {
  const AmbientModel& a = graph_.ambient();
  if (a.kind() != AmbientModel::Kind::RANK1)
    throw unsupported_error("theorem3: rank-1 ambients only");
  const int k = a.rank1_k();
  const int kn = a.dim();
  double lambda1 = std::numeric_limits<double>::quiet_NaN();
  double fem_budget = 0.0;
  if (spectral) {
    lambda1 = spectral->lambda1;
    fem_budget = spectral->fem_budget;
  } else if (equality_class()) {
    lambda1 = a.sphere_eigenvalue(graph_.base_radius());
  } else if (k == 1) {
    throw validation_error("theorem3: k=1 needs a FEM eigenvalue");
  }
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const double vol = domain_volume(graph_, table, exec_);
    s.radius = a.radius_from_volume(vol);
    s.vol_sphere = a.sphere_area(s.radius);
    s.lambda1_sphere = a.sphere_eigenvalue(s.radius);
    s.lambda1 = lambda1;
    s.correction = radial_gradient_energy(
        table,
        [](double t) {
          const double c = std::cosh(t);
          return c * c;
        },
        exec_);
    const double shr = std::sinh(s.radius);
    const double chr = std::cosh(s.radius);
    if (k == 1) {
      s.lhs = lambda1 / s.lambda1_sphere;
      s.rhs =
          s.vol_m / s.vol_sphere + s.correction / ((kn - 1) * s.vol_sphere);
    } else if (!sharp_form) {
      s.lhs = lambda1;
      s.rhs = s.lambda1_sphere * s.vol_m / s.vol_sphere +
              (k - 1) / (chr * chr) * s.vol_m / s.vol_sphere +
              s.correction / (shr * shr * s.vol_sphere);
    } else {
      const double th = std::tanh(s.radius);
      s.lhs = lambda1 * s.vol_sphere * shr * shr;
      s.rhs = (kn - 1) * s.vol_m - (k - 1) * th * th * s.vol_sphere +
              s.correction;
    }
    return s;
  };
  const Sides fine = sides(table_);
  double fem_scaled = 0.0;
  if (k == 1)
    fem_scaled = fem_budget / fine.lambda1_sphere;
  else if (!sharp_form)
    fem_scaled = fem_budget;
  else
    fem_scaled = fem_budget * fine.vol_sphere * std::sinh(fine.radius) *
                 std::sinh(fine.radius);
  BoundReport r = assemble_report(sharp_form ? "THM3_SHARP" : "THM3_STATED",
                                  fine, sides(table_coarse_), fem_scaled);
  r.equality_gap_structural = (!sharp_form && k > 1);
  return r;
}

BoundReport BoundChecker::remark_hn(const SpectralInput& spectral) const {
  const AmbientModel& a = graph_.ambient();
  const bool hyperbolic_constant =
      a.kind() == AmbientModel::Kind::CONSTANT && a.curvature() == -1.0;
  const bool rank1_real =
      a.kind() == AmbientModel::Kind::RANK1 && a.rank1_k() == 1;
  if (!hyperbolic_constant && !rank1_real)
    throw validation_error("remark_hn: real hyperbolic space only");
  const int n = a.dim();
  auto sides = [&](const SurfaceTable& table) {
    Sides s;
    s.vol_m = surface_volume(table);
    const double vol = domain_volume(graph_, table, exec_);
    s.radius = a.radius_from_volume(vol);
    s.vol_sphere = a.sphere_area(s.radius);
    s.lambda1_sphere = a.sphere_eigenvalue(s.radius);
    s.lambda1 = spectral.lambda1;
    s.correction = radial_gradient_energy(
        table,
        [](double t) {
          const double sh = std::sinh(t);
          return sh * sh;
        },
        exec_);
    s.lhs = s.lambda1 / s.lambda1_sphere;
    s.rhs = s.vol_m / s.vol_sphere + s.correction / ((n - 1) * s.vol_sphere);
    return s;
  };
  const Sides fine = sides(table_);
  return assemble_report("REMARK_HN", fine, sides(table_coarse_),
                         spectral.fem_budget / fine.lambda1_sphere);
}

}  // namespace eigenbound
