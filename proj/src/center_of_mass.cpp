#include "eigenbound/center_of_mass.hpp"

#include <cmath>
#include <numbers>

namespace eigenbound {

MassDistribution MassDistribution::for_ambient(const AmbientModel& a) {
  if (a.kind() == AmbientModel::Kind::RANK1)
    return {Tag::SINH_OVER_R, CurvatureClass::pinched_neg(1.0)};
  return {Tag::SIN_DELTA_OVER_R, a.curvature_class()};
}

double MassDistribution::value(double r) const {
  if (r < 0.0) throw domain_error("MassDistribution: r < 0");
  if (tag == Tag::SINH_OVER_R) {
    if (r < 1e-4) return 1.0 + r * r / 6.0;
    return std::sinh(r) / r;
  }
  if (r < 1e-4) return 1.0 - cls.space_form_curvature() * r * r / 6.0;
  return sin_delta(cls, r) / r;
}

PointCloud embedded_surface(const RadialGraph& graph,
                            const SurfaceTable& table) {
  const AmbientModel& a = graph.ambient();
  const int n = table.size();
  const int e = a.pole().size();
  PointCloud cloud;
  cloud.points.resize(n, e);
  cloud.dm = table.dm_weight;
  for (int i = 0; i < n; ++i) {
    PolarPoint p{table.t[i], table.nodes.row(i)};
    cloud.points.row(i) = a.embed(p);
  }
  return cloud;
}

Vec moment(const AmbientModel& ambient, const PointCloud& cloud,
           const MassDistribution& G, const Vec& p, Exec exec) {
  const int n = static_cast<int>(cloud.points.rows());
  const int e = static_cast<int>(cloud.points.cols());
  const double r_valid = ambient.max_radius();
  Eigen::MatrixXd terms(n, e);
  std::vector<int> bad(static_cast<std::size_t>(n), 0);
  parallel_for(
      n,
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const Vec x = ambient.log_map(p, cloud.points.row(k));
        const double r = ambient.tangent_norm(x);
        if (r > r_valid) {
          bad[i] = 1;
          terms.row(k).setZero();
          return;
        }
        terms.row(k) = G.value(r) * cloud.dm[k] * x;
      },
      exec);
  for (int i = 0; i < n; ++i)
    if (bad[i])
      throw domain_error("moment: surface outside the validity radius of p");
  Vec m(e);
  for (int c = 0; c < e; ++c) {
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = terms(i, c);
    m[c] = pairwise_sum(col);
  }
  return m;
}

Vec pole_moment(const RadialGraph& graph, const SurfaceTable& table,
                const MassDistribution& G, Exec exec) {
  const int n = table.size();
  const int d = graph.ambient().dim();
  Eigen::MatrixXd terms(n, d);
  parallel_for(
      n,
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const double t = table.t[k];
        terms.row(k) =
            G.value(t) * t * table.dm_weight[k] * table.nodes.row(k);
      },
      exec);
  Vec m(d);
  for (int c = 0; c < d; ++c) {
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = terms(i, c);
    m[c] = pairwise_sum(col);
  }
  return m;
}

namespace {

double total_mass(const AmbientModel& ambient, const PointCloud& cloud,
                  const MassDistribution& G, const Vec& p, Exec exec) {
  const int n = static_cast<int>(cloud.points.rows());
  std::vector<double> terms(static_cast<std::size_t>(n));
  parallel_for(
      n,
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const double r = ambient.distance(p, cloud.points.row(k));
        terms[i] = G.value(r) * cloud.dm[k];
      },
      exec);
  return pairwise_sum(terms);
}

}  // namespace

CenterResult solve_center(const AmbientModel& ambient, const PointCloud& cloud,
                          const MassDistribution& G, const Vec& init,
                          double tol, int max_iter, Exec exec) {
  std::vector<double> dm(cloud.dm.data(), cloud.dm.data() + cloud.dm.size());
  const double vol = pairwise_sum(dm);
  CenterResult res;
  res.point = init;
  Vec m = moment(ambient, cloud, G, res.point, exec);
  res.moment_norm = ambient.tangent_norm(m);
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    if (res.moment_norm <= tol * vol) {
      res.converged = true;
      return res;
    }
    const double mass = total_mass(ambient, cloud, G, res.point, exec);
    double alpha = 1.0;
    bool accepted = false;
    while (alpha >= 1e-8) {
      const Vec trial = ambient.exp_map(res.point, (alpha / mass) * m);
      const Vec m_trial = moment(ambient, cloud, G, trial, exec);
      const double norm_trial = ambient.tangent_norm(m_trial);
      if (norm_trial < res.moment_norm) {
        res.point = trial;
        m = m_trial;
        res.moment_norm = norm_trial;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // stalled; report NOT_CONVERGED
  }
  res.converged = res.moment_norm <= tol * vol;
  return res;
}

CenterResult solve_center(const RadialGraph& graph, const DirectionGrid& grid,
                          const MassDistribution& G, double tol, int max_iter,
                          Exec exec) {
  const SurfaceTable table = evaluate(graph, grid, exec);
  const PointCloud cloud = embedded_surface(graph, table);
  return solve_center(graph.ambient(), cloud, G, graph.ambient().pole(), tol,
                      max_iter, exec);
}

}  // namespace eigenbound
