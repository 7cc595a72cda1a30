#include "eigenbound/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <numbers>

#include "eigenbound/rng.hpp"

namespace eigenbound {

namespace {

void project_out_constants(const Eigen::VectorXd& m, Eigen::VectorXd& x) {
  const double c = m.dot(x) / m.sum();
  x.array() -= c;
}

double true_residual(const SpectralOperator& op, double lambda,
                     const Eigen::VectorXd& x) {
  const Eigen::VectorXd mx = op.lumped_mass.cwiseProduct(x);
  const Eigen::VectorXd r = op.stiffness * x - lambda * mx;
  return r.norm() / (lambda * mx.norm());
}

SpectralResult finalize(const SpectralOperator& op, double lambda,
                        Eigen::VectorXd x, int mesh_level) {
  project_out_constants(op.lumped_mass, x);
  x /= std::sqrt(x.dot(op.lumped_mass.cwiseProduct(x)));
  SpectralResult res;
  res.lambda1 = lambda;
  res.eigenvector = std::move(x);
  res.residual = true_residual(op, lambda, res.eigenvector);
  res.mesh_level = mesh_level;
  res.vertex_count = op.size();
  return res;
}

}  // namespace

SpectralResult smallest_positive_eigenvalue_dense(const SpectralOperator& op,
                                                  int mesh_level) {
  const int n = op.size();
  const Eigen::VectorXd minv_sqrt = op.lumped_mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd a = Eigen::MatrixXd(op.stiffness);
  a = minv_sqrt.asDiagonal() * a * minv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed");
  // index 0 is the constant mode (eigenvalue ~ 0)
  const double lambda = es.eigenvalues()[1];
  Eigen::VectorXd x = minv_sqrt.cwiseProduct(es.eigenvectors().col(1));
  (void)n;
  return finalize(op, lambda, std::move(x), mesh_level);
}

SpectralResult smallest_positive_eigenvalue_sparse(const SpectralOperator& op,
                                                   int mesh_level) {
  const int n = op.size();
  const Eigen::VectorXd& m = op.lumped_mass;
  const Eigen::VectorXd msqrt = m.cwiseSqrt();
  const Eigen::VectorXd minv_sqrt = msqrt.cwiseInverse();

  // Shift at roughly half the round-sphere eigenvalue for this area; any
  // positive value below lambda_2 keeps the separation good.
  const double sigma = 4.0 * std::numbers::pi / op.area;

  Eigen::SparseMatrix<double> shifted = op.stiffness;
  for (int i = 0; i < n; ++i) shifted.coeffRef(i, i) += sigma * m[i];
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(shifted);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("sparse factorization failed");

  const auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return msqrt.cwiseProduct(ldlt.solve(msqrt.cwiseProduct(v)));
  };

  // Lanczos on C = (A_std + sigma I)^{-1} with the constant mode deflated.
  Eigen::VectorXd v0 = msqrt / msqrt.norm();
  const int max_steps = std::min(n - 2, 150);
  Eigen::MatrixXd basis(n, max_steps + 1);
  Eigen::VectorXd alpha(max_steps), beta(max_steps);

  CounterRng rng(2718281828459045235ULL);
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = rng.gaussian(i);
  w -= v0 * v0.dot(w);
  w /= w.norm();
  basis.col(0) = w;

  int steps = 0;
  double theta = 0.0;
  Eigen::VectorXd ritz;
  for (int j = 0; j < max_steps; ++j) {
    Eigen::VectorXd z = apply(basis.col(j));
    z -= v0 * v0.dot(z);
    alpha[j] = basis.col(j).dot(z);
    z -= alpha[j] * basis.col(j);
    if (j > 0) z -= beta[j - 1] * basis.col(j - 1);
    for (int pass = 0; pass < 2; ++pass) {
      z -= v0 * v0.dot(z);
      for (int i = 0; i <= j; ++i) z -= basis.col(i) * basis.col(i).dot(z);
    }
    beta[j] = z.norm();
    steps = j + 1;
    bool stop = beta[j] < 1e-14;
    if (!stop && (j >= 9 && (j % 5 == 4 || j == max_steps - 1))) {
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
      for (int i = 0; i < steps; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(tri);
      theta = tes.eigenvalues()[steps - 1];
      ritz = tes.eigenvectors().col(steps - 1);
      if (beta[j] * std::abs(ritz[steps - 1]) <= 1e-12 * theta) break;
    }
    if (stop) break;
    basis.col(j + 1) = z / beta[j];
  }
  if (ritz.size() == 0) {
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
    for (int i = 0; i < steps; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(tri);
    theta = tes.eigenvalues()[steps - 1];
    ritz = tes.eigenvectors().col(steps - 1);
  }

  double lambda = 1.0 / theta - sigma;
  Eigen::VectorXd x =
      minv_sqrt.cwiseProduct(basis.leftCols(steps) * ritz.head(steps));
  project_out_constants(m, x);
  x /= std::sqrt(x.dot(m.cwiseProduct(x)));

  // Inverse-iteration polish with the existing factorization.
  for (int it = 0; it < 60; ++it) {
    lambda = x.dot(op.stiffness * x);
    if (true_residual(op, lambda, x) <= 1e-10) break;
    Eigen::VectorXd z = ldlt.solve(m.cwiseProduct(x));
    project_out_constants(m, z);
    z /= std::sqrt(z.dot(m.cwiseProduct(z)));
    x = z;
  }
  lambda = x.dot(op.stiffness * x);
  SpectralResult res = finalize(op, lambda, std::move(x), mesh_level);
  if (res.residual > 1e-8)
    throw std::runtime_error("sparse eigensolver failed to converge");
  return res;
}

SpectralResult smallest_positive_eigenvalue(const SpectralOperator& op,
                                            int mesh_level) {
  if (op.size() < 3000)
    return smallest_positive_eigenvalue_dense(op, mesh_level);
  return smallest_positive_eigenvalue_sparse(op, mesh_level);
}

namespace {

CurvatureClass radial_class(const AmbientModel& a) {
  if (a.kind() == AmbientModel::Kind::RANK1)
    return CurvatureClass::pinched_neg(1.0);
  return a.curvature_class();
}

// Lorentz- or Euclidean-orthonormal basis of the tangent space at p.
std::vector<Vec> tangent_frame(const AmbientModel& a, const Vec& p) {
  const int d = a.dim();
  std::vector<Vec> frame;
  if (a.curvature() == 0.0) {
    for (int i = 0; i < d; ++i) frame.push_back(Vec::Unit(d, i));
    return frame;
  }
  const bool lorentz = a.curvature() < 0.0;
  const double dd = a.curvature_class().delta * a.curvature_class().delta;
  auto inner = [&](const Vec& x, const Vec& y) {
    if (!lorentz) return x.dot(y);
    return -x[0] * y[0] + x.tail(d).dot(y.tail(d));
  };
  for (int i = 1; i <= d && static_cast<int>(frame.size()) < d; ++i) {
    Vec w = Vec::Unit(d + 1, i);
    // project onto the tangent space at p
    if (lorentz)
      w += dd * inner(w, p) * p;
    else
      w -= dd * inner(w, p) * p;
    for (const Vec& f : frame) w -= inner(w, f) * f;
    const double nw = std::sqrt(std::max(inner(w, w), 0.0));
    if (nw > 1e-8) frame.push_back(w / nw);
  }
  if (static_cast<int>(frame.size()) < d) {
    // fall back on the remaining axis (pole-aligned p)
    Vec w = Vec::Unit(d + 1, 0);
    if (lorentz)
      w += dd * inner(w, p) * p;
    else
      w -= dd * inner(w, p) * p;
    for (const Vec& f : frame) w -= inner(w, f) * f;
    const double nw = std::sqrt(std::max(inner(w, w), 0.0));
    if (nw > 1e-8) frame.push_back(w / nw);
  }
  if (static_cast<int>(frame.size()) != d)
    throw std::runtime_error("tangent_frame: failed to build a full frame");
  return frame;
}

}  // namespace

RayleighBound rayleigh_bound(const RadialGraph& graph, const TriMesh& mesh,
                             const SpectralOperator& op,
                             const std::optional<Vec>& center) {
  const AmbientModel& a = graph.ambient();
  const int nv = mesh.vertex_count();
  const int d = a.dim();
  const CurvatureClass cls = radial_class(a);
  Eigen::MatrixXd g(nv, d);
  if (!center) {
    for (int v = 0; v < nv; ++v) {
      const double f = sin_delta(cls, mesh.t[v]);
      g.row(v) = f * mesh.directions.row(v);
    }
  } else {
    const AmbientModel model = a.kind() == AmbientModel::Kind::RANK1
                                   ? AmbientModel::constant(d, -1.0)
                                   : a;
    const std::vector<Vec> frame = tangent_frame(model, *center);
    const bool lorentz = model.curvature() < 0.0;
    for (int v = 0; v < nv; ++v) {
      const Vec q = model.embed({mesh.t[v], mesh.directions.row(v)});
      const Vec x = model.log_map(*center, q);
      const double r = model.tangent_norm(x);
      const double f_over_r = (r < 1e-12) ? 1.0 : sin_delta(cls, r) / r;
      for (int i = 0; i < d; ++i) {
        double comp;
        if (model.curvature() == 0.0)
          comp = x[i];
        else if (lorentz)
          comp = -x[0] * frame[i][0] + x.tail(d).dot(frame[i].tail(d));
        else
          comp = x.dot(frame[i]);
        g(v, i) = f_over_r * comp;
      }
    }
  }
  const Eigen::VectorXd& m = op.lumped_mass;
  const double vol = m.sum();
  RayleighBound out;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd gi = g.col(i);
    const double defect = std::abs(m.dot(gi)) / vol;
    out.max_center_defect = std::max(out.max_center_defect, defect);
    if (defect > 1e-4)
      throw validation_error(
          "rayleigh_bound: center-of-mass precondition violated");
    project_out_constants(m, gi);
    num += gi.dot(op.stiffness * gi);
    den += gi.dot(m.cwiseProduct(gi));
  }
  out.bound = num / den;
  return out;
}

double coordinate_eigenfunction_residual_at(const AmbientModel& ambient,
                                            double R, int level, double lambda,
                                            Exec exec) {
  const RadialGraph sphere = make_geodesic_sphere(ambient, R);
  const TriMesh mesh = build_intrinsic_mesh(sphere, level, exec);
  const SpectralOperator op = assemble(mesh, exec);
  const Eigen::VectorXd& m = op.lumped_mass;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Eigen::VectorXd f = mesh.directions.col(i);
    const Eigen::VectorXd r = op.stiffness * f - lambda * m.cwiseProduct(f);
    const double num = std::sqrt((r.array().square() / m.array()).sum());
    const double den = std::sqrt(f.dot(m.cwiseProduct(f)));
    worst = std::max(worst, num / den);
  }
  return worst;
}

double coordinate_eigenfunction_residual(const AmbientModel& ambient, double R,
                                         int level, Exec exec) {
  return coordinate_eigenfunction_residual_at(
      ambient, R, level, ambient.sphere_eigenvalue(R), exec);
}

ConvergenceStudy convergence_study(const RadialGraph& graph,
                                   const std::vector<int>& levels, Exec exec) {
  if (levels.size() < 3)
    throw validation_error("convergence_study: at least 3 levels required");
  ConvergenceStudy study;
  study.levels = levels;
  for (int level : levels) {
    const TriMesh mesh = build_intrinsic_mesh(graph, level, exec);
    const SpectralOperator op = assemble(mesh, exec);
    study.lambdas.push_back(smallest_positive_eigenvalue(op, level).lambda1);
  }
  const auto& l = study.lambdas;
  const std::size_t k = l.size();
  const double d1 = l[k - 2] - l[k - 3];
  const double d2 = l[k - 1] - l[k - 2];
  study.monotone = d1 * d2 > 0.0 && std::abs(d2) < std::abs(d1);
  if (study.monotone) {
    study.observed_order = std::log2(std::abs(d1) / std::abs(d2));
    study.extrapolated =
        l[k - 1] + d2 / (std::pow(2.0, study.observed_order) - 1.0);
    study.fem_budget = 2.0 * std::abs(l[k - 1] - study.extrapolated);
  } else {
    study.observed_order = std::numeric_limits<double>::quiet_NaN();
    study.extrapolated = l[k - 1];
    study.fem_budget = 2.0 * std::abs(d2);
  }
  return study;
}

}  // namespace eigenbound
